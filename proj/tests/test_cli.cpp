#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hoco/arrowcat.hpp"
#include "hoco/cli.hpp"
#include "hoco/dold_kan.hpp"
#include "hoco/fincat.hpp"
#include "hoco/matfp.hpp"

namespace ar = hoco::arrowcat;
namespace dk = hoco::dold_kan;
namespace mf = hoco::matfp;
using hoco::fincat::FinSetCat;
using hoco::fincat::FinSetMap;
using nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = hoco::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string data_path(const std::string& name) {
  return std::string(HOCO_SOURCE_DIR) + "/data/" + name;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = (std::filesystem::temp_directory_path() / name).string();
  std::ofstream f(path, std::ios::binary);
  f << text;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"validate"}).code == 2);
  CHECK(run_cli({"validate", "--input"}).code == 2);
  CHECK(run_cli({"suite", "--no-such-flag"}).code == 2);
  CHECK(run_cli({"validate", "--input", "x.json", "--format", "xml"}).code == 2);
  CHECK(run_cli({"suite", "--probe-max-size", "moose"}).code == 2);

  const auto help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("suite") != std::string::npos);

  const auto version = run_cli({"--version"});
  CHECK(version.code == 0);
  CHECK(version.out.find("0.1.0") != std::string::npos);
}

TEST_CASE("input problems exit with code 2 and a diagnostic path") {
  const auto missing = run_cli({"validate", "--input", "/no/such/file.json"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("cannot open input file") != std::string::npos);

  const auto bad = [](const std::string& name, const std::string& text,
                      const std::string& needle) {
    const auto path = write_temp(name, text);
    const auto r = run_cli({"validate", "--input", path});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find(needle) != std::string::npos);
  };
  bad("hoco_bad_json.json", "{", "invalid JSON");
  bad("hoco_bad_key.json", R"({"base":"finset","extras":{}})", "unknown key");
  bad("hoco_bad_base.json", R"({"base":"poset"})", "/base");
  bad("hoco_bad_prime.json", R"({"base":{"mat":{"prime":6}}})", "6 is not prime");
  bad("hoco_bad_entry.json",
      R"({"base":{"mat":{"prime":2}},"morphisms":{"m":{"cols":1,"e":[[2]],"p":2,"rows":1}}})",
      "/morphisms/m");
  bad("hoco_bad_tab.json",
      R"({"base":"finset","morphisms":{"f":{"cod":1,"dom":2,"tab":[0,7]}}})", "/morphisms/f");
  bad("hoco_bad_square.json",
      R"({"base":"finset",
          "morphisms":{"f":{"cod":1,"dom":2,"tab":[0,0]},"p":{"cod":2,"dom":1,"tab":[0]}},
          "squares":{"s":{"bottom":{"cod":2,"dom":1,"tab":[1]},"dst":"p","src":"f",
                          "top":{"cod":1,"dom":2,"tab":[0,0]}}}})",
      "/squares/s");
  bad("hoco_dangling.json",
      R"({"base":"finset","squares":{"s":{"bottom":{"cod":1,"dom":1,"tab":[0]},"dst":"g",
          "src":"g","top":{"cod":1,"dom":1,"tab":[0]}}}})",
      "unknown morphism");
  bad("hoco_rg_finset.json", R"({"base":"finset","rgraphs":{}})", "matrix base");
  bad("hoco_bad_diag.json",
      R"({"base":"finset",
          "morphisms":{"f":{"cod":1,"dom":2,"tab":[0,0]},"p":{"cod":2,"dom":1,"tab":[0]}},
          "squares":{"s":{"bottom":{"cod":2,"dom":1,"tab":[0]},"dst":"p","src":"f",
                          "top":{"cod":1,"dom":2,"tab":[0,0]}}},
          "nullhomotopies":{"n":{"diagonal":{"cod":2,"dom":1,"tab":[1]},"square":"s"}}})",
      "not a nullhomotopy");
}

TEST_CASE("validate reports the census of well-formed instances") {
  for (const std::string file : {"finset_basic.json", "mat_basic.json"}) {
    const auto r = run_cli({"validate", "--input", data_path(file)});
    CHECK(r.code == 0);
    const auto env = json::parse(r.out);
    CHECK(env["status"] == "pass");
    CHECK(env["version"] == "0.1.0");
    CHECK(env["checks"][0]["name"] == "instance-is-well-formed");
    CHECK(env["checks"][0]["cases"].get<std::size_t>() == 8);
    CHECK(r.err.find("elapsed-ms=") != std::string::npos);
  }
  const auto fin =
      json::parse(run_cli({"validate", "--input", data_path("finset_basic.json")}).out);
  CHECK(fin["result"]["base"] == "finset");
  CHECK(fin["result"]["counts"]["morphisms"] == 3);
  CHECK(fin["result"]["counts"]["spans"] == 1);
  const auto mat =
      json::parse(run_cli({"validate", "--input", data_path("mat_basic.json")}).out);
  CHECK(mat["result"]["base"]["mat"]["prime"] == 2);
  CHECK(mat["result"]["counts"]["rgraphs"] == 1);
}

TEST_CASE("cokernel output matches the library computation") {
  const auto r =
      run_cli({"cokernel", "--input", data_path("finset_basic.json"), "--name", "collapse"});
  REQUIRE(r.code == 0);
  const auto env = json::parse(r.out);

  const FinSetCat fc;
  const auto sq = ar::make_square(fc, ar::ArrObject<FinSetCat>{FinSetMap{2, 1, {0, 0}}},
                                  ar::ArrObject<FinSetCat>{FinSetMap{1, 2, {0}}},
                                  FinSetMap{2, 1, {0, 0}}, FinSetMap{1, 2, {0}});
  const auto t = ar::homotopy_cokernel(fc, sq);
  CHECK(env["result"]["obj"] == json::parse(ar::describe_obj(fc, t.obj)));
  CHECK(env["result"]["c"] == json::parse(ar::describe_map(fc, t.c)));
  CHECK(env["result"]["gamma"] == json::parse(fc.describe_map(t.gamma)));
  CHECK(env["result"]["source"] == json::parse(ar::describe_map(fc, sq)));
  CHECK(env["checks"].empty());
  CHECK(env["status"] == "pass");
}

TEST_CASE("check-universal passes on the sample instances") {
  for (const std::string file : {"finset_basic.json", "mat_basic.json"}) {
    const auto r =
        run_cli({"check-universal", "--input", data_path(file), "--probe-max-size", "1"});
    CHECK(r.code == 0);
    const auto env = json::parse(r.out);
    CHECK(env["status"] == "pass");
    CHECK(env["checks"].size() == 1);
    CHECK(env["checks"][0]["cases"].get<std::size_t>() > 0);
  }
}

TEST_CASE("extend verifies the extension and emits images") {
  const auto r = run_cli({"extend", "--input", data_path("finset_basic.json"),
                          "--probe-max-size", "1", "--name", "collapse"});
  REQUIRE(r.code == 0);
  const auto env = json::parse(r.out);
  CHECK(env["status"] == "pass");
  CHECK(env["result"]["image"].contains("top"));

  const auto r2 = run_cli({"extend", "--input", data_path("finset_basic.json"),
                           "--probe-max-size", "1", "--name", "fold"});
  REQUIRE(r2.code == 0);
  CHECK(json::parse(r2.out)["result"]["image"].contains("a"));
}

TEST_CASE("matrix subcommands verify and roundtrip") {
  const auto norm =
      run_cli({"normalize", "--input", data_path("mat_basic.json"), "--name", "edge-loop"});
  REQUIRE(norm.code == 0);
  const auto nenv = json::parse(norm.out);
  CHECK(nenv["status"] == "pass");
  CHECK(nenv["result"]["arrow"]["e"] == json::parse("[[1]]"));
  CHECK(nenv["checks"][0]["name"] == "kernel-basis-laws");

  const auto den =
      run_cli({"denormalize", "--input", data_path("mat_basic.json"), "--name", "one"});
  REQUIRE(den.code == 0);
  const auto denv = json::parse(den.out);
  CHECK(denv["status"] == "pass");
  CHECK(denv["result"] == json::parse(dk::describe_obj(dk::denormalize_object(mf::mat(2, {{1u}})))));

  const auto iso =
      run_cli({"dk-iso", "--input", data_path("mat_basic.json"), "--name", "edge-loop"});
  REQUIRE(iso.code == 0);
  const auto ienv = json::parse(iso.out);
  CHECK(ienv["status"] == "pass");
  CHECK(ienv["result"].contains("forward"));
  CHECK(ienv["result"].contains("backward"));

  const auto tc = run_cli({"two-cells", "--input", data_path("mat_basic.json")});
  REQUIRE(tc.code == 0);
  const auto tenv = json::parse(tc.out);
  CHECK(tenv["status"] == "pass");
  CHECK(tenv["result"]["diagonal-counts"]["null-square"] == 1);
}

TEST_CASE("matrix-only subcommands reject a finite-set instance") {
  for (const std::string cmd : {"normalize", "denormalize", "dk-iso", "two-cells"}) {
    const auto r =
        run_cli({cmd, "--input", data_path("finset_basic.json"), "--name", "fold"});
    CHECK(r.code == 2);
    CHECK(r.err.find("matrix-base instance") != std::string::npos);
  }
}

TEST_CASE("unknown entity names are usage errors") {
  CHECK(run_cli({"cokernel", "--input", data_path("finset_basic.json"), "--name", "nope"})
            .code == 2);
  CHECK(run_cli({"check-universal", "--input", data_path("finset_basic.json"), "--name",
                 "nope"})
            .code == 2);
  CHECK(run_cli({"extend", "--input", data_path("finset_basic.json"), "--probe-max-size",
                 "1", "--name", "nope"})
            .code == 2);
  CHECK(run_cli({"normalize", "--input", data_path("mat_basic.json"), "--name", "nope"})
            .code == 2);
  CHECK(run_cli({"denormalize", "--input", data_path("mat_basic.json"), "--name", "nope"})
            .code == 2);
  CHECK(run_cli({"suite", "--prime", "4"}).code == 2);
}

TEST_CASE("suite reports are deterministic and exhaustive checks pass") {
  const std::vector<std::string> args = {"suite", "--probe-max-size", "1", "--max-dim", "1"};
  const auto r1 = run_cli(args);
  const auto r2 = run_cli(args);
  REQUIRE(r1.code == 0);
  CHECK(r1.out == r2.out);
  const auto env = json::parse(r1.out);
  CHECK(env["status"] == "pass");
  REQUIRE(env["checks"].size() == 10);
  for (const auto& c : env["checks"]) {
    CHECK(c["status"] == "pass");
    CHECK(c["cases"].get<std::size_t>() > 0);
  }
  CHECK(env["params"]["probe-max-size"] == 1);
  CHECK(env["params"]["seed"] == 0);

  const auto seeded = run_cli({"suite", "--probe-max-size", "1", "--max-dim", "1", "--seed",
                               "7"});
  CHECK(seeded.code == 0);
  CHECK(json::parse(seeded.out)["params"]["seed"] == 7);
}

TEST_CASE("reports can be written to a file in text format") {
  const auto path = (std::filesystem::temp_directory_path() / "hoco_report.txt").string();
  const auto r = run_cli({"validate", "--input", data_path("finset_basic.json"), "--format",
                          "text", "--output", path});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  CHECK(slurp(path).find("PASS instance-is-well-formed (8 cases)") != std::string::npos);

  const auto text = run_cli({"two-cells", "--input", data_path("mat_basic.json"), "--format",
                             "text"});
  REQUIRE(text.code == 0);
  CHECK(text.out.find("PASS two-cell-counts:null-square") != std::string::npos);

  const auto unwritable = run_cli({"validate", "--input", data_path("finset_basic.json"),
                                   "--output", "/no/such/dir/report.json"});
  CHECK(unwritable.code == 2);
  CHECK(unwritable.err.find("cannot open output file") != std::string::npos);
}
