#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hoco/arrowcat.hpp"
#include "hoco/completion.hpp"
#include "hoco/core.hpp"
#include "hoco/dold_kan.hpp"
#include "hoco/instance.hpp"
#include "hoco/report_io.hpp"
#include "hoco/suite.hpp"

// Command-line front end. Everything is driven through run() so tests can
// exercise the binary in process; stdout carries the report, stderr carries
// diagnostics and timing, and the exit code separates failed checks (1) from
// unusable input (2).
namespace hoco::cli {

namespace ar = hoco::arrowcat;
namespace cm = hoco::completion;
namespace dk = hoco::dold_kan;
namespace mf = hoco::matfp;

using nlohmann::json;

namespace detail {

struct Opts {
  std::string input;
  std::string output;
  std::string format = "json";
  std::string name;
  std::size_t probe = 2;
  unsigned prime = 2;
  std::size_t max_dim = 2;
  std::uint64_t seed = 0;
};

inline void require_prime(unsigned p) {
  if (p < 2) throw Error("--prime must be a prime number, got " + std::to_string(p));
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) throw Error("--prime must be a prime number, got " + std::to_string(p));
}

inline int emit(const json& env, const Opts& o, std::ostream& out) {
  const std::string text = report::render(env, o.format);
  if (o.output.empty()) {
    out << text;
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) throw Error("cannot open output file: " + o.output);
    f << text;
  }
  return env["status"] == "pass" ? 0 : 1;
}

template <class Inst>
auto select_squares(const Inst& ins, const std::string& name) {
  std::vector<std::pair<std::string, typename decltype(ins.squares)::mapped_type>> sel;
  if (name.empty()) {
    for (const auto& [k, v] : ins.squares) sel.emplace_back(k, v);
  } else {
    const auto it = ins.squares.find(name);
    if (it == ins.squares.end()) throw Error("unknown square \"" + name + "\"");
    sel.emplace_back(it->first, it->second);
  }
  return sel;
}

inline const dk::RGObject& find_rgraph(const instance::MatInstance& ins,
                                       const std::string& name) {
  const auto it = ins.rgraphs.find(name);
  if (it == ins.rgraphs.end()) throw Error("unknown reflexive graph \"" + name + "\"");
  return it->second;
}

inline const instance::MatInstance& require_mat(const instance::AnyInstance& any,
                                                const std::string& command) {
  const auto* ins = std::get_if<instance::MatInstance>(&any);
  if (!ins) throw Error(command + " requires a matrix-base instance");
  return *ins;
}

inline json census_json(const instance::AnyInstance& any) {
  return std::visit(
      [](const auto& ins) {
        json counts{{"morphisms", ins.morphisms.size()},
                    {"nullhomotopies", ins.nullhomotopies.size()},
                    {"objects", ins.objects.size()},
                    {"spans", ins.spans.size()},
                    {"squares", ins.squares.size()}};
        json base = "finset";
        if constexpr (std::is_same_v<std::decay_t<decltype(ins)>, instance::MatInstance>) {
          counts["rgraphs"] = ins.rgraphs.size();
          base = json{{"mat", {{"prime", ins.base.p}}}};
        }
        return json{{"base", base}, {"counts", counts}};
      },
      any);
}

inline int run_validate(const Opts& o, std::ostream& out) {
  const auto any = instance::load_instance(o.input);
  CheckReport rep;
  rep.name = "instance-is-well-formed";
  rep.cases = instance::entity_count(any);
  const json params{{"input", o.input}};
  return emit(report::envelope("validate", params, {rep}, census_json(any)), o, out);
}

inline int run_cokernel(const Opts& o, std::ostream& out) {
  const auto any = instance::load_instance(o.input);
  return std::visit(
      [&](const auto& ins) {
        const auto& base = ins.base;
        const auto sel = select_squares(ins, o.name);
        const auto t = ar::homotopy_cokernel(base, sel.front().second);
        const json result{{"c", json::parse(ar::describe_map(base, t.c))},
                          {"gamma", json::parse(base.describe_map(t.gamma))},
                          {"obj", json::parse(ar::describe_obj(base, t.obj))},
                          {"source", json::parse(ar::describe_map(base, t.source))}};
        const json params{{"input", o.input}, {"name", o.name}};
        return emit(report::envelope("cokernel", params, {}, result), o, out);
      },
      any);
}

inline int run_check_universal(const Opts& o, std::ostream& out) {
  const auto any = instance::load_instance(o.input);
  return std::visit(
      [&](const auto& ins) {
        const auto& base = ins.base;
        using C = std::decay_t<decltype(base)>;
        const ar::ArrCat<C> ac{base};
        auto probes = ac.objects(o.probe);
        for (const auto& [k, m] : ins.morphisms) probes.push_back(ar::ArrObject<C>{m});
        std::vector<CheckReport> checks;
        for (const auto& [name, sq] : select_squares(ins, o.name)) {
          auto rep = ar::check_universal(base, sq, probes);
          rep.name = "cokernel-universal:" + name;
          rep.params = "probe-max-size=" + std::to_string(o.probe);
          checks.push_back(rep);
        }
        json params{{"input", o.input}, {"probe-max-size", o.probe}};
        if (!o.name.empty()) params["name"] = o.name;
        return emit(report::envelope("check-universal", params, checks), o, out);
      },
      any);
}

inline int run_extend(const Opts& o, std::ostream& out) {
  const auto any = instance::load_instance(o.input);
  return std::visit(
      [&](const auto& ins) {
        const auto& base = ins.base;
        using C = std::decay_t<decltype(base)>;
        const auto tgt = cm::arrow_target(base);
        auto ext = cm::extend_functor(base, ar::gamma_functor(base), tgt);
        auto rep = cm::check_extension(ext, o.probe);
        json result = nullptr;
        if (!o.name.empty()) {
          if (const auto it = ins.squares.find(o.name); it != ins.squares.end())
            result = json{{"image", json::parse(ar::describe_map(base, ext.map(it->second)))}};
          else if (const auto jt = ins.morphisms.find(o.name); jt != ins.morphisms.end())
            result = json{
                {"image",
                 json::parse(ar::describe_obj(base, ext.obj(ar::ArrObject<C>{jt->second})))}};
          else
            throw Error("unknown square or morphism \"" + o.name + "\"");
        }
        json params{{"input", o.input}, {"probe-max-size", o.probe}};
        if (!o.name.empty()) params["name"] = o.name;
        return emit(report::envelope("extend", params, {rep}, result), o, out);
      },
      any);
}

inline int run_normalize(const Opts& o, std::ostream& out) {
  const auto any = instance::load_instance(o.input);
  const auto& ins = require_mat(any, "normalize");
  const auto& g = find_rgraph(ins, o.name);
  const auto na = dk::normalize_object(g);
  CheckReport rep;
  rep.name = "kernel-basis-laws";
  rep.cases = 2;
  if (!(mf::mul(g.c, na.k) == na.arrow &&
        mf::mul(g.d, na.k) == mf::zeros(ins.base.p, dk::dim0(g), na.k.cols))) {
    rep.pass = false;
    rep.witness = "{\"graph\":" + dk::describe_obj(g) + "}";
  }
  const json result{{"arrow", json::parse(mf::describe(na.arrow))},
                    {"kernel-basis", json::parse(mf::describe(na.k))}};
  const json params{{"input", o.input}, {"name", o.name}};
  return emit(report::envelope("normalize", params, {rep}, result), o, out);
}

inline int run_denormalize(const Opts& o, std::ostream& out) {
  const auto any = instance::load_instance(o.input);
  const auto& ins = require_mat(any, "denormalize");
  const auto it = ins.morphisms.find(o.name);
  if (it == ins.morphisms.end()) throw Error("unknown morphism \"" + o.name + "\"");
  const auto g = dk::denormalize_object(it->second);
  CheckReport rep;
  rep.name = "presentation-normalizes-back";
  rep.cases = 1;
  const auto na = dk::normalize_object(g);
  if (!(na.arrow == it->second && na.k == mf::inj2(ins.base.p, it->second.rows, it->second.cols))) {
    rep.pass = false;
    rep.witness = "{\"matrix\":" + mf::describe(it->second) + "}";
  }
  const json result = json::parse(dk::describe_obj(g));
  const json params{{"input", o.input}, {"name", o.name}};
  return emit(report::envelope("denormalize", params, {rep}, result), o, out);
}

inline int run_dk_iso(const Opts& o, std::ostream& out) {
  const auto any = instance::load_instance(o.input);
  const auto& ins = require_mat(any, "dk-iso");
  const auto& g = find_rgraph(ins, o.name);
  const auto iso = dk::dk_iso(g);
  CheckReport rep;
  rep.name = "splitting-composites-are-identity";
  rep.cases = 2;
  const std::size_t split = dk::dim0(g) + mf::kernel_basis(g.d).cols;
  if (!(mf::mul(iso.second, iso.first) == mf::mat_identity(ins.base.p, dk::dim1(g)) &&
        mf::mul(iso.first, iso.second) == mf::mat_identity(ins.base.p, split))) {
    rep.pass = false;
    rep.witness = "{\"graph\":" + dk::describe_obj(g) + "}";
  }
  const json result{{"backward", json::parse(mf::describe(iso.second))},
                    {"forward", json::parse(mf::describe(iso.first))}};
  const json params{{"input", o.input}, {"name", o.name}};
  return emit(report::envelope("dk-iso", params, {rep}, result), o, out);
}

inline int run_two_cells(const Opts& o, std::ostream& out) {
  const auto any = instance::load_instance(o.input);
  const auto& ins = require_mat(any, "two-cells");
  const ar::ThetaDelta<mf::MatCat> th{ins.base};
  std::vector<CheckReport> checks;
  json counts = json::object();
  for (const auto& [name, sq] : select_squares(ins, o.name)) {
    auto rep = dk::two_cell_correspondence(sq);
    rep.name = "two-cell-counts:" + name;
    checks.push_back(rep);
    counts[name] = th.enumerate(sq).size();
  }
  const json result{{"diagonal-counts", counts}};
  json params{{"input", o.input}};
  if (!o.name.empty()) params["name"] = o.name;
  return emit(report::envelope("two-cells", params, checks, result), o, out);
}

inline int run_suite_cmd(const Opts& o, std::ostream& out) {
  require_prime(o.prime);
  const suite::SuiteParams sp{o.probe, o.prime, o.max_dim, o.seed};
  const auto checks = suite::run_suite(sp);
  const json params{{"max-dim", o.max_dim},
                    {"prime", o.prime},
                    {"probe-max-size", o.probe},
                    {"seed", o.seed}};
  return emit(report::envelope("suite", params, checks), o, out);
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  detail::Opts o;

  CLI::App app{"finite-instance engine for categories with nullhomotopy structures", "hoco"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  const auto add_io = [&o](CLI::App* sc, bool with_input) {
    if (with_input)
      sc->add_option("--input", o.input, "instance file to load")->required();
    sc->add_option("--output", o.output, "write the report to this file instead of stdout");
    sc->add_option("--format", o.format, "report format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
  };
  const auto add_probe = [&o](CLI::App* sc) {
    sc->add_option("--probe-max-size", o.probe, "bound on probe objects")->capture_default_str();
  };

  auto* validate = app.add_subcommand("validate", "parse an instance file and report its census");
  add_io(validate, true);

  auto* cokernel =
      app.add_subcommand("cokernel", "compute the homotopy cokernel of a named square");
  add_io(cokernel, true);
  cokernel->add_option("--name", o.name, "square to quotient")->required();

  auto* universal = app.add_subcommand(
      "check-universal", "verify the cokernel universal property for squares in the instance");
  add_io(universal, true);
  universal->add_option("--name", o.name, "restrict to one named square");
  add_probe(universal);

  auto* extend = app.add_subcommand(
      "extend", "extend the canonical embedding to squares and verify the extension laws");
  add_io(extend, true);
  extend->add_option("--name", o.name, "also emit the image of this square or morphism");
  add_probe(extend);

  auto* normalize = app.add_subcommand(
      "normalize", "canonical kernel-basis arrow of a named reflexive graph");
  add_io(normalize, true);
  normalize->add_option("--name", o.name, "reflexive graph to normalize")->required();

  auto* denormalize = app.add_subcommand(
      "denormalize", "reflexive graph presenting a named matrix morphism");
  add_io(denormalize, true);
  denormalize->add_option("--name", o.name, "morphism to present")->required();

  auto* dkiso = app.add_subcommand(
      "dk-iso", "edge-space splitting isomorphism of a named reflexive graph");
  add_io(dkiso, true);
  dkiso->add_option("--name", o.name, "reflexive graph to split")->required();

  auto* twocells = app.add_subcommand(
      "two-cells", "count diagonals, graph nullhomotopies and groupoid two-cells per square");
  add_io(twocells, true);
  twocells->add_option("--name", o.name, "restrict to one named square");

  auto* suitecmd = app.add_subcommand("suite", "run the full verification suite");
  add_io(suitecmd, false);
  add_probe(suitecmd);
  suitecmd->add_option("--prime", o.prime, "field modulus for the matrix checks")
      ->capture_default_str();
  suitecmd->add_option("--max-dim", o.max_dim, "bound on matrix dimensions")
      ->capture_default_str();
  suitecmd->add_option("--seed", o.seed, "seed for the sampled layer")->capture_default_str();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  int code = 0;
  try {
    if (*validate)
      code = detail::run_validate(o, out);
    else if (*cokernel)
      code = detail::run_cokernel(o, out);
    else if (*universal)
      code = detail::run_check_universal(o, out);
    else if (*extend)
      code = detail::run_extend(o, out);
    else if (*normalize)
      code = detail::run_normalize(o, out);
    else if (*denormalize)
      code = detail::run_denormalize(o, out);
    else if (*dkiso)
      code = detail::run_dk_iso(o, out);
    else if (*twocells)
      code = detail::run_two_cells(o, out);
    else if (*suitecmd)
      code = detail::run_suite_cmd(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    code = 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    code = 2;
  }

  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  err << "elapsed-ms=" << ms << "\n";
  return code;
}

}  // namespace hoco::cli
