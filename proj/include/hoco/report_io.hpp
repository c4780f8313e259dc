#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hoco/core.hpp"

// Deterministic report assembly: identical inputs yield byte-identical
// output. Keys are emitted in sorted order and no timing or environment data
// enters the report body.
namespace hoco::report {

using nlohmann::json;

// Witness strings produced by the checkers are themselves JSON; embed them
// structurally so a counterexample can be re-run from the report alone.
inline json parse_witness(const std::string& w) {
  if (w.empty()) return nullptr;
  json j = json::parse(w, nullptr, false);
  return j.is_discarded() ? json(w) : j;
}

inline json check_json(const CheckReport& r) {
  json j;
  j["cases"] = r.cases;
  j["name"] = r.name;
  if (!r.params.empty()) j["params"] = r.params;
  j["status"] = r.pass ? "pass" : "fail";
  if (!r.pass) j["witness"] = parse_witness(r.witness);
  return j;
}

inline bool all_pass(const std::vector<CheckReport>& checks) {
  for (const auto& r : checks)
    if (!r.pass) return false;
  return true;
}

inline json envelope(const std::string& command, const json& params,
                     const std::vector<CheckReport>& checks, const json& result = nullptr) {
  json j;
  j["checks"] = json::array();
  for (const auto& r : checks) j["checks"].push_back(check_json(r));
  j["command"] = command;
  j["params"] = params;
  if (!result.is_null()) j["result"] = result;
  j["status"] = all_pass(checks) ? "pass" : "fail";
  j["version"] = kVersion;
  return j;
}

// json: the envelope pretty-printed with sorted keys. text: one line per
// check ("PASS <name> (<n> cases)", failures append the witness), followed by
// the construction result when one is present.
inline std::string render(const json& env, const std::string& format) {
  if (format == "text") {
    std::string out;
    for (const auto& c : env["checks"]) {
      out += c["status"] == "pass" ? "PASS " : "FAIL ";
      out += c["name"].get<std::string>();
      out += " (" + std::to_string(c["cases"].get<std::size_t>()) + " cases)";
      if (c["status"] != "pass") out += ": " + c["witness"].dump();
      out += "\n";
    }
    if (env.contains("result")) out += env["result"].dump() + "\n";
    return out;
  }
  return env.dump(2) + "\n";
}

}  // namespace hoco::report
