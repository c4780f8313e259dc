#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hoco {

inline constexpr const char* kVersion = "0.1.0";

// Thrown on precondition violations and malformed inputs. Failed checks are
// not exceptions; they travel in CheckReport.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Outcome of a probe-based check. `witness` holds the first counterexample,
// serialized as JSON, and is empty exactly when `pass` is true. `params`
// records the probe bounds the verdict is relative to.
struct CheckReport {
  std::string name;
  bool pass = true;
  std::size_t cases = 0;
  std::string params;
  std::string witness;
};

inline CheckReport merge_reports(std::string name, const std::vector<CheckReport>& parts) {
  CheckReport total;
  total.name = std::move(name);
  for (const auto& r : parts) {
    total.cases += r.cases;
    if (total.pass && !r.pass) {
      total.pass = false;
      total.witness = "{\"check\":\"" + r.name + "\",\"witness\":" +
                      (r.witness.empty() ? std::string("null") : r.witness) + "}";
    }
    if (!r.params.empty()) {
      if (!total.params.empty()) total.params += " ";
      total.params += r.params;
    }
  }
  return total;
}

// Cocone of a pushout square: `leg_b` comes from the codomain of the span's
// left arrow, `leg_c` from the codomain of the right arrow.
template <class Obj, class Map>
struct PushoutData {
  Obj apex;
  Map leg_b;
  Map leg_c;
};

namespace detail {

template <class T>
std::string join_csv(const std::vector<T>& xs) {
  std::ostringstream os;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) os << ',';
    os << xs[k];
  }
  return os.str();
}

}  // namespace detail

}  // namespace hoco
