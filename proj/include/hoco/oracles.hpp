#pragma once

#include <cstddef>
#include <vector>

#include "hoco/core.hpp"
#include "hoco/fincat.hpp"

// Independent reference implementations used to cross-check the construction
// paths. These deliberately avoid the data structures and algorithms of the
// main implementations (e.g. no union-find here).
namespace hoco::oracles {

// Pushout of f: A -> B, g: A -> C as the quotient of B + C by the
// reflexive-symmetric-transitive closure of {(f(a), |B|+g(a))}, computed with
// a dense relation matrix. Classes are labeled by smallest representative,
// B-elements first, matching the canonical labeling contract.
inline fincat::FinSetPushout pushout_by_closure(const fincat::FinSetMap& f,
                                                const fincat::FinSetMap& g) {
  if (f.dom != g.dom) throw Error("oracle pushout: span domains differ");
  const std::size_t nb = f.cod, nc = g.cod, n = nb + nc;
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (std::size_t v = 0; v < n; ++v) rel[v][v] = true;
  for (std::size_t a = 0; a < f.dom; ++a) {
    rel[f.tab[a]][nb + g.tab[a]] = true;
    rel[nb + g.tab[a]][f.tab[a]] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!rel[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (rel[k][j]) rel[i][j] = true;
    }
  std::vector<std::size_t> label(n, static_cast<std::size_t>(-1));
  std::size_t next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (label[v] != static_cast<std::size_t>(-1)) continue;
    for (std::size_t j = v; j < n; ++j)
      if (rel[v][j]) label[j] = next;
    ++next;
  }
  fincat::FinSetPushout po;
  po.apex = next;
  po.leg_b = fincat::FinSetMap{nb, next, std::vector<std::size_t>(label.begin(),
                                                                  label.begin() + static_cast<std::ptrdiff_t>(nb))};
  po.leg_c = fincat::FinSetMap{nc, next, std::vector<std::size_t>(label.begin() + static_cast<std::ptrdiff_t>(nb),
                                                                  label.end())};
  return po;
}

}  // namespace hoco::oracles
