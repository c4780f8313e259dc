#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "hoco/core.hpp"

// Skeletal finite sets: the object n is {0,...,n-1}. Composition is written
// diagrammatically throughout: compose(f, g) means "f then g".
namespace hoco::fincat {

struct FinSetMap {
  std::size_t dom = 0;
  std::size_t cod = 0;
  std::vector<std::size_t> tab;  // tab[i] = image of i, size dom

  friend bool operator==(const FinSetMap&, const FinSetMap&) = default;
};

inline std::string describe(const FinSetMap& f) {
  return "{\"cod\":" + std::to_string(f.cod) + ",\"dom\":" + std::to_string(f.dom) +
         ",\"tab\":[" + detail::join_csv(f.tab) + "]}";
}

inline void check_valid(const FinSetMap& f) {
  if (f.tab.size() != f.dom)
    throw Error("finset map has " + std::to_string(f.tab.size()) + " entries for domain " +
                std::to_string(f.dom) + ": " + describe(f));
  for (std::size_t v : f.tab)
    if (v >= f.cod) throw Error("finset map entry " + std::to_string(v) + " out of range: " + describe(f));
}

inline FinSetMap finset_id(std::size_t n) {
  FinSetMap f{n, n, std::vector<std::size_t>(n)};
  std::iota(f.tab.begin(), f.tab.end(), std::size_t{0});
  return f;
}

// The unique map out of the initial object 0.
inline FinSetMap finset_initial_arrow(std::size_t n) { return FinSetMap{0, n, {}}; }

// The unique map into the terminal object 1.
inline FinSetMap finset_terminal_arrow(std::size_t n) {
  return FinSetMap{n, 1, std::vector<std::size_t>(n, 0)};
}

inline FinSetMap compose(const FinSetMap& f, const FinSetMap& g) {
  if (f.cod != g.dom)
    throw Error("cannot compose " + describe(f) + " with " + describe(g) +
                ": codomain/domain mismatch");
  FinSetMap r{f.dom, g.cod, std::vector<std::size_t>(f.dom)};
  for (std::size_t i = 0; i < f.dom; ++i) r.tab[i] = g.tab[f.tab[i]];
  return r;
}

// All maps n -> m in lexicographic table order. (2,0) is empty; (0,m) is the
// single empty map.
inline std::vector<FinSetMap> enumerate_maps(std::size_t n, std::size_t m) {
  std::vector<FinSetMap> out;
  if (n == 0) {
    out.push_back(FinSetMap{0, m, {}});
    return out;
  }
  if (m == 0) return out;
  FinSetMap f{n, m, std::vector<std::size_t>(n, 0)};
  while (true) {
    out.push_back(f);
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++f.tab[k] < m) break;
      f.tab[k] = 0;
      if (k == 0) return out;
    }
  }
}

using FinSetPushout = PushoutData<std::size_t, FinSetMap>;

namespace detail {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a < b) parent[b] = a;
    else if (b < a) parent[a] = b;
  }
};

}  // namespace detail

// Pushout of the span f: A -> B, g: A -> C. The apex is the quotient of
// B + C (B-elements first) by the identifications f(a) ~ g(a); classes are
// numbered by their smallest representative, so the labeling is canonical.
inline FinSetPushout pushout(const FinSetMap& f, const FinSetMap& g) {
  if (f.dom != g.dom)
    throw Error("pushout span domains differ: " + describe(f) + " vs " + describe(g));
  const std::size_t nb = f.cod, nc = g.cod;
  detail::UnionFind uf(nb + nc);
  for (std::size_t a = 0; a < f.dom; ++a) uf.unite(f.tab[a], nb + g.tab[a]);
  std::vector<std::size_t> label(nb + nc, static_cast<std::size_t>(-1));
  std::size_t next = 0;
  for (std::size_t v = 0; v < nb + nc; ++v) {
    std::size_t r = uf.find(v);
    if (label[r] == static_cast<std::size_t>(-1)) label[r] = next++;
  }
  FinSetPushout po;
  po.apex = next;
  po.leg_b = FinSetMap{nb, next, std::vector<std::size_t>(nb)};
  po.leg_c = FinSetMap{nc, next, std::vector<std::size_t>(nc)};
  for (std::size_t v = 0; v < nb; ++v) po.leg_b.tab[v] = label[uf.find(v)];
  for (std::size_t v = 0; v < nc; ++v) po.leg_c.tab[v] = label[uf.find(nb + v)];
  return po;
}

// Mediating map [x, y] out of a pushout: the unique u with leg_b . u = x and
// leg_c . u = y. Both legs are jointly surjective, so u is determined
// classwise; a conflicting class means the cocone does not commute.
inline FinSetMap copair(const FinSetPushout& po, const FinSetMap& x, const FinSetMap& y) {
  if (x.dom != po.leg_b.dom || y.dom != po.leg_c.dom)
    throw Error("copair legs do not match the pushout: " + describe(x) + ", " + describe(y));
  if (x.cod != y.cod)
    throw Error("copair targets differ: " + describe(x) + " vs " + describe(y));
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  FinSetMap u{po.apex, x.cod, std::vector<std::size_t>(po.apex, unset)};
  for (std::size_t v = 0; v < x.dom; ++v) {
    std::size_t cls = po.leg_b.tab[v];
    if (u.tab[cls] == unset) u.tab[cls] = x.tab[v];
    else if (u.tab[cls] != x.tab[v])
      throw Error("copair conflict at class " + std::to_string(cls) + " (left element " +
                  std::to_string(v) + "): cocone does not commute");
  }
  for (std::size_t v = 0; v < y.dom; ++v) {
    std::size_t cls = po.leg_c.tab[v];
    if (u.tab[cls] == unset) u.tab[cls] = y.tab[v];
    else if (u.tab[cls] != y.tab[v])
      throw Error("copair conflict at class " + std::to_string(cls) + " (right element " +
                  std::to_string(v) + "): cocone does not commute");
  }
  for (std::size_t cls = 0; cls < po.apex; ++cls)
    if (u.tab[cls] == unset)
      throw Error("copair left class " + std::to_string(cls) + " unset: legs not jointly surjective");
  return u;
}

// Category handle used by the generic layers.
struct FinSetCat {
  using Obj = std::size_t;
  using Map = FinSetMap;
  using Pushout = FinSetPushout;

  Obj dom(const Map& f) const { return f.dom; }
  Obj cod(const Map& f) const { return f.cod; }
  bool obj_eq(Obj a, Obj b) const { return a == b; }
  bool eq(const Map& f, const Map& g) const { return f == g; }
  Map identity(Obj n) const { return finset_id(n); }
  Map compose(const Map& f, const Map& g) const { return fincat::compose(f, g); }

  Obj initial() const { return 0; }
  Map initial_arrow(Obj n) const { return finset_initial_arrow(n); }
  Obj terminal() const { return 1; }
  Map terminal_arrow(Obj n) const { return finset_terminal_arrow(n); }

  Pushout pushout(const Map& f, const Map& g) const { return fincat::pushout(f, g); }
  Map copair(const Pushout& po, const Map& x, const Map& y) const { return fincat::copair(po, x, y); }

  std::vector<Obj> objects(std::size_t bound) const {
    std::vector<Obj> out(bound + 1);
    std::iota(out.begin(), out.end(), std::size_t{0});
    return out;
  }
  std::vector<Map> hom(Obj n, Obj m) const { return enumerate_maps(n, m); }

  std::string describe_obj(Obj n) const { return std::to_string(n); }
  std::string describe_map(const Map& f) const { return describe(f); }
};

}  // namespace hoco::fincat
