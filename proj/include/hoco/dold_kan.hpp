#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hoco/arrowcat.hpp"
#include "hoco/core.hpp"
#include "hoco/matfp.hpp"
#include "hoco/nullhom.hpp"

// Reflexive graphs internal to F_p-linear spaces: an object is a parallel
// pair d, c: A1 -> A0 with a common section i, a morphism is a levelwise
// linear pair commuting with d, c and i. The module realises the equivalence
// between such graphs and plain arrows of Mat(F_p) (splitting off the kernel
// of d), the groupoid composition every graph carries, and the graph-level
// nullhomotopy calculus, so that quotient data can be transported back and
// forth and compared on both sides.
namespace hoco::dold_kan {

namespace mf = hoco::matfp;
namespace nh = hoco::nullhom;
namespace ac = hoco::arrowcat;

struct RGObject {
  mf::MatFp d, c, i;

  friend bool operator==(const RGObject&, const RGObject&) = default;
};

inline std::size_t dim1(const RGObject& x) { return x.d.cols; }
inline std::size_t dim0(const RGObject& x) { return x.d.rows; }

inline void validate_object(const RGObject& x) {
  if (x.d.p != x.c.p || x.d.p != x.i.p) throw Error("graph levels use different primes");
  if (x.c.rows != x.d.rows || x.c.cols != x.d.cols) throw Error("graph endpoint maps have different shapes");
  if (x.i.rows != x.d.cols || x.i.cols != x.d.rows) throw Error("graph section has the wrong shape");
  const mf::MatFp id0 = mf::mat_identity(x.d.p, dim0(x));
  if (!(mf::mul(x.d, x.i) == id0)) throw Error("graph section does not split d");
  if (!(mf::mul(x.c, x.i) == id0)) throw Error("graph section does not split c");
}

inline RGObject make_graph(const mf::MatFp& d, const mf::MatFp& c, const mf::MatFp& i) {
  RGObject x{d, c, i};
  validate_object(x);
  return x;
}

inline std::string describe_obj(const RGObject& x) {
  return "{\"c\":" + mf::describe(x.c) + ",\"d\":" + mf::describe(x.d) +
         ",\"i\":" + mf::describe(x.i) + "}";
}

struct RGMorphism {
  RGObject src, dst;
  mf::MatFp f1, f0;

  friend bool operator==(const RGMorphism&, const RGMorphism&) = default;
};

inline std::string describe_map(const RGMorphism& f) {
  return "{\"dst\":" + describe_obj(f.dst) + ",\"f0\":" + mf::describe(f.f0) +
         ",\"f1\":" + mf::describe(f.f1) + ",\"src\":" + describe_obj(f.src) + "}";
}

inline bool morphism_laws_hold(const RGObject& x, const RGObject& y, const mf::MatFp& f1,
                               const mf::MatFp& f0) {
  return mf::mul(f0, x.d) == mf::mul(y.d, f1) && mf::mul(f0, x.c) == mf::mul(y.c, f1) &&
         mf::mul(f1, x.i) == mf::mul(y.i, f0);
}

inline RGMorphism make_rg_morphism(const RGObject& x, const RGObject& y, const mf::MatFp& f1,
                                   const mf::MatFp& f0) {
  if (f1.rows != dim1(y) || f1.cols != dim1(x) || f0.rows != dim0(y) || f0.cols != dim0(x))
    throw Error("graph morphism levels have the wrong shapes");
  if (!(mf::mul(f0, x.d) == mf::mul(y.d, f1))) throw Error("graph morphism does not commute with d");
  if (!(mf::mul(f0, x.c) == mf::mul(y.c, f1))) throw Error("graph morphism does not commute with c");
  if (!(mf::mul(f1, x.i) == mf::mul(y.i, f0))) throw Error("graph morphism does not commute with i");
  return RGMorphism{x, y, f1, f0};
}

// All reflexive graphs with both levels of dimension <= bound, ordered by
// level dimensions, then section, then d, then c.
inline std::vector<RGObject> rg_objects_upto(unsigned p, std::size_t bound) {
  std::vector<RGObject> out;
  for (std::size_t a1 = 0; a1 <= bound; ++a1)
    for (std::size_t a0 = 0; a0 <= a1; ++a0) {
      const mf::MatFp id0 = mf::mat_identity(p, a0);
      for (const auto& i : mf::enumerate_mats(p, a1, a0)) {
        mf::LinearSystem sys(p, a0, a1);
        sys.add(id0, i, id0);
        const auto retractions = sys.enumerate();
        for (const auto& d : retractions)
          for (const auto& c : retractions) out.push_back(RGObject{d, c, i});
      }
    }
  return out;
}

struct RGCat {
  unsigned p = 2;

  using Obj = RGObject;
  using Map = RGMorphism;

  Obj dom(const Map& f) const { return f.src; }
  Obj cod(const Map& f) const { return f.dst; }
  bool obj_eq(const Obj& x, const Obj& y) const { return x == y; }
  bool eq(const Map& f, const Map& g) const { return f == g; }

  Map identity(const Obj& x) const {
    return Map{x, x, mf::mat_identity(p, dim1(x)), mf::mat_identity(p, dim0(x))};
  }

  Map compose(const Map& f, const Map& g) const {
    if (!(f.dst == g.src)) throw Error("cannot compose graph morphisms: endpoint mismatch");
    return Map{f.src, g.dst, mf::mul(g.f1, f.f1), mf::mul(g.f0, f.f0)};
  }

  std::vector<Obj> objects(std::size_t bound) const { return rg_objects_upto(p, bound); }

  std::vector<Map> hom(const Obj& x, const Obj& y) const {
    std::vector<Map> out;
    for (const auto& f0 : mf::enumerate_mats(p, dim0(y), dim0(x)))
      for (const auto& f1 : mf::enumerate_mats(p, dim1(y), dim1(x)))
        if (morphism_laws_hold(x, y, f1, f0)) out.push_back(Map{x, y, f1, f0});
    return out;
  }

  std::string describe_obj(const Obj& x) const { return dold_kan::describe_obj(x); }
  std::string describe_map(const Map& f) const { return dold_kan::describe_map(f); }
};

// Kernel inclusion of d together with the arrow it normalizes to.
struct NormalizedArrow {
  mf::MatFp k;      // canonical kernel basis, Ker(d) -> A1
  mf::MatFp arrow;  // the composite k then c, Ker(d) -> A0
};

inline NormalizedArrow normalize_object(const RGObject& x) {
  mf::MatFp k = mf::kernel_basis(x.d);
  return NormalizedArrow{k, mf::mul(x.c, k)};
}

// Action of a graph morphism on the kernels of d: the unique K with
// k_src then f1 = K then k_dst.
inline mf::MatFp normalized_action(const RGMorphism& f) {
  const mf::MatFp k_src = mf::kernel_basis(f.src.d);
  const mf::MatFp k_dst = mf::kernel_basis(f.dst.d);
  return mf::solve_unique(k_dst, mf::mul(f.f1, k_src));
}

inline ac::ArrMorphism<mf::MatCat> normalize(const RGMorphism& f) {
  const mf::MatCat base{f.f1.p};
  return ac::make_square(base, ac::ArrObject<mf::MatCat>{normalize_object(f.src).arrow},
                         ac::ArrObject<mf::MatCat>{normalize_object(f.dst).arrow},
                         normalized_action(f), f.f0);
}

// An arrow a: A -> A0 becomes the graph on A0 (+) A whose d forgets the A
// component and whose c pushes it along a.
inline RGObject denormalize_object(const mf::MatFp& a) {
  const std::size_t a0 = a.rows, ad = a.cols;
  return RGObject{mf::proj1(a.p, a0, ad), mf::hstack(mf::mat_identity(a.p, a0), a),
                  mf::inj1(a.p, a0, ad)};
}

inline RGMorphism denormalize(const ac::ArrMorphism<mf::MatCat>& f) {
  return make_rg_morphism(denormalize_object(f.src.a), denormalize_object(f.dst.a),
                          mf::direct_sum(f.bottom, f.top), f.bottom);
}

// Mutually inverse linear maps A1 <-> A0 (+) Ker(d); both composites are
// required to be exact identities.
inline std::pair<mf::MatFp, mf::MatFp> dk_iso(const RGObject& x) {
  const unsigned p = x.d.p;
  const mf::MatFp k = mf::kernel_basis(x.d);
  const mf::MatFp delta =
      mf::solve_unique(k, mf::sub(mf::mat_identity(p, dim1(x)), mf::mul(x.i, x.d)));
  const mf::MatFp forward = mf::vstack(x.d, delta);
  const mf::MatFp backward = mf::hstack(x.i, k);
  if (!(mf::mul(backward, forward) == mf::mat_identity(p, dim1(x))))
    throw Error("kernel splitting is not a retraction");
  if (!(mf::mul(forward, backward) == mf::mat_identity(p, dim0(x) + k.cols)))
    throw Error("kernel splitting is not a section");
  return {forward, backward};
}

// Composition map of the groupoid carried by the graph of a: A -> A0;
// composable pairs are parametrised as A0 (+) A (+) A and compose by adding
// the two A components.
inline mf::MatFp groupoid_compose(const mf::MatFp& a) {
  const mf::MatFp id0 = mf::mat_identity(a.p, a.rows);
  const mf::MatFp id = mf::mat_identity(a.p, a.cols);
  return mf::hstack(mf::direct_sum(id0, id), mf::vstack(mf::zeros(a.p, a.rows, a.cols), id));
}

// Unit, associativity, inverse and endpoint laws of that composition, all as
// exact matrix identities.
inline CheckReport check_groupoid(const mf::MatFp& a) {
  const unsigned p = a.p;
  const std::size_t a0 = a.rows, ad = a.cols;
  const mf::MatFp id0 = mf::mat_identity(p, a0);
  const mf::MatFp id = mf::mat_identity(p, ad);
  const mf::MatFp z00 = mf::zeros(p, a0, ad);
  const mf::MatFp z10 = mf::zeros(p, ad, a0);
  const mf::MatFp z11 = mf::zeros(p, ad, ad);

  const RGObject g = denormalize_object(a);
  const mf::MatFp m = groupoid_compose(a);
  const mf::MatFp pair_first = mf::hstack(mf::direct_sum(id0, id), mf::zeros(p, a0 + ad, ad));
  const mf::MatFp pair_second = mf::hstack(
      mf::hstack(mf::vstack(id0, z10), mf::vstack(a, z11)), mf::vstack(z00, id));
  const mf::MatFp unit_left =
      mf::vstack(mf::vstack(mf::hstack(id0, z00), mf::zeros(p, ad, a0 + ad)), mf::hstack(z10, id));
  const mf::MatFp unit_right = mf::vstack(mf::direct_sum(id0, id), mf::hstack(z10, z11));
  const mf::MatFp first_two = mf::vstack(
      mf::vstack(mf::hstack(id0, mf::zeros(p, a0, 3 * ad)),
                 mf::hstack(mf::hstack(z10, id), mf::hstack(id, z11))),
      mf::hstack(mf::zeros(p, ad, a0 + 2 * ad), id));
  const mf::MatFp last_two = mf::vstack(
      mf::vstack(mf::hstack(id0, mf::zeros(p, a0, 3 * ad)),
                 mf::hstack(mf::hstack(z10, id), mf::hstack(z11, z11))),
      mf::hstack(mf::hstack(mf::zeros(p, ad, a0 + ad), id), id));
  const mf::MatFp invert = mf::hstack(mf::vstack(id0, z10), mf::vstack(a, mf::neg(id)));
  const mf::MatFp with_inverse = mf::vstack(mf::direct_sum(id0, id), mf::hstack(z10, mf::neg(id)));
  const mf::MatFp inverse_with = mf::vstack(invert, mf::hstack(z10, id));

  CheckReport rep;
  rep.name = "groupoid-axioms";
  rep.params = "{\"arrow\":" + mf::describe(a) + "}";
  auto law = [&](const char* name, const mf::MatFp& lhs, const mf::MatFp& rhs) {
    ++rep.cases;
    if (rep.pass && !(lhs == rhs)) {
      rep.pass = false;
      rep.witness = std::string("{\"law\":\"") + name + "\",\"lhs\":" + mf::describe(lhs) +
                    ",\"rhs\":" + mf::describe(rhs) + "}";
    }
  };
  law("left-unit", mf::mul(m, unit_left), mf::mat_identity(p, a0 + ad));
  law("right-unit", mf::mul(m, unit_right), mf::mat_identity(p, a0 + ad));
  law("associativity", mf::mul(m, first_two), mf::mul(m, last_two));
  law("source-of-composite", mf::mul(g.d, m), mf::mul(g.d, pair_first));
  law("target-of-composite", mf::mul(g.c, m), mf::mul(g.c, pair_second));
  law("inverse-on-the-right", mf::mul(m, with_inverse), mf::mul(g.i, g.d));
  law("inverse-on-the-left", mf::mul(m, inverse_with), mf::mul(g.i, g.c));
  law("inversion-involutive", mf::mul(invert, invert), mf::mat_identity(p, a0 + ad));
  return rep;
}

// Graph nullhomotopies of f: maps t: A0(src) -> A1(dst) collapsing f. The
// third condition compares, on the kernels of d, the target the token picks
// with the normalized action of f.
inline std::vector<mf::MatFp> rg_nullhomotopies(const RGMorphism& f) {
  const unsigned p = f.f1.p;
  const std::size_t a0 = dim0(f.src);
  const mf::MatFp k_src = mf::kernel_basis(f.src.d);
  const mf::MatFp k_dst = mf::kernel_basis(f.dst.d);
  const mf::MatFp action = mf::solve_unique(k_dst, mf::mul(f.f1, k_src));
  mf::LinearSystem sys(p, dim1(f.dst), a0);
  const mf::MatFp id0 = mf::mat_identity(p, a0);
  sys.add(f.dst.d, id0, mf::zeros(p, dim0(f.dst), a0));
  sys.add(f.dst.c, id0, f.f0);
  sys.add(mf::mat_identity(p, dim1(f.dst)), mf::mul(f.src.c, k_src), mf::mul(k_dst, action));
  return sys.enumerate();
}

struct ThetaRG {
  unsigned p = 2;

  using Token = mf::MatFp;

  bool member(const RGMorphism& g, const Token& t) const {
    if (t.p != p || t.rows != dim1(g.dst) || t.cols != dim0(g.src)) return false;
    if (!(mf::mul(g.dst.d, t) == mf::zeros(p, dim0(g.dst), dim0(g.src)))) return false;
    if (!(mf::mul(g.dst.c, t) == g.f0)) return false;
    const mf::MatFp k_src = mf::kernel_basis(g.src.d);
    const mf::MatFp k_dst = mf::kernel_basis(g.dst.d);
    const mf::MatFp action = mf::solve_unique(k_dst, mf::mul(g.f1, k_src));
    return mf::mul(t, mf::mul(g.src.c, k_src)) == mf::mul(k_dst, action);
  }

  std::vector<Token> enumerate(const RGMorphism& g) const { return rg_nullhomotopies(g); }

  Token whisker(const RGMorphism& f, const Token& t, const RGMorphism& h) const {
    return mf::mul(h.f1, mf::mul(t, f.f0));
  }

  bool token_eq(const Token& s, const Token& t) const { return s == t; }

  std::string describe_token(const Token& t) const {
    return "{\"payload\":" + mf::describe(t) + ",\"tag\":\"GraphWitness\"}";
  }
};

inline RGObject discrete_graph(unsigned p, std::size_t n) {
  const mf::MatFp id = mf::mat_identity(p, n);
  return RGObject{id, id, id};
}

// Graph with no vertices whose single level holds the whole space.
inline RGObject loop_graph(unsigned p, std::size_t n) {
  return RGObject{mf::zeros(p, 0, n), mf::zeros(p, 0, n), mf::zeros(p, n, 0)};
}

inline RGMorphism gamma_prime(const mf::MatFp& g) {
  return RGMorphism{discrete_graph(g.p, g.cols), discrete_graph(g.p, g.rows), g, g};
}

inline RGMorphism lambda_prime(const mf::MatFp& g) {
  return RGMorphism{loop_graph(g.p, g.cols), loop_graph(g.p, g.rows), g, mf::zeros(g.p, 0, 0)};
}

// The graph of a is at once the quotient of the discrete inclusion of a and
// the kernel of its vertex-free projection: one object, verified against the
// cokernel universal property on one side and the kernel universal property
// on the other, probing all graphs with levels <= probe_dims.
inline CheckReport check_cof_eq_ker(const mf::MatFp& a, std::size_t probe_dims) {
  const unsigned p = a.p;
  const std::size_t a0 = a.rows, ad = a.cols;
  const RGCat cat{p};
  const ThetaRG theta{p};
  const RGObject middle = denormalize_object(a);
  const RGMorphism into = gamma_prime(a);
  const RGMorphism out_of = lambda_prime(a);
  const nh::CokernelData<RGCat, ThetaRG> ck{
      middle, make_rg_morphism(into.dst, middle, mf::inj1(p, a0, ad), mf::mat_identity(p, a0)),
      mf::inj2(p, a0, ad)};
  const nh::KernelData<RGCat, ThetaRG> kd{
      middle, make_rg_morphism(middle, out_of.src, mf::proj2(p, a0, ad), mf::zeros(p, 0, a0)),
      mf::mat_identity(p, a0)};
  const auto probes = cat.objects(probe_dims);

  std::vector<CheckReport> parts;
  parts.push_back(nh::check_cokernel_universal(cat, theta, into, ck, probes, false));
  parts.push_back(nh::check_kernel_universal(cat, theta, out_of, kd, probes));
  CheckReport shared;
  shared.name = "shared-middle-object";
  ++shared.cases;
  if (!cat.obj_eq(ck.obj, kd.obj)) {
    shared.pass = false;
    shared.witness = "{\"cokernel\":" + describe_obj(ck.obj) + ",\"kernel\":" + describe_obj(kd.obj) + "}";
  }
  parts.push_back(shared);
  CheckReport rep = merge_reports("cofiber-equals-kernel", parts);
  rep.params = "{\"arrow\":" + mf::describe(a) + ",\"probe_dims\":" + std::to_string(probe_dims) + "}";
  return rep;
}

// Three descriptions of the same collection: diagonals of the square f,
// graph nullhomotopies of its transport, and groupoid two-cells from the
// zero morphism into the transport. The latter two coincide on the nose; the
// first matches along t |-> [0; t].
inline CheckReport two_cell_correspondence(const ac::ArrMorphism<mf::MatCat>& f) {
  const unsigned p = f.top.p;
  const std::size_t a0 = f.src.a.rows;
  const std::size_t b0 = f.dst.a.rows, bd = f.dst.a.cols;
  const ac::ThetaDelta<mf::MatCat> theta{mf::MatCat{p}};
  const auto diagonals = theta.enumerate(f);

  const RGMorphism df = denormalize(f);
  const auto graph_tokens = rg_nullhomotopies(df);

  mf::LinearSystem sys(p, b0 + bd, a0);
  const mf::MatFp id0 = mf::mat_identity(p, a0);
  sys.add(df.dst.d, id0, mf::zeros(p, b0, a0));
  sys.add(df.dst.c, id0, f.bottom);
  const mf::MatFp bottom_rows = mf::proj2(p, b0, bd);
  sys.add(bottom_rows, mf::sub(df.src.d, df.src.c), mf::neg(mf::mul(bottom_rows, df.f1)));
  const auto cells = sys.enumerate();

  CheckReport rep;
  rep.name = "two-cell-correspondence";
  rep.params = "{\"square\":" + ac::describe_map(mf::MatCat{p}, f) + "}";
  rep.cases = diagonals.size() + graph_tokens.size() + cells.size();
  const std::string counts = "{\"cells\":" + std::to_string(cells.size()) +
                             ",\"diagonals\":" + std::to_string(diagonals.size()) +
                             ",\"graph_tokens\":" + std::to_string(graph_tokens.size()) + "}";
  if (diagonals.size() != graph_tokens.size() || graph_tokens.size() != cells.size()) {
    rep.pass = false;
    rep.witness = counts;
    return rep;
  }
  if (!(graph_tokens == cells)) {
    rep.pass = false;
    rep.witness = "{\"law\":\"graph-tokens-equal-cells\",\"counts\":" + counts + "}";
    return rep;
  }
  std::vector<mf::MatFp> embedded;
  embedded.reserve(diagonals.size());
  for (const auto& t : diagonals) embedded.push_back(mf::vstack(mf::zeros(p, b0, a0), t));
  std::sort(embedded.begin(), embedded.end(),
            [](const mf::MatFp& x, const mf::MatFp& y) { return x.e < y.e; });
  if (!(embedded == graph_tokens)) {
    rep.pass = false;
    rep.witness = "{\"law\":\"diagonals-embed-onto-tokens\",\"counts\":" + counts + "}";
  }
  return rep;
}

}  // namespace hoco::dold_kan
