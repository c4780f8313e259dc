#pragma once

#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hoco/arrowcat.hpp"
#include "hoco/completion.hpp"
#include "hoco/core.hpp"
#include "hoco/dold_kan.hpp"
#include "hoco/fincat.hpp"
#include "hoco/matfp.hpp"
#include "hoco/nullhom.hpp"
#include "hoco/oracles.hpp"

// The full verification suite: every headline property of the library,
// discharged exhaustively at configurable desk-scale bounds plus a seeded
// random layer beyond the exhaustive cores. All sweeps are deterministic for
// fixed parameters.
namespace hoco::suite {

namespace ar = hoco::arrowcat;
namespace cm = hoco::completion;
namespace dk = hoco::dold_kan;
namespace mf = hoco::matfp;
namespace nh = hoco::nullhom;

struct SuiteParams {
  std::size_t probe_max_size = 2;
  unsigned prime = 2;
  std::size_t max_dim = 2;
  std::uint64_t seed = 0;
};

namespace detail {

using FObj = ar::ArrObject<fincat::FinSetCat>;
using FMor = ar::ArrMorphism<fincat::FinSetCat>;
using FArr = ar::ArrCat<fincat::FinSetCat>;
using BaseFun = nh::NullFunctor<fincat::FinSetCat, nh::ThetaInitial<fincat::FinSetCat>, FArr,
                                ar::ThetaDelta<fincat::FinSetCat>>;
using ArrFun = nh::NullFunctor<FArr, ar::ThetaDelta<fincat::FinSetCat>, FArr,
                               ar::ThetaDelta<fincat::FinSetCat>>;

inline std::string json_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(ch));
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out + "\"";
}

// (x, j) |-> (x, h(j)) on x-major pair numbering.
inline fincat::FinSetMap id_times(std::size_t n, const fincat::FinSetMap& h) {
  fincat::FinSetMap r{n * h.dom, n * h.cod, {}};
  r.tab.reserve(n * h.dom);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t j = 0; j < h.dom; ++j) r.tab.push_back(x * h.cod + h.tab[j]);
  return r;
}

// (x, j) |-> (g(x), j) on x-major pair numbering.
inline fincat::FinSetMap times_id(const fincat::FinSetMap& g, std::size_t n) {
  fincat::FinSetMap r{g.dom * n, g.cod * n, {}};
  r.tab.reserve(g.dom * n);
  for (std::size_t x = 0; x < g.dom; ++x)
    for (std::size_t j = 0; j < n; ++j) r.tab.push_back(g.tab[x] * n + j);
  return r;
}

inline fincat::FinSetMap rev(std::size_t n) {
  fincat::FinSetMap f{n, n, std::vector<std::size_t>(n)};
  for (std::size_t i = 0; i < n; ++i) f.tab[i] = n - 1 - i;
  return f;
}

// X |-> X copies of the fixed square column w, level by level.
inline BaseFun copower(const FObj& w) {
  BaseFun nf;
  nf.on_obj = [w](std::size_t x) { return FObj{id_times(x, w.a)}; };
  nf.on_map = [w](const fincat::FinSetMap& g) {
    const fincat::FinSetCat fc;
    return ar::make_square(fc, FObj{id_times(g.dom, w.a)}, FObj{id_times(g.cod, w.a)},
                           times_id(g, w.a.dom), times_id(g, w.a.cod));
  };
  nf.on_token = [w](const fincat::FinSetMap& g, const fincat::FinSetMap&) {
    return fincat::FinSetMap{0, g.cod * w.a.dom, {}};
  };
  return nf;
}

inline ArrFun identity_square_functor() {
  ArrFun nf;
  nf.on_obj = [](const FObj& x) { return x; };
  nf.on_map = [](const FMor& q) { return q; };
  nf.on_token = [](const FMor&, const fincat::FinSetMap& d) { return d; };
  return nf;
}

// Reverses the numbering of every top object; an involutive automorphism
// whose comparison squares are non-identity isomorphisms.
inline ArrFun top_relabel_functor() {
  ArrFun nf;
  auto on_obj = [](const FObj& x) {
    const fincat::FinSetCat fc;
    return FObj{fc.compose(rev(x.a.dom), x.a)};
  };
  nf.on_obj = on_obj;
  nf.on_map = [on_obj](const FMor& q) {
    const fincat::FinSetCat fc;
    return ar::make_square(fc, on_obj(q.src), on_obj(q.dst),
                           fc.compose(fc.compose(rev(q.top.dom), q.top), rev(q.top.cod)),
                           q.bottom);
  };
  nf.on_token = [](const FMor&, const fincat::FinSetMap& d) {
    const fincat::FinSetCat fc;
    return fc.compose(d, rev(d.cod));
  };
  return nf;
}

inline BaseFun restrict_along_embedding(const ArrFun& m) {
  BaseFun nf;
  const auto gam = ar::gamma_functor(fincat::FinSetCat{});
  nf.on_obj = [m, gam](std::size_t x) { return m.on_obj(gam.on_obj(x)); };
  nf.on_map = [m, gam](const fincat::FinSetMap& g) { return m.on_map(gam.on_map(g)); };
  nf.on_token = [m, gam](const fincat::FinSetMap& g, const fincat::FinSetMap& t) {
    return m.on_token(gam.on_map(g), gam.on_token(g, t));
  };
  return nf;
}

}  // namespace detail

// Pushouts against the dense-closure oracle on all spans within the bound,
// then copair against the brute-force mediator sweep.
inline CheckReport pushout_oracle_check(std::size_t probe) {
  CheckReport rep;
  rep.name = "pushout-matches-quotient-oracle";
  rep.params = "span-max-size=" + std::to_string(probe + 1) +
               " copair-max-size=" + std::to_string(probe);
  const std::size_t n = probe + 1;
  for (std::size_t a = 0; a <= n; ++a)
    for (std::size_t b = 0; b <= n; ++b)
      for (std::size_t c = 0; c <= n; ++c)
        for (const auto& f : fincat::enumerate_maps(a, b))
          for (const auto& g : fincat::enumerate_maps(a, c)) {
            ++rep.cases;
            const auto fast = fincat::pushout(f, g);
            const auto slow = oracles::pushout_by_closure(f, g);
            if (!(fast.apex == slow.apex && fast.leg_b == slow.leg_b &&
                  fast.leg_c == slow.leg_c)) {
              rep.pass = false;
              rep.witness =
                  "{\"span\":[" + fincat::describe(f) + "," + fincat::describe(g) + "]}";
              return rep;
            }
          }
  for (std::size_t a = 0; a <= probe; ++a)
    for (std::size_t b = 0; b <= probe; ++b)
      for (std::size_t c = 0; c <= probe; ++c)
        for (const auto& f : fincat::enumerate_maps(a, b))
          for (const auto& g : fincat::enumerate_maps(a, c)) {
            const auto po = fincat::pushout(f, g);
            for (std::size_t d = 0; d <= probe; ++d) {
              const auto mediators = fincat::enumerate_maps(po.apex, d);
              for (const auto& x : fincat::enumerate_maps(b, d))
                for (const auto& y : fincat::enumerate_maps(c, d)) {
                  if (!(fincat::compose(f, x) == fincat::compose(g, y))) continue;
                  ++rep.cases;
                  const auto u = fincat::copair(po, x, y);
                  std::size_t matches = 0;
                  bool agrees = true;
                  for (const auto& cand : mediators)
                    if (fincat::compose(po.leg_b, cand) == x &&
                        fincat::compose(po.leg_c, cand) == y) {
                      ++matches;
                      agrees = agrees && cand == u;
                    }
                  if (matches != 1 || !agrees) {
                    rep.pass = false;
                    rep.witness = "{\"cocone\":[" + fincat::describe(x) + "," +
                                  fincat::describe(y) + "],\"count\":" +
                                  std::to_string(matches) + ",\"span\":[" +
                                  fincat::describe(f) + "," + fincat::describe(g) + "]}";
                    return rep;
                  }
                }
            }
          }
  return rep;
}

// Whisker functoriality, unit laws and reduced interchange for the
// initial-witness structure on finite sets and the diagonal structure on
// squares, both exhaustive within the bound.
inline CheckReport whisker_law_check(std::size_t probe) {
  const fincat::FinSetCat fc;
  const nh::ThetaInitial<fincat::FinSetCat> ti{fc};
  const auto bcorpus = nh::make_corpus(fc, probe);
  const ar::ArrCat<fincat::FinSetCat> ac{fc};
  const ar::ThetaDelta<fincat::FinSetCat> th{fc};
  const auto acorpus = nh::make_corpus(ac, probe);
  const std::vector<CheckReport> parts = {
      nh::check_structure_axioms(fc, ti, bcorpus),
      nh::check_reduced_interchange(fc, ti, bcorpus),
      nh::check_structure_axioms(ac, th, acorpus),
      nh::check_reduced_interchange(ac, th, acorpus),
  };
  auto rep = merge_reports("whisker-laws-and-interchange", parts);
  rep.params = "max-size=" + std::to_string(probe);
  return rep;
}

// Every square within the bound has a homotopy cokernel passing the full
// universal-property probe, strongness included.
inline CheckReport arrow_cokernel_check(std::size_t probe) {
  CheckReport rep;
  rep.name = "arrow-cokernels-universal";
  rep.params = "max-size=" + std::to_string(probe) + " probe-max=" + std::to_string(probe);
  const fincat::FinSetCat fc;
  const ar::ArrCat<fincat::FinSetCat> ac{fc};
  const auto corpus = nh::make_corpus(ac, probe);
  for (const auto& f : corpus.arrows) {
    const auto sub = ar::check_universal(fc, f, corpus.objects);
    rep.cases += sub.cases;
    if (!sub.pass) {
      rep.pass = false;
      rep.witness = "{\"square\":" + ac.describe_map(f) + ",\"witness\":" +
                    (sub.witness.empty() ? std::string("null") : sub.witness) + "}";
      return rep;
    }
  }
  return rep;
}

// Cokernels of embedded arrows come out on the nose with identity-shaped
// quotient data.
inline CheckReport embedding_exactness_check(std::size_t probe) {
  const fincat::FinSetCat fc;
  auto rep = ar::check_gamma_exactness(fc, probe + 1);
  rep.name = "embedded-arrows-cokernels-exact";
  rep.params = "max-size=" + std::to_string(probe + 1);
  return rep;
}

// Strength of the initial object and of pushouts: token pairing in the base
// over the initial-witness structure, and level-wise diagonal gluing for
// spans of squares.
inline CheckReport strong_colimit_check(std::size_t probe) {
  const fincat::FinSetCat fc;
  const nh::ThetaInitial<fincat::FinSetCat> ti{fc};
  std::vector<CheckReport> parts;
  parts.push_back(nh::check_strong_initial(fc, ti, fc.objects(probe + 1)));

  CheckReport base_po;
  base_po.name = "pushouts-pair-tokens-in-base";
  const std::size_t n = probe + 1;
  const auto base_probes = fc.objects(n);
  for (std::size_t a = 0; a <= n && base_po.pass; ++a)
    for (std::size_t b = 0; b <= n && base_po.pass; ++b)
      for (std::size_t c = 0; c <= n && base_po.pass; ++c)
        for (const auto& f : fincat::enumerate_maps(a, b)) {
          for (const auto& g : fincat::enumerate_maps(a, c)) {
            const auto sub = nh::check_strong_pushout(fc, ti, f, g, base_probes);
            base_po.cases += sub.cases;
            if (!sub.pass) {
              base_po.pass = false;
              base_po.witness = sub.witness;
              break;
            }
          }
          if (!base_po.pass) break;
        }
  parts.push_back(base_po);

  CheckReport square_po;
  square_po.name = "pushouts-glue-diagonals-levelwise";
  const ar::ArrCat<fincat::FinSetCat> ac{fc};
  const auto corpus = nh::make_corpus(ac, probe);
  for (std::size_t i = 0; i < corpus.arrows.size() && square_po.pass; ++i)
    for (std::size_t j = i; j < corpus.arrows.size(); ++j) {
      const auto& f = corpus.arrows[i];
      const auto& g = corpus.arrows[j];
      if (!ac.obj_eq(f.src, g.src)) continue;
      const auto sub = ar::check_strong_pushout_squares(fc, f, g, corpus.objects);
      square_po.cases += sub.cases;
      if (!sub.pass) {
        square_po.pass = false;
        square_po.witness = sub.witness;
        break;
      }
    }
  parts.push_back(square_po);

  auto rep = merge_reports("initial-and-pushouts-strong", parts);
  rep.params = "base-max-size=" + std::to_string(probe + 1) +
               " square-max-size=" + std::to_string(probe);
  return rep;
}

// The extension machinery end to end: the embedding extends to a functor
// passing all three extension clauses; comparison squares are invertible,
// natural and token-compatible for an identity and a relabeling functor; and
// extended transformations restrict to the families they came from.
inline CheckReport extension_check(std::size_t probe) {
  const fincat::FinSetCat fc;
  const ar::ArrCat<fincat::FinSetCat> ac{fc};
  const ar::ThetaDelta<fincat::FinSetCat> th{fc};
  const auto tgt = cm::arrow_target(fc);
  const auto gam = ar::gamma_functor(fc);
  std::vector<CheckReport> parts;

  auto extg = cm::extend_functor(fc, gam, tgt);
  parts.push_back(cm::check_extension(extg, probe));

  const auto corpus = nh::make_corpus(ac, probe);

  CheckReport comparison;
  comparison.name = "comparison-invertible-natural-compatible";
  for (const auto& m : {detail::identity_square_functor(), detail::top_relabel_functor()}) {
    auto extm = cm::extend_functor(fc, detail::restrict_along_embedding(m), tgt);
    const auto eps = cm::counit(fc, tgt, m);
    for (const auto& x : corpus.objects) {
      eps.component(x);
      ++comparison.cases;
    }
    const auto sub =
        nh::check_two_morphism(ac, th, ac, th, extm.as_null_functor(), m, eps, corpus);
    comparison.cases += sub.cases;
    if (!sub.pass) {
      comparison.pass = false;
      comparison.witness = sub.witness;
      break;
    }
  }
  parts.push_back(comparison);

  CheckReport restriction;
  restriction.name = "extended-transformations-restrict";
  std::size_t families = 0;
  {
    nh::TwoMorphism<fincat::FinSetCat, ar::ArrCat<fincat::FinSetCat>> unit;
    unit.component = [gam, ac](std::size_t x) { return ac.identity(gam.on_obj(x)); };
    const auto unit_hat = cm::extend_nat_trans(extg, extg, unit, probe);
    ++families;
    for (std::size_t x = 0; x <= probe && restriction.pass; ++x) {
      ++restriction.cases;
      if (!ac.eq(unit_hat.component(gam.on_obj(x)), unit.component(x))) {
        restriction.pass = false;
        restriction.witness = "{\"family\":\"identity\",\"object\":" + std::to_string(x) + "}";
      }
    }
    const std::vector<std::pair<detail::FObj, detail::FObj>> column_pairs = {
        {detail::FObj{fincat::finset_terminal_arrow(2)},
         detail::FObj{fincat::finset_terminal_arrow(2)}},
        {detail::FObj{fincat::finset_id(2)}, detail::FObj{fincat::finset_id(2)}},
        {detail::FObj{fincat::finset_terminal_arrow(2)}, detail::FObj{fincat::finset_id(2)}},
        {detail::FObj{fincat::FinSetMap{1, 2, {0}}}, detail::FObj{fincat::FinSetMap{1, 2, {0}}}}};
    for (const auto& [w, v] : column_pairs) {
      if (!restriction.pass) break;
      auto fw = detail::copower(w);
      auto fv = detail::copower(v);
      auto extw = cm::extend_functor(fc, fw, tgt, 1);
      auto extv = cm::extend_functor(fc, fv, tgt, 1);
      for (const auto& h : ac.hom(w, v)) {
        nh::TwoMorphism<fincat::FinSetCat, ar::ArrCat<fincat::FinSetCat>> lam;
        lam.component = [fw, fv, h, &fc](std::size_t x) {
          return ar::make_square(fc, fw.on_obj(x), fv.on_obj(x), detail::id_times(x, h.top),
                                 detail::id_times(x, h.bottom));
        };
        const auto lam_hat = cm::extend_nat_trans(extw, extv, lam, 1);
        ++families;
        for (std::size_t x = 0; x <= probe && restriction.pass; ++x) {
          ++restriction.cases;
          if (!ac.eq(lam_hat.component(gam.on_obj(x)), lam.component(x))) {
            restriction.pass = false;
            restriction.witness = "{\"family\":" + ac.describe_map(h) +
                                  ",\"object\":" + std::to_string(x) + "}";
          }
        }
        if (!restriction.pass) break;
      }
    }
  }
  parts.push_back(restriction);

  auto rep = merge_reports("extension-roundtrip-and-comparison", parts);
  rep.params = "max-size=" + std::to_string(probe) + " families=" + std::to_string(families);
  return rep;
}

// Normalization inverts transport exactly in the canonical kernel basis, the
// kernel splitting is a two-sided isomorphism, and the induced composition
// satisfies the groupoid axioms; over the requested field one dimension above
// the bound and over a second field at the bound.
inline CheckReport matrix_roundtrip_check(unsigned prime, std::size_t max_dim) {
  CheckReport rep;
  rep.name = "matrix-roundtrip-and-groupoid-axioms";
  const unsigned alt = prime == 2 ? 3u : 2u;
  rep.params = "p" + std::to_string(prime) + "-max-dim=" + std::to_string(max_dim + 1) +
               " p" + std::to_string(alt) + "-max-dim=" + std::to_string(max_dim);
  const std::pair<unsigned, std::size_t> fields[] = {{prime, max_dim + 1}, {alt, max_dim}};
  for (const auto& [p, dims] : fields) {
    for (std::size_t r = 0; r <= dims; ++r)
      for (std::size_t c = 0; c <= dims; ++c)
        for (const auto& a : mf::enumerate_mats(p, r, c)) {
          ++rep.cases;
          const auto na = dk::normalize_object(dk::denormalize_object(a));
          if (!(na.arrow == a && na.k == mf::inj2(p, a.rows, a.cols))) {
            rep.pass = false;
            rep.witness = "{\"law\":\"roundtrip\",\"matrix\":" + mf::describe(a) + "}";
            return rep;
          }
          const auto sub = dk::check_groupoid(a);
          rep.cases += sub.cases;
          if (!sub.pass) {
            rep.pass = false;
            rep.witness = "{\"law\":\"groupoid\",\"matrix\":" + mf::describe(a) +
                          ",\"witness\":" +
                          (sub.witness.empty() ? std::string("null") : sub.witness) + "}";
            return rep;
          }
        }
    for (const auto& x : dk::rg_objects_upto(p, dims)) {
      ++rep.cases;
      bool ok = true;
      try {
        const auto iso = dk::dk_iso(x);
        const std::size_t split = dk::dim0(x) + mf::kernel_basis(x.d).cols;
        ok = mf::mul(iso.second, iso.first) == mf::mat_identity(p, dk::dim1(x)) &&
             mf::mul(iso.first, iso.second) == mf::mat_identity(p, split);
      } catch (const Error&) {
        ok = false;
      }
      if (!ok) {
        rep.pass = false;
        rep.witness = "{\"law\":\"splitting\",\"graph\":" + dk::describe_obj(x) + "}";
        return rep;
      }
    }
  }
  return rep;
}

// Diagonal counts, graph-nullhomotopy counts and groupoid two-cell counts
// coincide, with the explicit bijections verified, on the exhaustive square
// corpus within the bound.
inline CheckReport two_cell_check(unsigned prime, std::size_t max_dim) {
  CheckReport rep;
  rep.name = "two-cell-counts-coincide";
  rep.params = "prime=" + std::to_string(prime) + " max-dim=" + std::to_string(max_dim);
  const mf::MatCat mc{prime};
  const ar::ArrCat<mf::MatCat> mac{mc};
  const auto corpus = nh::make_corpus(mac, max_dim);
  for (const auto& f : corpus.arrows) {
    const auto sub = dk::two_cell_correspondence(f);
    rep.cases += sub.cases == 0 ? 1 : sub.cases;
    if (!sub.pass) {
      rep.pass = false;
      rep.witness = "{\"square\":" + mac.describe_map(f) + ",\"witness\":" +
                    (sub.witness.empty() ? std::string("null") : sub.witness) + "}";
      return rep;
    }
  }
  return rep;
}

// The quotient half and the kernel half of the five-column diagram verify
// against all graph probes: exhaustively at probe dimension one, and at the
// full probe dimension for the two pinned one-by-one matrices.
inline CheckReport cofiber_kernel_check(unsigned prime, std::size_t max_dim) {
  CheckReport rep;
  rep.name = "cofiber-equals-kernel";
  rep.params = "prime=" + std::to_string(prime) + " max-dim=" + std::to_string(max_dim) +
               " probe-dims=1 pinned-probe-dims=" + std::to_string(max_dim);
  const auto run_one = [&rep, prime](const mf::MatFp& a, std::size_t probe_dims) {
    const auto sub = dk::check_cof_eq_ker(a, probe_dims);
    rep.cases += sub.cases == 0 ? 1 : sub.cases;
    if (!sub.pass) {
      rep.pass = false;
      rep.witness = "{\"matrix\":" + mf::describe(a) + ",\"witness\":" +
                    (sub.witness.empty() ? std::string("null") : sub.witness) + "}";
    }
    return rep.pass;
  };
  for (std::size_t r = 0; r <= max_dim; ++r)
    for (std::size_t c = 0; c <= max_dim; ++c)
      for (const auto& a : mf::enumerate_mats(prime, r, c))
        if (!run_one(a, 1)) return rep;
  if (!run_one(mf::mat(prime, {{1u}}), max_dim)) return rep;
  if (!run_one(mf::mat(prime, {{0u}}), max_dim)) return rep;
  return rep;
}

// Seeded random layer above the exhaustive cores: spot-checks at sizes and
// dimensions one past the sweeps above.
inline CheckReport sampled_check(const SuiteParams& sp) {
  CheckReport rep;
  rep.name = "sampled-instances-match-oracles";
  rep.params = "seed=" + std::to_string(sp.seed) + " samples=50";
  std::mt19937_64 gen(sp.seed);
  const auto pick = [&gen](std::size_t n) { return static_cast<std::size_t>(gen() % n); };

  const std::size_t span_cap = sp.probe_max_size + 2;
  for (int k = 0; k < 25; ++k) {
    const std::size_t a = pick(span_cap + 1);
    const std::size_t b = a == 0 ? pick(span_cap + 1) : 1 + pick(span_cap);
    const std::size_t c = a == 0 ? pick(span_cap + 1) : 1 + pick(span_cap);
    fincat::FinSetMap f{a, b, {}}, g{a, c, {}};
    for (std::size_t i = 0; i < a; ++i) {
      f.tab.push_back(pick(b));
      g.tab.push_back(pick(c));
    }
    ++rep.cases;
    const auto fast = fincat::pushout(f, g);
    const auto slow = oracles::pushout_by_closure(f, g);
    if (!(fast.apex == slow.apex && fast.leg_b == slow.leg_b && fast.leg_c == slow.leg_c)) {
      rep.pass = false;
      rep.witness = "{\"span\":[" + fincat::describe(f) + "," + fincat::describe(g) + "]}";
      return rep;
    }
  }

  const std::size_t dim_cap = sp.max_dim + 1;
  for (int k = 0; k < 25; ++k) {
    const std::size_t r = pick(dim_cap + 1);
    const std::size_t c = pick(dim_cap + 1);
    mf::MatFp a = mf::zeros(sp.prime, r, c);
    for (auto& v : a.e) v = static_cast<unsigned>(pick(sp.prime));
    ++rep.cases;
    bool ok = true;
    try {
      const auto na = dk::normalize_object(dk::denormalize_object(a));
      ok = na.arrow == a && na.k == mf::inj2(sp.prime, a.rows, a.cols) &&
           dk::check_groupoid(a).pass;
      if (ok) dk::dk_iso(dk::denormalize_object(a));
    } catch (const Error&) {
      ok = false;
    }
    if (!ok) {
      rep.pass = false;
      rep.witness = "{\"matrix\":" + mf::describe(a) + "}";
      return rep;
    }
  }
  return rep;
}

inline std::vector<CheckReport> run_suite(const SuiteParams& sp) {
  const auto guarded = [](const char* name, auto&& fn) {
    try {
      return fn();
    } catch (const Error& e) {
      CheckReport rep;
      rep.name = name;
      rep.pass = false;
      rep.witness = "{\"error\":" + detail::json_quote(e.what()) + "}";
      return rep;
    }
  };
  std::vector<CheckReport> out;
  out.push_back(guarded("pushout-matches-quotient-oracle",
                        [&] { return pushout_oracle_check(sp.probe_max_size); }));
  out.push_back(
      guarded("whisker-laws-and-interchange", [&] { return whisker_law_check(sp.probe_max_size); }));
  out.push_back(
      guarded("arrow-cokernels-universal", [&] { return arrow_cokernel_check(sp.probe_max_size); }));
  out.push_back(guarded("embedded-arrows-cokernels-exact",
                        [&] { return embedding_exactness_check(sp.probe_max_size); }));
  out.push_back(
      guarded("initial-and-pushouts-strong", [&] { return strong_colimit_check(sp.probe_max_size); }));
  out.push_back(guarded("extension-roundtrip-and-comparison",
                        [&] { return extension_check(sp.probe_max_size); }));
  out.push_back(guarded("matrix-roundtrip-and-groupoid-axioms",
                        [&] { return matrix_roundtrip_check(sp.prime, sp.max_dim); }));
  out.push_back(
      guarded("two-cell-counts-coincide", [&] { return two_cell_check(sp.prime, sp.max_dim); }));
  out.push_back(
      guarded("cofiber-equals-kernel", [&] { return cofiber_kernel_check(sp.prime, sp.max_dim); }));
  out.push_back(guarded("sampled-instances-match-oracles", [&] { return sampled_check(sp); }));
  return out;
}

}  // namespace hoco::suite
