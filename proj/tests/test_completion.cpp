#include <catch2/catch_amalgamated.hpp>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hoco/arrowcat.hpp"
#include "hoco/completion.hpp"
#include "hoco/fincat.hpp"
#include "hoco/matfp.hpp"
#include "hoco/nullhom.hpp"

using Catch::Matchers::ContainsSubstring;
using hoco::fincat::FinSetCat;
using hoco::fincat::FinSetMap;
using hoco::fincat::finset_id;
using hoco::fincat::finset_initial_arrow;
using hoco::fincat::finset_terminal_arrow;
namespace ar = hoco::arrowcat;
namespace cm = hoco::completion;
namespace mf = hoco::matfp;
namespace nh = hoco::nullhom;

namespace {

using FObj = ar::ArrObject<FinSetCat>;
using FMor = ar::ArrMorphism<FinSetCat>;
using FArr = ar::ArrCat<FinSetCat>;
using FTheta = ar::ThetaDelta<FinSetCat>;
using BaseFun = nh::NullFunctor<FinSetCat, nh::ThetaInitial<FinSetCat>, FArr, FTheta>;
using ArrFun = nh::NullFunctor<FArr, FTheta, FArr, FTheta>;

const FinSetCat fc;
const FArr ac{fc};
const FTheta th{fc};

// (x, j) |-> (x, h(j)) on x-major pair numbering.
FinSetMap id_times(std::size_t n, const FinSetMap& h) {
  FinSetMap r{n * h.dom, n * h.cod, {}};
  r.tab.reserve(n * h.dom);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t j = 0; j < h.dom; ++j) r.tab.push_back(x * h.cod + h.tab[j]);
  return r;
}

// (x, j) |-> (g(x), j) on x-major pair numbering.
FinSetMap times_id(const FinSetMap& g, std::size_t n) {
  FinSetMap r{g.dom * n, g.cod * n, {}};
  r.tab.reserve(g.dom * n);
  for (std::size_t x = 0; x < g.dom; ++x)
    for (std::size_t j = 0; j < n; ++j) r.tab.push_back(g.tab[x] * n + j);
  return r;
}

// X |-> X copies of the fixed square column w, level by level.
BaseFun copower(const FObj& w) {
  BaseFun nf;
  nf.on_obj = [w](std::size_t x) { return FObj{id_times(x, w.a)}; };
  nf.on_map = [w](const FinSetMap& g) {
    return ar::make_square(fc, FObj{id_times(g.dom, w.a)}, FObj{id_times(g.cod, w.a)},
                           times_id(g, w.a.dom), times_id(g, w.a.cod));
  };
  nf.on_token = [w](const FinSetMap& g, const FinSetMap&) {
    return FinSetMap{0, g.cod * w.a.dom, {}};
  };
  return nf;
}

FinSetMap rev(std::size_t n) {
  FinSetMap f{n, n, std::vector<std::size_t>(n)};
  for (std::size_t i = 0; i < n; ++i) f.tab[i] = n - 1 - i;
  return f;
}

ArrFun identity_functor() {
  ArrFun nf;
  nf.on_obj = [](const FObj& x) { return x; };
  nf.on_map = [](const FMor& q) { return q; };
  nf.on_token = [](const FMor&, const FinSetMap& d) { return d; };
  return nf;
}

// Reverses the numbering of every top object; an involutive automorphism.
ArrFun top_relabel() {
  ArrFun nf;
  auto on_obj = [](const FObj& x) { return FObj{fc.compose(rev(x.a.dom), x.a)}; };
  nf.on_obj = on_obj;
  nf.on_map = [on_obj](const FMor& q) {
    return ar::make_square(fc, on_obj(q.src), on_obj(q.dst),
                           fc.compose(fc.compose(rev(q.top.dom), q.top), rev(q.top.cod)),
                           q.bottom);
  };
  nf.on_token = [](const FMor&, const FinSetMap& d) { return fc.compose(d, rev(d.cod)); };
  return nf;
}

BaseFun restrict_along_embedding(const ArrFun& m) {
  BaseFun nf;
  auto gam = ar::gamma_functor(fc);
  nf.on_obj = [m, gam](std::size_t x) { return m.on_obj(gam.on_obj(x)); };
  nf.on_map = [m, gam](const FinSetMap& g) { return m.on_map(gam.on_map(g)); };
  nf.on_token = [m, gam](const FinSetMap& g, const FinSetMap& t) {
    return m.on_token(gam.on_map(g), gam.on_token(g, t));
  };
  return nf;
}

}  // namespace

TEST_CASE("arrow targets provide cokernels, strong colimits and interchange") {
  auto rep = cm::check_target(cm::arrow_target(fc), 1);
  CHECK(rep.pass);
  CHECK(rep.cases > 40);

  auto repm = cm::check_target(cm::arrow_target(mf::MatCat{2}), 1);
  CHECK(repm.pass);
  CHECK(repm.cases > 40);
}

TEST_CASE("extending the embedding reproduces it exactly") {
  const auto tgt = cm::arrow_target(fc);
  auto ext = cm::extend_functor(fc, ar::gamma_functor(fc), tgt, 2);

  const auto corpus = nh::make_corpus(ac, 2);
  CHECK(corpus.arrows.size() > 200);
  for (const auto& x : corpus.objects) CHECK(ac.obj_eq(ext.obj(x), x));
  std::size_t token_cases = 0;
  for (const auto& q : corpus.arrows) {
    CHECK(ac.eq(ext.map(q), q));
    for (const auto& d : th.enumerate(q)) {
      ++token_cases;
      CHECK(fc.eq(ext.token(q, d), d));
    }
  }
  CHECK(token_cases > 100);

  auto one = FObj{finset_id(1)};
  CHECK(ac.eq(ext.map(ac.identity(one)), ac.identity(ext.obj(one))));
}

TEST_CASE("arrow and token images solve exactly the defining equations") {
  const auto tgt = cm::arrow_target(fc);
  const auto w = FObj{finset_terminal_arrow(2)};
  auto fw = copower(w);
  auto ext = cm::extend_functor(fc, fw, tgt, 1);
  const auto gam = ar::gamma_functor(fc);

  CHECK(ac.obj_eq(ext.obj(gam.on_obj(1)), w));
  CHECK(ac.obj_eq(ext.obj(FObj{finset_id(1)}), FObj{finset_id(1)}));

  const auto corpus = nh::make_corpus(ac, 1);
  CHECK(corpus.arrows.size() >= 6);
  std::size_t token_cases = 0;
  for (const auto& q : corpus.arrows) {
    const auto& ta = ext.triple(q.src);
    const auto& tb = ext.triple(q.dst);
    const auto ga = fw.on_map(q.src.a);
    const auto id_dom = ac.identity(ac.dom(ga));
    const auto img = ext.map(q);

    const auto h = ac.compose(fw.on_map(q.bottom), tb.c);
    const auto phi = th.whisker(fw.on_map(q.top), tb.gamma, ac.identity(tb.obj));
    std::optional<FMor> found;
    std::size_t hits = 0;
    for (const auto& u : ac.hom(ta.obj, tb.obj))
      if (ac.eq(ac.compose(ta.c, u), h) &&
          th.token_eq(th.whisker(id_dom, ta.gamma, u), phi)) {
        found = u;
        ++hits;
      }
    REQUIRE(hits == 1);
    CHECK(ac.eq(*found, img));

    for (const auto& d : th.enumerate(q)) {
      ++token_cases;
      const auto img_tok = ext.token(q, d);
      const auto rhs = th.whisker(fw.on_map(d), tb.gamma, ac.identity(tb.obj));
      std::optional<FinSetMap> lift;
      std::size_t lifts = 0;
      for (const auto& psi : th.enumerate(img))
        if (th.token_eq(th.whisker(ta.c, psi, ac.identity(ac.cod(img))), rhs)) {
          lift = psi;
          ++lifts;
        }
      REQUIRE(lifts == 1);
      CHECK(fc.eq(*lift, img_tok));
    }
  }
  CHECK(token_cases >= 3);
}

TEST_CASE("independent functors extend and restrict back") {
  const auto tgt = cm::arrow_target(fc);
  const auto gam = ar::gamma_functor(fc);
  const std::vector<FObj> columns = {FObj{finset_terminal_arrow(2)},
                                     FObj{FinSetMap{1, 2, {0}}}};
  for (const auto& w : columns) {
    auto fw = copower(w);
    auto ext = cm::extend_functor(fc, fw, tgt, 1);
    auto rep = cm::check_extension(ext, 1);
    CHECK(rep.pass);

    for (std::size_t x = 0; x <= 2; ++x)
      CHECK(ac.obj_eq(ext.obj(gam.on_obj(x)), fw.on_obj(x)));
    const auto bcorpus = nh::make_corpus(fc, 2);
    for (const auto& g : bcorpus.arrows)
      CHECK(ac.eq(ext.map(gam.on_map(g)), fw.on_map(g)));
  }

  mf::MatCat mc{2};
  ar::ArrCat<mf::MatCat> mac{mc};
  auto extm = cm::extend_functor(mc, ar::gamma_functor(mc), cm::arrow_target(mc), 1);
  auto repm = cm::check_extension(extm, 1);
  CHECK(repm.pass);
  for (const auto& x : mac.objects(1)) CHECK(mac.obj_eq(extm.obj(x), x));

  mf::MatCat m3{3};
  auto ext3 = cm::extend_functor(m3, ar::gamma_functor(m3), cm::arrow_target(m3), 1);
  for (const auto& x : ar::ArrCat<mf::MatCat>{m3}.objects(1))
    CHECK(ar::ArrCat<mf::MatCat>{m3}.obj_eq(ext3.obj(x), x));
}

TEST_CASE("the full extension check passes for the embedding at size two") {
  const auto tgt = cm::arrow_target(fc);
  auto ext = cm::extend_functor(fc, ar::gamma_functor(fc), tgt);
  auto rep = cm::check_extension(ext, 2);
  CHECK(rep.pass);
  CHECK(rep.cases > 10000);
  CHECK(rep.params == "bound=2");
}

TEST_CASE("a corrupted object assignment is reported by the restriction clause") {
  const auto tgt = cm::arrow_target(fc);
  auto ext = cm::extend_functor(fc, ar::gamma_functor(fc), tgt);
  auto cand = ext.as_null_functor();
  auto good = cand.on_obj;
  cand.on_obj = [good](const FObj& x) {
    if (fc.eq(x.a, finset_initial_arrow(1))) return FObj{finset_id(1)};
    return good(x);
  };
  auto rep = cm::check_extension_candidate(fc, ar::gamma_functor(fc), tgt, cand, 1);
  CHECK_FALSE(rep.pass);
  CHECK_THAT(rep.witness, ContainsSubstring("restricts-along-embedding"));
  CHECK_THAT(rep.witness, ContainsSubstring("\"object\":1"));
}

TEST_CASE("transformations extend componentwise and restrict to the originals") {
  const auto tgt = cm::arrow_target(fc);
  const auto gam = ar::gamma_functor(fc);
  auto extg = cm::extend_functor(fc, gam, tgt);

  nh::TwoMorphism<FinSetCat, FArr> unit;
  unit.component = [gam](std::size_t x) { return ac.identity(gam.on_obj(x)); };
  auto unit_hat = cm::extend_nat_trans(extg, extg, unit, 2);
  const auto corpus = nh::make_corpus(ac, 2);
  for (const auto& x : corpus.objects) {
    const auto comp = unit_hat.component(x);
    CHECK(ac.eq(comp, ac.identity(x)));

    const auto& ta = extg.triple(x);
    const auto ga = gam.on_map(x.a);
    const auto h = ac.compose(unit.component(fc.cod(x.a)), ta.c);
    const auto phi = th.whisker(unit.component(fc.dom(x.a)), ta.gamma, ac.identity(ta.obj));
    std::size_t hits = 0;
    for (const auto& u : ac.hom(ta.obj, ta.obj))
      if (ac.eq(ac.compose(ta.c, u), h) &&
          th.token_eq(th.whisker(ac.identity(ac.dom(ga)), ta.gamma, u), phi)) {
        ++hits;
        CHECK(ac.eq(u, comp));
      }
    CHECK(hits == 1);
  }

  const std::vector<std::pair<FObj, FObj>> column_pairs = {
      {FObj{finset_terminal_arrow(2)}, FObj{finset_terminal_arrow(2)}},
      {FObj{finset_id(2)}, FObj{finset_id(2)}},
      {FObj{finset_terminal_arrow(2)}, FObj{finset_id(2)}},
      {FObj{FinSetMap{1, 2, {0}}}, FObj{FinSetMap{1, 2, {0}}}}};
  std::size_t families = 0;
  for (const auto& [w, v] : column_pairs) {
    auto fw = copower(w);
    auto fv = copower(v);
    auto extw = cm::extend_functor(fc, fw, tgt, 1);
    auto extv = cm::extend_functor(fc, fv, tgt, 1);
    for (const auto& h : ac.hom(w, v)) {
      nh::TwoMorphism<FinSetCat, FArr> lam;
      lam.component = [fw, fv, h](std::size_t x) {
        return ar::make_square(fc, fw.on_obj(x), fv.on_obj(x), id_times(x, h.top),
                               id_times(x, h.bottom));
      };
      auto lam_hat = cm::extend_nat_trans(extw, extv, lam, 1);
      for (std::size_t x = 0; x <= 2; ++x)
        CHECK(ac.eq(lam_hat.component(gam.on_obj(x)), lam.component(x)));
      ++families;
    }
  }
  CHECK(families >= 10);
}

TEST_CASE("comparison components are invertible, natural and token-compatible") {
  const auto tgt = cm::arrow_target(fc);
  const auto gam = ar::gamma_functor(fc);
  const auto corpus = nh::make_corpus(ac, 2);

  auto idm = identity_functor();
  for (const auto& x : corpus.objects)
    CHECK(ac.eq(cm::counit_component(fc, tgt, idm, x), ac.identity(x)));

  auto extg = cm::extend_functor(fc, gam, tgt);
  auto self = extg.as_null_functor();
  for (const auto& x : corpus.objects)
    CHECK(ac.eq(cm::counit_component(fc, tgt, self, x), ac.identity(x)));

  auto relabel = top_relabel();
  const FObj two_id{finset_id(2)};
  const auto comp = cm::counit_component(fc, tgt, relabel, two_id);
  CHECK_FALSE(ac.eq(comp, ac.identity(two_id)));
  CHECK(ac.eq(comp, ar::make_square(fc, two_id, relabel.on_obj(two_id), rev(2), finset_id(2))));
  for (std::size_t x = 0; x <= 2; ++x)
    CHECK(ac.eq(cm::counit_component(fc, tgt, relabel, gam.on_obj(x)),
                ac.identity(gam.on_obj(x))));

  for (const auto& m : {idm, relabel}) {
    auto extm = cm::extend_functor(fc, restrict_along_embedding(m), tgt);
    auto eps = cm::counit(fc, tgt, m);
    auto rep = nh::check_two_morphism(ac, th, ac, th, extm.as_null_functor(), m, eps, corpus);
    CHECK(rep.pass);
    CHECK(rep.cases > 200);
  }
}

TEST_CASE("a functor that breaks token transport has no invertible comparison") {
  const auto tgt = cm::arrow_target(fc);
  auto bad = identity_functor();
  bad.on_token = [](const FMor& q, const FinSetMap&) { return th.enumerate(q).back(); };
  const FObj fold{finset_terminal_arrow(2)};
  CHECK_THROWS_WITH(cm::counit_component(fc, tgt, bad, fold),
                    ContainsSubstring("no inverse found"));
}
