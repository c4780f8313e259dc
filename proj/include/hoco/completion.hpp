#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hoco/arrowcat.hpp"
#include "hoco/core.hpp"
#include "hoco/nullhom.hpp"

// Extension of functors from a base category to its arrow category: a target
// equipped with chosen homotopy cokernels receives, for every functor F out
// of the base, an extension that sends (A, a, A0) to the cokernel object of
// F(a). Arrow and token images are the unique solutions of the factorization
// equations, found by exhaustive sweeps so that existence and uniqueness are
// verified on every call, and the comparison arrow between any cokernel-
// preserving functor and the extension of its restriction is produced the
// same way, together with a two-sided inverse.
namespace hoco::completion {

namespace nh = hoco::nullhom;
namespace ac = hoco::arrowcat;

// Everything the extension needs from the receiving side: the category
// handle, its token structure, and a chosen cokernel for every arrow.
template <class Cat, class Theta>
struct Target {
  Cat cat;
  Theta theta;
  std::function<nh::CokernelData<Cat, Theta>(const typename Cat::Map&)> cokernel;
};

// The arrow category over a finite base, with diagonals as tokens and the
// pushout-built cokernel as the chosen one.
template <class C>
Target<ac::ArrCat<C>, ac::ThetaDelta<C>> arrow_target(const C& base) {
  Target<ac::ArrCat<C>, ac::ThetaDelta<C>> t{ac::ArrCat<C>{base}, ac::ThetaDelta<C>{base}, {}};
  t.cokernel = [base](const ac::ArrMorphism<C>& g) {
    auto ck = ac::homotopy_cokernel(base, g);
    return nh::CokernelData<ac::ArrCat<C>, ac::ThetaDelta<C>>{ck.obj, ck.c, ck.gamma};
  };
  return t;
}

// The unique u out of the cokernel of g with c.u = h and gamma whiskered
// into u equal to phi, found by sweeping the full hom set.
template <class Cat, class Theta>
typename Cat::Map factor_through_cokernel(const Cat& cat, const Theta& theta,
                                          const typename Cat::Map& g,
                                          const nh::CokernelData<Cat, Theta>& ck,
                                          const typename Cat::Map& h,
                                          const typename Theta::Token& phi) {
  if (!theta.member(cat.compose(g, h), phi))
    throw Error("factorization token does not witness the composite: " +
                theta.describe_token(phi));
  const auto id_dom = cat.identity(cat.dom(g));
  std::vector<typename Cat::Map> found;
  for (const auto& u : cat.hom(ck.obj, cat.cod(h)))
    if (cat.eq(cat.compose(ck.c, u), h) &&
        theta.token_eq(theta.whisker(id_dom, ck.gamma, u), phi))
      found.push_back(u);
  if (found.size() != 1)
    throw Error("expected exactly one factorization through the quotient of " +
                cat.describe_map(g) + ", found " + std::to_string(found.size()));
  return found.front();
}

// The unique token on h restricting to phi along the quotient map, after the
// compatibility premise is checked.
template <class Cat, class Theta>
typename Theta::Token lift_through_cokernel(const Cat& cat, const Theta& theta,
                                            const typename Cat::Map& g,
                                            const nh::CokernelData<Cat, Theta>& ck,
                                            const typename Cat::Map& h,
                                            const typename Theta::Token& phi) {
  if (!theta.member(cat.compose(ck.c, h), phi))
    throw Error("lift token does not witness the composite: " + theta.describe_token(phi));
  const auto lhs = theta.whisker(g, phi, cat.identity(cat.cod(h)));
  const auto rhs = theta.whisker(cat.identity(cat.dom(g)), ck.gamma, h);
  if (!theta.token_eq(lhs, rhs))
    throw Error("lift token is not compatible with the quotient token: " +
                theta.describe_token(phi));
  std::vector<typename Theta::Token> found;
  const auto id_d = cat.identity(cat.cod(h));
  for (const auto& psi : theta.enumerate(h))
    if (theta.token_eq(theta.whisker(ck.c, psi, id_d), phi)) found.push_back(psi);
  if (found.size() != 1)
    throw Error("expected exactly one lifted token on " + cat.describe_map(h) + ", found " +
                std::to_string(found.size()));
  return found.front();
}

// The extension of a functor along the embedding of the base into its arrow
// category. Objects go to chosen cokernels of structure-arrow images; arrows
// and tokens are the unique factorizations through them. All three
// assignments are memoized by the canonical encodings, insert-once.
template <class C, class Cat, class Theta>
class ExtendedFunctor {
 public:
  using BaseFunctor = nh::NullFunctor<C, nh::ThetaInitial<C>, Cat, Theta>;
  using Triple = nh::CokernelData<Cat, Theta>;
  using Token = typename Theta::Token;

  ExtendedFunctor(C base, BaseFunctor fun, Target<Cat, Theta> target)
      : s_(std::make_shared<State>(
            State{std::move(base), std::move(fun), std::move(target), {}, {}, {}})) {}

  const C& base() const { return s_->base; }
  const BaseFunctor& functor() const { return s_->fun; }
  const Target<Cat, Theta>& target() const { return s_->target; }

  const Triple& triple(const ac::ArrObject<C>& x) const {
    const auto key = ac::describe_obj(s_->base, x);
    auto it = s_->triples.find(key);
    if (it == s_->triples.end())
      it = s_->triples.emplace(key, s_->target.cokernel(s_->fun.on_map(x.a))).first;
    return it->second;
  }

  typename Cat::Obj obj(const ac::ArrObject<C>& x) const { return triple(x).obj; }

  typename Cat::Map map(const ac::ArrMorphism<C>& g) const {
    const auto key = ac::describe_map(s_->base, g);
    auto it = s_->maps.find(key);
    if (it != s_->maps.end()) return it->second;
    const auto& tcat = s_->target.cat;
    const Triple& tb = triple(g.dst);
    const auto h = tcat.compose(s_->fun.on_map(g.bottom), tb.c);
    const auto phi = s_->target.theta.whisker(s_->fun.on_map(g.top), tb.gamma,
                                              tcat.identity(tb.obj));
    auto u = factor_through_cokernel(tcat, s_->target.theta, s_->fun.on_map(g.src.a),
                                     triple(g.src), h, phi);
    s_->maps.emplace(key, u);
    return u;
  }

  Token token(const ac::ArrMorphism<C>& g, const typename C::Map& d) const {
    const auto key = ac::describe_map(s_->base, g) + "|" + s_->base.describe_map(d);
    auto it = s_->tokens.find(key);
    if (it != s_->tokens.end()) return it->second;
    const auto& tcat = s_->target.cat;
    const Triple& tb = triple(g.dst);
    const auto phi =
        s_->target.theta.whisker(s_->fun.on_map(d), tb.gamma, tcat.identity(tb.obj));
    auto t = lift_through_cokernel(tcat, s_->target.theta, s_->fun.on_map(g.src.a),
                                   triple(g.src), map(g), phi);
    s_->tokens.emplace(key, t);
    return t;
  }

  nh::NullFunctor<ac::ArrCat<C>, ac::ThetaDelta<C>, Cat, Theta> as_null_functor() const {
    nh::NullFunctor<ac::ArrCat<C>, ac::ThetaDelta<C>, Cat, Theta> nf;
    auto self = *this;
    nf.on_obj = [self](const ac::ArrObject<C>& x) { return self.obj(x); };
    nf.on_map = [self](const ac::ArrMorphism<C>& g) { return self.map(g); };
    nf.on_token = [self](const ac::ArrMorphism<C>& g, const typename C::Map& d) {
      return self.token(g, d);
    };
    return nf;
  }

 private:
  struct State {
    C base;
    BaseFunctor fun;
    Target<Cat, Theta> target;
    std::map<std::string, Triple> triples;
    std::map<std::string, typename Cat::Map> maps;
    std::map<std::string, Token> tokens;
  };
  std::shared_ptr<State> s_;
};

// Builds the extension; with a positive bound, identity and composite
// preservation are asserted over the corpus of squares at that bound.
template <class C, class Cat, class Theta>
ExtendedFunctor<C, Cat, Theta> extend_functor(
    const C& base, const nh::NullFunctor<C, nh::ThetaInitial<C>, Cat, Theta>& fun,
    const Target<Cat, Theta>& target, std::size_t probe_bound = 0) {
  ExtendedFunctor<C, Cat, Theta> ext(base, fun, target);
  if (probe_bound == 0) return ext;
  const ac::ArrCat<C> src{base};
  const auto corpus = nh::make_corpus(src, probe_bound);
  for (const auto& x : corpus.objects)
    if (!target.cat.eq(ext.map(src.identity(x)), target.cat.identity(ext.obj(x))))
      throw Error("the extension does not preserve the identity at " + src.describe_obj(x));
  for (const auto& f : corpus.arrows)
    for (const auto& g : corpus.arrows) {
      if (!src.obj_eq(src.dom(g), src.cod(f))) continue;
      if (!target.cat.eq(ext.map(src.compose(f, g)),
                         target.cat.compose(ext.map(f), ext.map(g))))
        throw Error("the extension is not functorial on the composite of " +
                    src.describe_map(f) + " and " + src.describe_map(g));
    }
  return ext;
}

// Componentwise extension of a transformation between two base functors:
// at (A, a, A0) the unique arrow with c.u = component(A0).c and the first
// quotient token whiskered into u equal to component(A) whiskered into the
// second. With a positive bound, naturality and token compatibility are
// asserted over the corpus of squares at that bound.
template <class C, class Cat, class Theta>
nh::TwoMorphism<ac::ArrCat<C>, Cat> extend_nat_trans(
    const ExtendedFunctor<C, Cat, Theta>& f, const ExtendedFunctor<C, Cat, Theta>& g,
    const nh::TwoMorphism<C, Cat>& lambda, std::size_t probe_bound = 0) {
  nh::TwoMorphism<ac::ArrCat<C>, Cat> out;
  out.component = [f, g, lambda](const ac::ArrObject<C>& x) {
    const auto& tcat = f.target().cat;
    const auto& tb = g.triple(x);
    const auto h = tcat.compose(lambda.component(f.base().cod(x.a)), tb.c);
    const auto phi = f.target().theta.whisker(lambda.component(f.base().dom(x.a)), tb.gamma,
                                              tcat.identity(tb.obj));
    return factor_through_cokernel(tcat, f.target().theta, f.functor().on_map(x.a),
                                   f.triple(x), h, phi);
  };
  if (probe_bound > 0) {
    const ac::ArrCat<C> src{f.base()};
    const ac::ThetaDelta<C> stheta{f.base()};
    auto rep = nh::check_two_morphism(src, stheta, f.target().cat, f.target().theta,
                                      f.as_null_functor(), g.as_null_functor(), out,
                                      nh::make_corpus(src, probe_bound));
    if (!rep.pass)
      throw Error("the extended transformation fails its laws: " + rep.witness);
  }
  return out;
}

// Comparison arrow from the cokernel of the embedded structure arrow to the
// value of a cokernel-preserving functor, asserted invertible.
template <class C, class Cat, class Theta>
typename Cat::Map counit_component(
    const C& base, const Target<Cat, Theta>& target,
    const nh::NullFunctor<ac::ArrCat<C>, ac::ThetaDelta<C>, Cat, Theta>& m,
    const ac::ArrObject<C>& x) {
  const ac::ArrCat<C> src{base};
  const auto gam = ac::gamma_functor(base);
  const auto dom_obj = base.dom(x.a);
  const auto cod_obj = base.cod(x.a);
  const auto ga = gam.on_map(x.a);
  const auto mg = m.on_map(ga);
  const auto ck = target.cokernel(mg);
  const auto into = ac::make_square(base, gam.on_obj(cod_obj), x, base.initial_arrow(dom_obj),
                                    base.identity(cod_obj));
  const auto u = factor_through_cokernel(target.cat, target.theta, mg, ck, m.on_map(into),
                                         m.on_token(src.compose(ga, into),
                                                    base.identity(dom_obj)));
  const auto id_dom = target.cat.identity(target.cat.dom(u));
  const auto id_cod = target.cat.identity(target.cat.cod(u));
  for (const auto& v : target.cat.hom(target.cat.cod(u), target.cat.dom(u)))
    if (target.cat.eq(target.cat.compose(u, v), id_dom) &&
        target.cat.eq(target.cat.compose(v, u), id_cod))
      return u;
  throw Error("no inverse found for the comparison at " + src.describe_obj(x));
}

// The comparison arrows bundled as a transformation out of the extension of
// the functor's restriction along the embedding.
template <class C, class Cat, class Theta>
nh::TwoMorphism<ac::ArrCat<C>, Cat> counit(
    const C& base, const Target<Cat, Theta>& target,
    const nh::NullFunctor<ac::ArrCat<C>, ac::ThetaDelta<C>, Cat, Theta>& m) {
  nh::TwoMorphism<ac::ArrCat<C>, Cat> out;
  out.component = [base, target, m](const ac::ArrObject<C>& x) {
    return counit_component(base, target, m, x);
  };
  return out;
}

// A given object is initial with a unique token on each outgoing arrow.
template <class Cat, class Theta>
CheckReport check_strong_initial_object(const Cat& cat, const Theta& theta,
                                        const typename Cat::Obj& z,
                                        const std::vector<typename Cat::Obj>& probes) {
  CheckReport rep;
  rep.name = "strong-initial-object";
  for (const auto& d : probes) {
    ++rep.cases;
    auto arrows = cat.hom(z, d);
    if (arrows.size() != 1) {
      rep.pass = false;
      rep.witness = "{\"arrows\":" + std::to_string(arrows.size()) +
                    ",\"probe\":" + cat.describe_obj(d) + "}";
      return rep;
    }
    auto tokens = theta.enumerate(arrows.front());
    if (tokens.size() != 1) {
      rep.pass = false;
      rep.witness = "{\"probe\":" + cat.describe_obj(d) +
                    ",\"tokens\":" + std::to_string(tokens.size()) + "}";
      return rep;
    }
  }
  return rep;
}

// A given cocone under a span is a pushout whose mediators pair compatible
// tokens uniquely.
template <class Cat, class Theta>
CheckReport check_strong_pushout_cocone(
    const Cat& cat, const Theta& theta, const typename Cat::Map& f, const typename Cat::Map& g,
    const PushoutData<typename Cat::Obj, typename Cat::Map>& po,
    const std::vector<typename Cat::Obj>& probes) {
  CheckReport rep;
  rep.name = "strong-pushout-cocone";
  ++rep.cases;
  if (!cat.eq(cat.compose(f, po.leg_b), cat.compose(g, po.leg_c))) {
    rep.pass = false;
    rep.witness = "{\"law\":\"cocone\",\"span\":[" + cat.describe_map(f) + "," +
                  cat.describe_map(g) + "]}";
    return rep;
  }
  for (const auto& d : probes) {
    const auto id_d = cat.identity(d);
    const auto mediators = cat.hom(po.apex, d);
    std::vector<std::pair<typename Cat::Map, typename Cat::Map>> med_legs;
    med_legs.reserve(mediators.size());
    for (const auto& u : mediators)
      med_legs.emplace_back(cat.compose(po.leg_b, u), cat.compose(po.leg_c, u));
    const auto ys = cat.hom(cat.cod(g), d);
    std::vector<typename Cat::Map> gys;
    gys.reserve(ys.size());
    for (const auto& y : ys) gys.push_back(cat.compose(g, y));
    for (const auto& x : cat.hom(cat.cod(f), d)) {
      const auto fx = cat.compose(f, x);
      const auto phis = theta.enumerate(x);
      for (std::size_t k = 0; k < ys.size(); ++k) {
        if (!cat.eq(fx, gys[k])) continue;
        const auto& y = ys[k];
        ++rep.cases;
        std::vector<typename Cat::Map> us;
        for (std::size_t w = 0; w < mediators.size(); ++w)
          if (cat.eq(med_legs[w].first, x) && cat.eq(med_legs[w].second, y))
            us.push_back(mediators[w]);
        if (us.size() != 1) {
          rep.pass = false;
          rep.witness = "{\"cocone\":[" + cat.describe_map(x) + "," + cat.describe_map(y) +
                        "],\"count\":" + std::to_string(us.size()) + "}";
          return rep;
        }
        if (phis.empty()) continue;
        const auto psis = theta.enumerate(y);
        if (psis.empty()) continue;
        const auto tokens = theta.enumerate(us.front());
        for (const auto& phi : phis) {
          const auto fphi = theta.whisker(f, phi, id_d);
          for (const auto& psi : psis) {
            if (!theta.token_eq(fphi, theta.whisker(g, psi, id_d))) continue;
            ++rep.cases;
            std::size_t matches = 0;
            for (const auto& t : tokens)
              if (theta.token_eq(theta.whisker(po.leg_b, t, id_d), phi) &&
                  theta.token_eq(theta.whisker(po.leg_c, t, id_d), psi))
                ++matches;
            if (matches != 1) {
              rep.pass = false;
              rep.witness = "{\"count\":" + std::to_string(matches) +
                            ",\"phi\":" + theta.describe_token(phi) +
                            ",\"psi\":" + theta.describe_token(psi) + "}";
              return rep;
            }
          }
        }
      }
    }
  }
  return rep;
}

// The receiving side supports the construction at the given bound: the
// initial object and probed pushouts are strong colimits, every probed arrow
// has its chosen cokernel pass the universal check, and whiskering satisfies
// the reduced interchange law.
template <class Cat, class Theta>
CheckReport check_target(const Target<Cat, Theta>& t, std::size_t bound) {
  const auto corpus = nh::make_corpus(t.cat, bound);
  std::vector<CheckReport> parts;
  parts.push_back(nh::check_strong_initial(t.cat, t.theta, corpus.objects));
  {
    CheckReport rep;
    rep.name = "cokernels-universal";
    for (const auto& g : corpus.arrows) {
      auto sub = nh::check_cokernel_universal(t.cat, t.theta, g, t.cokernel(g), corpus.objects,
                                              true);
      rep.cases += sub.cases;
      if (!sub.pass) {
        rep.pass = false;
        rep.witness =
            "{\"arrow\":" + t.cat.describe_map(g) + ",\"reason\":" + sub.witness + "}";
        break;
      }
    }
    parts.push_back(rep);
  }
  {
    CheckReport rep;
    rep.name = "pushouts-strong";
    for (std::size_t i = 0; i < corpus.arrows.size() && rep.pass; ++i)
      for (std::size_t j = i; j < corpus.arrows.size(); ++j) {
        const auto& f = corpus.arrows[i];
        const auto& g = corpus.arrows[j];
        if (!t.cat.obj_eq(t.cat.dom(f), t.cat.dom(g))) continue;
        auto sub = nh::check_strong_pushout(t.cat, t.theta, f, g, corpus.objects);
        rep.cases += sub.cases;
        if (!sub.pass) {
          rep.pass = false;
          rep.witness = sub.witness;
          break;
        }
      }
    parts.push_back(rep);
  }
  parts.push_back(nh::check_reduced_interchange(t.cat, t.theta, corpus));
  auto total = merge_reports("target-capabilities", parts);
  total.params = "bound=" + std::to_string(bound);
  return total;
}

// Verifies a candidate extension of `fun` over the corpus at the bound:
// (i) it restricts along the embedding to `fun` on objects, arrows and
// tokens; (ii) images of homotopy cokernels of squares pass the universal
// check, including strong lifting; (iii) the images of the initial object
// and of probed pushouts are strong colimits in the target.
template <class C, class Cat, class Theta>
CheckReport check_extension_candidate(
    const C& base, const nh::NullFunctor<C, nh::ThetaInitial<C>, Cat, Theta>& fun,
    const Target<Cat, Theta>& target,
    const nh::NullFunctor<ac::ArrCat<C>, ac::ThetaDelta<C>, Cat, Theta>& ext,
    std::size_t bound) {
  const ac::ArrCat<C> src{base};
  const nh::ThetaInitial<C> btheta{base};
  const auto gam = ac::gamma_functor(base);
  const auto bcorpus = nh::make_corpus(base, bound);
  const auto acorpus = nh::make_corpus(src, bound);
  const auto probes = target.cat.objects(bound);
  std::vector<CheckReport> parts;
  {
    CheckReport rep;
    rep.name = "restricts-along-embedding";
    for (const auto& x : bcorpus.objects) {
      ++rep.cases;
      if (!target.cat.obj_eq(ext.on_obj(gam.on_obj(x)), fun.on_obj(x))) {
        rep.pass = false;
        rep.witness = "{\"object\":" + base.describe_obj(x) + "}";
        break;
      }
    }
    for (const auto& g : bcorpus.arrows) {
      if (!rep.pass) break;
      ++rep.cases;
      if (!target.cat.eq(ext.on_map(gam.on_map(g)), fun.on_map(g))) {
        rep.pass = false;
        rep.witness = "{\"arrow\":" + base.describe_map(g) + "}";
        break;
      }
      for (const auto& t : btheta.enumerate(g)) {
        ++rep.cases;
        if (!target.theta.token_eq(ext.on_token(gam.on_map(g), gam.on_token(g, t)),
                                   fun.on_token(g, t))) {
          rep.pass = false;
          rep.witness = "{\"arrow\":" + base.describe_map(g) +
                        ",\"token\":" + btheta.describe_token(t) + "}";
          break;
        }
      }
    }
    parts.push_back(rep);
    if (!rep.pass) {
      auto total = merge_reports("extension", parts);
      total.params = "bound=" + std::to_string(bound);
      return total;
    }
  }
  {
    CheckReport rep;
    rep.name = "preserves-homotopy-cokernels";
    for (const auto& s : acorpus.arrows) {
      const auto t = ac::homotopy_cokernel(base, s);
      nh::CokernelData<Cat, Theta> image{ext.on_obj(t.obj), ext.on_map(t.c),
                                         ext.on_token(src.compose(s, t.c), t.gamma)};
      auto sub =
          nh::check_cokernel_universal(target.cat, target.theta, ext.on_map(s), image, probes,
                                       true);
      rep.cases += sub.cases;
      if (!sub.pass) {
        rep.pass = false;
        rep.witness = "{\"reason\":" + sub.witness + ",\"square\":" + src.describe_map(s) + "}";
        break;
      }
    }
    parts.push_back(rep);
  }
  {
    CheckReport rep;
    rep.name = "preserves-strong-colimits";
    auto sub = check_strong_initial_object(target.cat, target.theta, ext.on_obj(src.initial()),
                                           probes);
    rep.cases += sub.cases;
    if (!sub.pass) {
      rep.pass = false;
      rep.witness = sub.witness;
    }
    for (std::size_t i = 0; i < acorpus.arrows.size() && rep.pass; ++i)
      for (std::size_t j = i; j < acorpus.arrows.size(); ++j) {
        const auto& f = acorpus.arrows[i];
        const auto& g = acorpus.arrows[j];
        if (!src.obj_eq(src.dom(f), src.dom(g))) continue;
        const auto po = src.pushout(f, g);
        PushoutData<typename Cat::Obj, typename Cat::Map> image{
            ext.on_obj(po.apex), ext.on_map(po.leg_b), ext.on_map(po.leg_c)};
        auto sub2 = check_strong_pushout_cocone(target.cat, target.theta, ext.on_map(f),
                                                ext.on_map(g), image, probes);
        rep.cases += sub2.cases;
        if (!sub2.pass) {
          rep.pass = false;
          rep.witness = "{\"reason\":" + sub2.witness + ",\"span\":[" + src.describe_map(f) +
                        "," + src.describe_map(g) + "]}";
          break;
        }
      }
    parts.push_back(rep);
  }
  auto total = merge_reports("extension", parts);
  total.params = "bound=" + std::to_string(bound);
  return total;
}

template <class C, class Cat, class Theta>
CheckReport check_extension(const ExtendedFunctor<C, Cat, Theta>& ext, std::size_t bound) {
  return check_extension_candidate(ext.base(), ext.functor(), ext.target(),
                                   ext.as_null_functor(), bound);
}

}  // namespace hoco::completion
