#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hoco/core.hpp"

// The abstract nullhomotopy-structure contract and its probe-based checkers.
// A carrier category handle `Cat` provides objects/hom enumeration and
// composition; a structure `Theta` over it provides, per arrow g, the token
// set Theta(g) together with the two-sided whiskering action f . t . h.
//
// Theta surface (duck-typed):
//   using Token;
//   bool member(g, t);  std::vector<Token> enumerate(g);
//   Token whisker(f, t, h);  bool token_eq(s, t);  std::string describe_token(t);
namespace hoco::nullhom {

template <class Cat>
struct Corpus {
  std::vector<typename Cat::Obj> objects;
  std::vector<typename Cat::Map> arrows;
};

template <class Cat>
Corpus<Cat> make_corpus(const Cat& cat, std::size_t bound) {
  Corpus<Cat> c;
  c.objects = cat.objects(bound);
  for (const auto& x : c.objects)
    for (const auto& y : c.objects)
      for (auto& f : cat.hom(x, y)) c.arrows.push_back(std::move(f));
  return c;
}

template <class Cat>
std::size_t obj_index(const Cat& cat, const std::vector<typename Cat::Obj>& objects,
                      const typename Cat::Obj& x) {
  for (std::size_t i = 0; i < objects.size(); ++i)
    if (cat.obj_eq(objects[i], x)) return i;
  throw Error("object not in corpus: " + cat.describe_obj(x));
}

// Tokens on g are arrows into the initial object whose extension along the
// unique arrow out of it recovers g; whiskering acts by precomposition only.
template <class C>
struct ThetaInitial {
  C base;
  using Carrier = C;
  using Token = typename C::Map;

  bool member(const typename C::Map& g, const Token& t) const {
    return base.obj_eq(base.dom(t), base.dom(g)) && base.obj_eq(base.cod(t), base.initial()) &&
           base.eq(base.compose(t, base.initial_arrow(base.cod(g))), g);
  }
  std::vector<Token> enumerate(const typename C::Map& g) const {
    std::vector<Token> out;
    for (const auto& t : base.hom(base.dom(g), base.initial()))
      if (member(g, t)) out.push_back(t);
    return out;
  }
  Token whisker(const typename C::Map& f, const Token& t, const typename C::Map& h) const {
    (void)h;
    return base.compose(f, t);
  }
  bool token_eq(const Token& s, const Token& t) const { return base.eq(s, t); }
  std::string describe_token(const Token& t) const {
    return "{\"payload\":" + base.describe_map(t) + ",\"tag\":\"EmptyWitness\"}";
  }
};

// Dual structure from the terminal object; whiskering acts by postcomposition.
template <class C>
struct ThetaTerminal {
  C base;
  using Carrier = C;
  using Token = typename C::Map;

  bool member(const typename C::Map& g, const Token& t) const {
    return base.obj_eq(base.dom(t), base.terminal()) && base.obj_eq(base.cod(t), base.cod(g)) &&
           base.eq(base.compose(base.terminal_arrow(base.dom(g)), t), g);
  }
  std::vector<Token> enumerate(const typename C::Map& g) const {
    std::vector<Token> out;
    for (const auto& t : base.hom(base.terminal(), base.cod(g)))
      if (member(g, t)) out.push_back(t);
    return out;
  }
  Token whisker(const typename C::Map& f, const Token& t, const typename C::Map& h) const {
    (void)f;
    return base.compose(t, h);
  }
  bool token_eq(const Token& s, const Token& t) const { return base.eq(s, t); }
  std::string describe_token(const Token& t) const {
    return "{\"payload\":" + base.describe_map(t) + ",\"tag\":\"TerminalWitness\"}";
  }
};

namespace detail {

// Composable-pair tables: for each arrow i, the arrows j with cod(j) = dom(i)
// together with the composite j.i, and dually.
template <class Cat>
struct ComposablePairs {
  std::vector<std::vector<std::size_t>> into;   // arrow indices into each object
  std::vector<std::vector<std::size_t>> outof;  // arrow indices out of each object
  std::vector<std::size_t> dom_of, cod_of;      // object index per arrow
};

template <class Cat>
ComposablePairs<Cat> index_corpus(const Cat& cat, const Corpus<Cat>& corpus) {
  ComposablePairs<Cat> t;
  t.into.resize(corpus.objects.size());
  t.outof.resize(corpus.objects.size());
  for (std::size_t i = 0; i < corpus.arrows.size(); ++i) {
    std::size_t d = obj_index(cat, corpus.objects, cat.dom(corpus.arrows[i]));
    std::size_t c = obj_index(cat, corpus.objects, cat.cod(corpus.arrows[i]));
    t.dom_of.push_back(d);
    t.cod_of.push_back(c);
    t.outof[d].push_back(i);
    t.into[c].push_back(i);
  }
  return t;
}

}  // namespace detail

// Whisker laws (a) and (b): unit whiskering is the identity, and iterated
// whiskering agrees with whiskering by the composites, on every composable
// quintuple (f', f, g, h, h') whose middle arrow carries a token. Membership
// of every whisker output is verified along the way.
template <class Cat, class Theta>
CheckReport check_structure_axioms(const Cat& cat, const Theta& theta, const Corpus<Cat>& corpus) {
  CheckReport rep;
  rep.name = "structure-axioms";
  auto idx = detail::index_corpus(cat, corpus);
  const std::size_t n = corpus.arrows.size();
  // composable-pair tables, lazily built and shared across middle arrows
  std::vector<char> have_preds(n, 0), have_succs(n, 0);
  std::vector<std::vector<std::pair<std::size_t, typename Cat::Map>>> preds(n), succs(n);
  auto preds_of = [&](std::size_t i) -> const std::vector<std::pair<std::size_t, typename Cat::Map>>& {
    if (!have_preds[i]) {
      for (std::size_t j : idx.into[idx.dom_of[i]])
        preds[i].emplace_back(j, cat.compose(corpus.arrows[j], corpus.arrows[i]));
      have_preds[i] = 1;
    }
    return preds[i];
  };
  auto succs_of = [&](std::size_t i) -> const std::vector<std::pair<std::size_t, typename Cat::Map>>& {
    if (!have_succs[i]) {
      for (std::size_t j : idx.outof[idx.cod_of[i]])
        succs[i].emplace_back(j, cat.compose(corpus.arrows[i], corpus.arrows[j]));
      have_succs[i] = 1;
    }
    return succs[i];
  };
  for (std::size_t gi = 0; gi < corpus.arrows.size(); ++gi) {
    const auto& g = corpus.arrows[gi];
    auto tokens = theta.enumerate(g);
    if (tokens.empty()) continue;
    const auto id_dom = cat.identity(cat.dom(g));
    const auto id_cod = cat.identity(cat.cod(g));
    for (const auto& t : tokens) {
      ++rep.cases;
      if (!theta.token_eq(theta.whisker(id_dom, t, id_cod), t)) {
        rep.pass = false;
        rep.witness = "{\"arrow\":" + cat.describe_map(g) +
                      ",\"law\":\"unit\",\"token\":" + theta.describe_token(t) + "}";
        return rep;
      }
    }
    const auto& ins = idx.into[idx.dom_of[gi]];
    const auto& outs = idx.outof[idx.cod_of[gi]];
    for (std::size_t fi : ins) {
      const auto& f = corpus.arrows[fi];
      const auto& preds_f = preds_of(fi);
      const auto fg = cat.compose(f, g);
      for (std::size_t hi : outs) {
        const auto& h = corpus.arrows[hi];
        const auto& succs_h = succs_of(hi);
        const auto fgh = cat.compose(fg, h);
        for (const auto& t : tokens) {
          const auto mid = theta.whisker(f, t, h);
          ++rep.cases;
          if (!theta.member(fgh, mid)) {
            rep.pass = false;
            rep.witness = "{\"arrow\":" + cat.describe_map(g) + ",\"law\":\"membership\",\"left\":" +
                          cat.describe_map(f) + ",\"right\":" + cat.describe_map(h) +
                          ",\"token\":" + theta.describe_token(t) + "}";
            return rep;
          }
          for (const auto& [pi, ff] : preds_f)
            for (const auto& [si, hh] : succs_h) {
              ++rep.cases;
              const auto lhs = theta.whisker(ff, t, hh);
              const auto rhs = theta.whisker(corpus.arrows[pi], mid, corpus.arrows[si]);
              if (!theta.token_eq(lhs, rhs)) {
                rep.pass = false;
                rep.witness = "{\"arrow\":" + cat.describe_map(g) + ",\"law\":\"a\",\"left\":[" +
                              cat.describe_map(corpus.arrows[pi]) + "," + cat.describe_map(f) +
                              "],\"right\":[" + cat.describe_map(h) + "," +
                              cat.describe_map(corpus.arrows[si]) +
                              "],\"token\":" + theta.describe_token(t) + "}";
                return rep;
              }
            }
        }
      }
    }
  }
  return rep;
}

// alpha . g = f . beta for consecutive tokens alpha on f, beta on g.
template <class Cat, class Theta>
CheckReport check_reduced_interchange(const Cat& cat, const Theta& theta, const Corpus<Cat>& corpus) {
  CheckReport rep;
  rep.name = "reduced-interchange";
  for (const auto& f : corpus.arrows) {
    auto alphas = theta.enumerate(f);
    if (alphas.empty()) continue;
    const auto id_dom = cat.identity(cat.dom(f));
    for (const auto& g : corpus.arrows) {
      if (!cat.obj_eq(cat.dom(g), cat.cod(f))) continue;
      auto betas = theta.enumerate(g);
      if (betas.empty()) continue;
      const auto id_cod = cat.identity(cat.cod(g));
      for (const auto& alpha : alphas)
        for (const auto& beta : betas) {
          ++rep.cases;
          if (!theta.token_eq(theta.whisker(id_dom, alpha, g), theta.whisker(f, beta, id_cod))) {
            rep.pass = false;
            rep.witness = "{\"alpha\":" + theta.describe_token(alpha) + ",\"beta\":" +
                          theta.describe_token(beta) + ",\"f\":" + cat.describe_map(f) +
                          ",\"g\":" + cat.describe_map(g) + "}";
            return rep;
          }
        }
    }
  }
  return rep;
}

// A functor together with a per-arrow action on tokens.
template <class SrcCat, class SrcTheta, class DstCat, class DstTheta>
struct NullFunctor {
  std::function<typename DstCat::Obj(const typename SrcCat::Obj&)> on_obj;
  std::function<typename DstCat::Map(const typename SrcCat::Map&)> on_map;
  std::function<typename DstTheta::Token(const typename SrcCat::Map&,
                                         const typename SrcTheta::Token&)>
      on_token;
};

template <class SrcCat, class SrcTheta, class DstCat, class DstTheta>
CheckReport check_null_functor(const SrcCat& scat, const SrcTheta& stheta, const DstCat& dcat,
                               const DstTheta& dtheta,
                               const NullFunctor<SrcCat, SrcTheta, DstCat, DstTheta>& fun,
                               const Corpus<SrcCat>& corpus) {
  CheckReport rep;
  rep.name = "null-functor";
  for (const auto& x : corpus.objects) {
    ++rep.cases;
    if (!dcat.eq(fun.on_map(scat.identity(x)), dcat.identity(fun.on_obj(x)))) {
      rep.pass = false;
      rep.witness = "{\"identity_at\":" + scat.describe_obj(x) + "}";
      return rep;
    }
  }
  for (const auto& f : corpus.arrows)
    for (const auto& g : corpus.arrows) {
      if (!scat.obj_eq(scat.dom(g), scat.cod(f))) continue;
      ++rep.cases;
      if (!dcat.eq(fun.on_map(scat.compose(f, g)), dcat.compose(fun.on_map(f), fun.on_map(g)))) {
        rep.pass = false;
        rep.witness = "{\"compose\":[" + scat.describe_map(f) + "," + scat.describe_map(g) + "]}";
        return rep;
      }
    }
  for (const auto& g : corpus.arrows) {
    auto tokens = stheta.enumerate(g);
    if (tokens.empty()) continue;
    const auto fg = fun.on_map(g);
    for (const auto& t : tokens) {
      ++rep.cases;
      if (!dtheta.member(fg, fun.on_token(g, t))) {
        rep.pass = false;
        rep.witness = "{\"arrow\":" + scat.describe_map(g) +
                      ",\"law\":\"membership\",\"token\":" + stheta.describe_token(t) + "}";
        return rep;
      }
    }
    for (const auto& f : corpus.arrows) {
      if (!scat.obj_eq(scat.cod(f), scat.dom(g))) continue;
      for (const auto& h : corpus.arrows) {
        if (!scat.obj_eq(scat.dom(h), scat.cod(g))) continue;
        const auto fgh = scat.compose(scat.compose(f, g), h);
        for (const auto& t : tokens) {
          ++rep.cases;
          const auto lhs = fun.on_token(fgh, stheta.whisker(f, t, h));
          const auto rhs = dtheta.whisker(fun.on_map(f), fun.on_token(g, t), fun.on_map(h));
          if (!dtheta.token_eq(lhs, rhs)) {
            rep.pass = false;
            rep.witness = "{\"arrow\":" + scat.describe_map(g) + ",\"left\":" + scat.describe_map(f) +
                          ",\"right\":" + scat.describe_map(h) +
                          ",\"token\":" + stheta.describe_token(t) + "}";
            return rep;
          }
        }
      }
    }
  }
  return rep;
}

// A transformation between parallel null functors, given by its components.
template <class SrcCat, class DstCat>
struct TwoMorphism {
  std::function<typename DstCat::Map(const typename SrcCat::Obj&)> component;
};

template <class SrcCat, class SrcTheta, class DstCat, class DstTheta>
CheckReport check_two_morphism(const SrcCat& scat, const SrcTheta& stheta, const DstCat& dcat,
                               const DstTheta& dtheta,
                               const NullFunctor<SrcCat, SrcTheta, DstCat, DstTheta>& funf,
                               const NullFunctor<SrcCat, SrcTheta, DstCat, DstTheta>& fung,
                               const TwoMorphism<SrcCat, DstCat>& alpha,
                               const Corpus<SrcCat>& corpus) {
  CheckReport rep;
  rep.name = "two-morphism";
  for (const auto& x : corpus.objects) {
    ++rep.cases;
    const auto comp = alpha.component(x);
    if (!dcat.obj_eq(dcat.dom(comp), funf.on_obj(x)) ||
        !dcat.obj_eq(dcat.cod(comp), fung.on_obj(x))) {
      rep.pass = false;
      rep.witness = "{\"component_at\":" + scat.describe_obj(x) + ",\"law\":\"typing\"}";
      return rep;
    }
  }
  for (const auto& f : corpus.arrows) {
    ++rep.cases;
    const auto lhs = dcat.compose(funf.on_map(f), alpha.component(scat.cod(f)));
    const auto rhs = dcat.compose(alpha.component(scat.dom(f)), fung.on_map(f));
    if (!dcat.eq(lhs, rhs)) {
      rep.pass = false;
      rep.witness = "{\"arrow\":" + scat.describe_map(f) + ",\"law\":\"naturality\"}";
      return rep;
    }
  }
  for (const auto& g : corpus.arrows) {
    auto tokens = stheta.enumerate(g);
    if (tokens.empty()) continue;
    const auto a_dom = alpha.component(scat.dom(g));
    const auto a_cod = alpha.component(scat.cod(g));
    const auto id_f = dcat.identity(funf.on_obj(scat.dom(g)));
    const auto id_g = dcat.identity(fung.on_obj(scat.cod(g)));
    for (const auto& t : tokens) {
      ++rep.cases;
      const auto lhs = dtheta.whisker(a_dom, fung.on_token(g, t), id_g);
      const auto rhs = dtheta.whisker(id_f, funf.on_token(g, t), a_cod);
      if (!dtheta.token_eq(lhs, rhs)) {
        rep.pass = false;
        rep.witness = "{\"arrow\":" + scat.describe_map(g) +
                      ",\"law\":\"token\",\"token\":" + stheta.describe_token(t) + "}";
        return rep;
      }
    }
  }
  return rep;
}

// |Theta(initial arrow)| = 1 at every probe object.
template <class Cat, class Theta>
CheckReport check_strong_initial(const Cat& cat, const Theta& theta,
                                 const std::vector<typename Cat::Obj>& objects) {
  CheckReport rep;
  rep.name = "strong-initial";
  for (const auto& x : objects) {
    ++rep.cases;
    auto tokens = theta.enumerate(cat.initial_arrow(x));
    if (tokens.size() != 1) {
      rep.pass = false;
      rep.witness = "{\"count\":" + std::to_string(tokens.size()) +
                    ",\"object\":" + cat.describe_obj(x) + "}";
      return rep;
    }
  }
  return rep;
}

// Explicit finite diagrams, used to state naturality for token families.
struct Shape {
  std::size_t objects = 0;
  struct Edge {
    std::size_t src, dst;
  };
  std::vector<Edge> edges;
};

template <class Cat>
struct DiagramFunctor {
  std::vector<typename Cat::Obj> obj;
  std::vector<typename Cat::Map> edge;
};

template <class Cat, class Theta>
struct NaturalNullhomotopy {
  std::vector<typename Cat::Map> arrow;      // one per shape object
  std::vector<typename Theta::Token> token;  // one per shape object
};

template <class Cat, class Theta>
CheckReport check_natural_nullhomotopy(const Cat& cat, const Theta& theta, const Shape& shape,
                                       const DiagramFunctor<Cat>& fdiag,
                                       const DiagramFunctor<Cat>& gdiag,
                                       const NaturalNullhomotopy<Cat, Theta>& tau) {
  CheckReport rep;
  rep.name = "natural-nullhomotopy";
  if (tau.arrow.size() != shape.objects || tau.token.size() != shape.objects ||
      fdiag.obj.size() != shape.objects || gdiag.obj.size() != shape.objects)
    throw Error("natural nullhomotopy families do not match the shape");
  for (std::size_t i = 0; i < shape.objects; ++i) {
    ++rep.cases;
    if (!cat.obj_eq(cat.dom(tau.arrow[i]), fdiag.obj[i]) ||
        !cat.obj_eq(cat.cod(tau.arrow[i]), gdiag.obj[i]) ||
        !theta.member(tau.arrow[i], tau.token[i])) {
      rep.pass = false;
      rep.witness = "{\"law\":\"typing\",\"object\":" + std::to_string(i) + "}";
      return rep;
    }
  }
  for (std::size_t e = 0; e < shape.edges.size(); ++e) {
    const std::size_t i = shape.edges[e].src, j = shape.edges[e].dst;
    ++rep.cases;
    if (!cat.eq(cat.compose(fdiag.edge[e], tau.arrow[j]), cat.compose(tau.arrow[i], gdiag.edge[e]))) {
      rep.pass = false;
      rep.witness = "{\"edge\":" + std::to_string(e) + ",\"law\":\"naturality\"}";
      return rep;
    }
    ++rep.cases;
    const auto lhs = theta.whisker(cat.identity(fdiag.obj[i]), tau.token[i], gdiag.edge[e]);
    const auto rhs = theta.whisker(fdiag.edge[e], tau.token[j], cat.identity(gdiag.obj[j]));
    if (!theta.token_eq(lhs, rhs)) {
      rep.pass = false;
      rep.witness = "{\"edge\":" + std::to_string(e) + ",\"law\":\"token\"}";
      return rep;
    }
  }
  return rep;
}

// Unique pairing of compatible tokens through a pushout cocone. The
// compatibility premise is stated (and checked) as naturality of the
// span-shaped token family.
template <class Cat, class Theta>
typename Theta::Token strong_pushout_pair(const Cat& cat, const Theta& theta,
                                          const typename Cat::Map& f, const typename Cat::Map& g,
                                          const PushoutData<typename Cat::Obj, typename Cat::Map>& po,
                                          const typename Cat::Map& x, const typename Cat::Map& y,
                                          const typename Theta::Token& phi,
                                          const typename Theta::Token& psi) {
  const auto id_d = cat.identity(cat.cod(x));
  Shape span;
  span.objects = 3;
  span.edges = {{0, 1}, {0, 2}};
  DiagramFunctor<Cat> fd{{cat.dom(f), cat.dom(x), cat.dom(y)}, {f, g}};
  const auto target = cat.cod(x);
  DiagramFunctor<Cat> gd{{target, target, target},
                         {cat.identity(target), cat.identity(target)}};
  NaturalNullhomotopy<Cat, Theta> tau;
  tau.arrow = {cat.compose(f, x), x, y};
  tau.token = {theta.whisker(f, phi, cat.identity(target)), phi, psi};
  if (!check_natural_nullhomotopy(cat, theta, span, fd, gd, tau).pass)
    throw Error("strong_pushout_pair: tokens are not compatible over the span");

  const auto u = cat.copair(po, x, y);
  std::vector<typename Theta::Token> found;
  for (const auto& t : theta.enumerate(u))
    if (theta.token_eq(theta.whisker(po.leg_b, t, id_d), phi) &&
        theta.token_eq(theta.whisker(po.leg_c, t, id_d), psi))
      found.push_back(t);
  if (found.size() != 1)
    throw Error("strong_pushout_pair: expected exactly one pairing token, found " +
                std::to_string(found.size()));
  return found.front();
}

// Every compatible cocone-with-tokens over the span admits a unique pairing.
template <class Cat, class Theta>
CheckReport check_strong_pushout(const Cat& cat, const Theta& theta, const typename Cat::Map& f,
                                 const typename Cat::Map& g,
                                 const std::vector<typename Cat::Obj>& probe_objects) {
  CheckReport rep;
  rep.name = "strong-pushout";
  const auto po = cat.pushout(f, g);
  const auto id_cod = [&](const typename Cat::Map& m) { return cat.identity(cat.cod(m)); };
  for (const auto& d : probe_objects) {
    const auto id_d = cat.identity(d);
    auto xs = cat.hom(cat.cod(f), d);
    auto ys = cat.hom(cat.cod(g), d);
    for (const auto& x : xs) {
      const auto fx = cat.compose(f, x);
      auto phis = theta.enumerate(x);
      for (const auto& y : ys) {
        if (!cat.eq(fx, cat.compose(g, y))) continue;
        auto psis = theta.enumerate(y);
        if (phis.empty() || psis.empty()) continue;
        const auto u = cat.copair(po, x, y);
        auto us = theta.enumerate(u);
        for (const auto& phi : phis) {
          const auto fphi = theta.whisker(f, phi, id_d);
          for (const auto& psi : psis) {
            if (!theta.token_eq(fphi, theta.whisker(g, psi, id_d))) continue;
            ++rep.cases;
            std::size_t matches = 0;
            for (const auto& t : us)
              if (theta.token_eq(theta.whisker(po.leg_b, t, id_d), phi) &&
                  theta.token_eq(theta.whisker(po.leg_c, t, id_d), psi))
                ++matches;
            if (matches != 1) {
              rep.pass = false;
              rep.witness = "{\"cocone\":[" + cat.describe_map(x) + "," + cat.describe_map(y) +
                            "],\"count\":" + std::to_string(matches) + ",\"phi\":" +
                            theta.describe_token(phi) + ",\"psi\":" + theta.describe_token(psi) +
                            ",\"span\":[" + cat.describe_map(f) + "," + cat.describe_map(g) + "]}";
              return rep;
            }
          }
        }
      }
    }
  }
  (void)id_cod;
  return rep;
}

// Two tokens on a map out of the apex agreeing after both legs are equal.
template <class Cat, class Theta>
CheckReport check_pushout_cancellation(const Cat& cat, const Theta& theta,
                                       const typename Cat::Map& f, const typename Cat::Map& g,
                                       const std::vector<typename Cat::Obj>& probe_objects) {
  CheckReport rep;
  rep.name = "pushout-cancellation";
  const auto po = cat.pushout(f, g);
  for (const auto& d : probe_objects) {
    const auto id_d = cat.identity(d);
    for (const auto& u : cat.hom(po.apex, d)) {
      auto tokens = theta.enumerate(u);
      for (std::size_t i = 0; i < tokens.size(); ++i)
        for (std::size_t j = i + 1; j < tokens.size(); ++j) {
          ++rep.cases;
          if (theta.token_eq(theta.whisker(po.leg_b, tokens[i], id_d),
                             theta.whisker(po.leg_b, tokens[j], id_d)) &&
              theta.token_eq(theta.whisker(po.leg_c, tokens[i], id_d),
                             theta.whisker(po.leg_c, tokens[j], id_d))) {
            rep.pass = false;
            rep.witness = "{\"map\":" + cat.describe_map(u) + ",\"tokens\":[" +
                          theta.describe_token(tokens[i]) + "," + theta.describe_token(tokens[j]) +
                          "]}";
            return rep;
          }
        }
    }
  }
  return rep;
}

// Cokernel data in an arbitrary carrier: (obj, c: cod(g) -> obj, gamma on g.c).
template <class Cat, class Theta>
struct CokernelData {
  typename Cat::Obj obj;
  typename Cat::Map c;
  typename Theta::Token gamma;
};

// Universal property: every (D, h, phi on g.h) factors uniquely; then the
// strongness clause: every compatible token on c.h lifts uniquely.
template <class Cat, class Theta>
CheckReport check_cokernel_universal(const Cat& cat, const Theta& theta, const typename Cat::Map& g,
                                     const CokernelData<Cat, Theta>& ck,
                                     const std::vector<typename Cat::Obj>& probe_objects,
                                     bool include_strongness = true) {
  CheckReport rep;
  rep.name = "cokernel-universal";
  ++rep.cases;
  if (!theta.member(cat.compose(g, ck.c), ck.gamma)) {
    rep.pass = false;
    rep.witness = "{\"law\":\"token-membership\",\"token\":" + theta.describe_token(ck.gamma) + "}";
    return rep;
  }
  const auto id_dom = cat.identity(cat.dom(g));
  for (const auto& d : probe_objects) {
    auto cands = cat.hom(ck.obj, d);
    for (const auto& h : cat.hom(cat.cod(g), d)) {
      const auto gh = cat.compose(g, h);
      auto tokens = theta.enumerate(gh);
      for (const auto& phi : tokens) {
        ++rep.cases;
        std::size_t matches = 0;
        for (const auto& u : cands)
          if (cat.eq(cat.compose(ck.c, u), h) &&
              theta.token_eq(theta.whisker(id_dom, ck.gamma, u), phi))
            ++matches;
        if (matches != 1) {
          rep.pass = false;
          rep.witness = "{\"count\":" + std::to_string(matches) + ",\"h\":" + cat.describe_map(h) +
                        ",\"phi\":" + theta.describe_token(phi) + "}";
          return rep;
        }
      }
    }
    if (!include_strongness) continue;
    for (const auto& h : cands) {
      const auto ch = cat.compose(ck.c, h);
      const auto gamma_h = theta.whisker(id_dom, ck.gamma, h);
      for (const auto& phi : theta.enumerate(ch)) {
        if (!theta.token_eq(theta.whisker(g, phi, cat.identity(d)), gamma_h)) continue;
        ++rep.cases;
        std::size_t matches = 0;
        for (const auto& psi : theta.enumerate(h))
          if (theta.token_eq(theta.whisker(ck.c, psi, cat.identity(d)), phi)) ++matches;
        if (matches != 1) {
          rep.pass = false;
          rep.witness = "{\"count\":" + std::to_string(matches) + ",\"h\":" + cat.describe_map(h) +
                        ",\"law\":\"strongness\",\"phi\":" + theta.describe_token(phi) + "}";
          return rep;
        }
      }
    }
  }
  return rep;
}

// Kernel data: (obj, k: obj -> dom(g), kappa on k.g).
template <class Cat, class Theta>
struct KernelData {
  typename Cat::Obj obj;
  typename Cat::Map k;
  typename Theta::Token kappa;
};

// Dual quantifier: probe arrows run INTO the kernel object.
template <class Cat, class Theta>
CheckReport check_kernel_universal(const Cat& cat, const Theta& theta, const typename Cat::Map& g,
                                   const KernelData<Cat, Theta>& kd,
                                   const std::vector<typename Cat::Obj>& probe_objects) {
  CheckReport rep;
  rep.name = "kernel-universal";
  ++rep.cases;
  if (!theta.member(cat.compose(kd.k, g), kd.kappa)) {
    rep.pass = false;
    rep.witness = "{\"law\":\"token-membership\",\"token\":" + theta.describe_token(kd.kappa) + "}";
    return rep;
  }
  const auto id_cod = cat.identity(cat.cod(g));
  for (const auto& d : probe_objects) {
    auto cands = cat.hom(d, kd.obj);
    for (const auto& h : cat.hom(d, cat.dom(g))) {
      const auto hg = cat.compose(h, g);
      for (const auto& phi : theta.enumerate(hg)) {
        ++rep.cases;
        std::size_t matches = 0;
        for (const auto& u : cands)
          if (cat.eq(cat.compose(u, kd.k), h) &&
              theta.token_eq(theta.whisker(u, kd.kappa, id_cod), phi))
            ++matches;
        if (matches != 1) {
          rep.pass = false;
          rep.witness = "{\"count\":" + std::to_string(matches) + ",\"h\":" + cat.describe_map(h) +
                        ",\"phi\":" + theta.describe_token(phi) + "}";
          return rep;
        }
      }
    }
  }
  return rep;
}

}  // namespace hoco::nullhom
