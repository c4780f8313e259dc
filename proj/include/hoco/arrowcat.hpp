#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hoco/core.hpp"
#include "hoco/nullhom.hpp"

// The category of arrows over a base carrier: objects are base arrows
// (top object, structure arrow, bottom object), morphisms are commuting
// squares, and the diagonal structure assigns to a square the set of
// diagonals through it. Homotopy cokernels are computed from one base
// pushout and satisfy a strong universal property verified by the checkers.
namespace hoco::arrowcat {

namespace nh = hoco::nullhom;

template <class C>
struct ArrObject {
  typename C::Map a;
  friend bool operator==(const ArrObject&, const ArrObject&) = default;
};

template <class C>
struct ArrMorphism {
  ArrObject<C> src, dst;
  typename C::Map top, bottom;
  friend bool operator==(const ArrMorphism&, const ArrMorphism&) = default;
};

template <class C>
std::string describe_obj(const C& base, const ArrObject<C>& x) {
  return "{\"a\":" + base.describe_map(x.a) +
         ",\"bottom\":" + base.describe_obj(base.cod(x.a)) +
         ",\"top\":" + base.describe_obj(base.dom(x.a)) + "}";
}

template <class C>
std::string describe_map(const C& base, const ArrMorphism<C>& f) {
  return "{\"bottom\":" + base.describe_map(f.bottom) + ",\"dst\":" + describe_obj(base, f.dst) +
         ",\"src\":" + describe_obj(base, f.src) + ",\"top\":" + base.describe_map(f.top) + "}";
}

// Builds a square after checking shapes and commutativity.
template <class C>
ArrMorphism<C> make_square(const C& base, const ArrObject<C>& src, const ArrObject<C>& dst,
                           const typename C::Map& top, const typename C::Map& bottom) {
  if (!base.obj_eq(base.dom(top), base.dom(src.a)) ||
      !base.obj_eq(base.cod(top), base.dom(dst.a)) ||
      !base.obj_eq(base.dom(bottom), base.cod(src.a)) ||
      !base.obj_eq(base.cod(bottom), base.cod(dst.a)))
    throw Error("square sides do not match its corners: top=" + base.describe_map(top) +
                " bottom=" + base.describe_map(bottom) + " src=" + describe_obj(base, src) +
                " dst=" + describe_obj(base, dst));
  if (!base.eq(base.compose(src.a, bottom), base.compose(top, dst.a)))
    throw Error("square does not commute: top=" + base.describe_map(top) +
                " bottom=" + base.describe_map(bottom) + " src=" + describe_obj(base, src) +
                " dst=" + describe_obj(base, dst));
  return ArrMorphism<C>{src, dst, top, bottom};
}

template <class C>
struct ArrCat {
  C base;

  using Obj = ArrObject<C>;
  using Map = ArrMorphism<C>;
  using Pushout = PushoutData<Obj, Map>;

  Obj dom(const Map& f) const { return f.src; }
  Obj cod(const Map& f) const { return f.dst; }
  bool obj_eq(const Obj& x, const Obj& y) const { return base.eq(x.a, y.a); }
  bool eq(const Map& f, const Map& g) const {
    return obj_eq(f.src, g.src) && obj_eq(f.dst, g.dst) && base.eq(f.top, g.top) &&
           base.eq(f.bottom, g.bottom);
  }
  Map identity(const Obj& x) const {
    return Map{x, x, base.identity(base.dom(x.a)), base.identity(base.cod(x.a))};
  }
  Map compose(const Map& f, const Map& g) const {
    if (!obj_eq(f.dst, g.src))
      throw Error("cannot compose squares: " + arrowcat::describe_map(base, f) + " then " +
                  arrowcat::describe_map(base, g));
    return Map{f.src, g.dst, base.compose(f.top, g.top), base.compose(f.bottom, g.bottom)};
  }

  Obj initial() const { return Obj{base.initial_arrow(base.initial())}; }
  Map initial_arrow(const Obj& x) const {
    return Map{initial(), x, base.initial_arrow(base.dom(x.a)), base.initial_arrow(base.cod(x.a))};
  }
  Obj terminal() const { return Obj{base.terminal_arrow(base.terminal())}; }
  Map terminal_arrow(const Obj& x) const {
    return Map{x, terminal(), base.terminal_arrow(base.dom(x.a)),
               base.terminal_arrow(base.cod(x.a))};
  }

  // Level-wise pushout; the apex arrow mediates from the top pushout to the
  // bottom one through the two structure arrows.
  Pushout pushout(const Map& f, const Map& g) const {
    if (!obj_eq(f.src, g.src))
      throw Error("pushout span sources differ: " + arrowcat::describe_map(base, f) + " vs " +
                  arrowcat::describe_map(base, g));
    auto pt = base.pushout(f.top, g.top);
    auto pb = base.pushout(f.bottom, g.bottom);
    Obj apex{base.copair(pt, base.compose(f.dst.a, pb.leg_b), base.compose(g.dst.a, pb.leg_c))};
    Pushout po;
    po.apex = apex;
    po.leg_b = Map{f.dst, apex, pt.leg_b, pb.leg_b};
    po.leg_c = Map{g.dst, apex, pt.leg_c, pb.leg_c};
    return po;
  }

  Map copair(const Pushout& po, const Map& x, const Map& y) const {
    if (!obj_eq(x.dst, y.dst)) throw Error("copair targets differ");
    typename C::Pushout pt{base.dom(po.apex.a), po.leg_b.top, po.leg_c.top};
    typename C::Pushout pb{base.cod(po.apex.a), po.leg_b.bottom, po.leg_c.bottom};
    auto ut = base.copair(pt, x.top, y.top);
    auto ub = base.copair(pb, x.bottom, y.bottom);
    return make_square(base, po.apex, x.dst, ut, ub);
  }

  std::vector<Obj> objects(std::size_t bound) const {
    std::vector<Obj> out;
    for (const auto& t : base.objects(bound))
      for (const auto& b : base.objects(bound))
        for (const auto& a : base.hom(t, b)) out.push_back(Obj{a});
    return out;
  }
  std::vector<Map> hom(const Obj& x, const Obj& y) const {
    std::vector<Map> out;
    for (const auto& t : base.hom(base.dom(x.a), base.dom(y.a)))
      for (const auto& b : base.hom(base.cod(x.a), base.cod(y.a)))
        if (base.eq(base.compose(x.a, b), base.compose(t, y.a))) out.push_back(Map{x, y, t, b});
    return out;
  }

  std::string describe_obj(const Obj& x) const { return arrowcat::describe_obj(base, x); }
  std::string describe_map(const Map& f) const { return arrowcat::describe_map(base, f); }
};

// Diagonals through a square: t runs from the bottom of the source to the top
// of the target, recovering both sides of the square.
template <class C>
struct ThetaDelta {
  C base;
  using Carrier = ArrCat<C>;
  using Token = typename C::Map;

  bool member(const ArrMorphism<C>& g, const Token& t) const {
    return base.obj_eq(base.dom(t), base.cod(g.src.a)) &&
           base.obj_eq(base.cod(t), base.dom(g.dst.a)) &&
           base.eq(base.compose(g.src.a, t), g.top) && base.eq(base.compose(t, g.dst.a), g.bottom);
  }
  std::vector<Token> enumerate(const ArrMorphism<C>& g) const {
    std::vector<Token> out;
    for (const auto& t : base.hom(base.cod(g.src.a), base.dom(g.dst.a)))
      if (member(g, t)) out.push_back(t);
    return out;
  }
  Token whisker(const ArrMorphism<C>& f, const Token& t, const ArrMorphism<C>& h) const {
    return base.compose(base.compose(f.bottom, t), h.top);
  }
  bool token_eq(const Token& s, const Token& t) const { return base.eq(s, t); }
  std::string describe_token(const Token& t) const {
    return "{\"payload\":" + base.describe_map(t) + ",\"tag\":\"DiagonalWitness\"}";
  }
};

// Full embedding of the base: an object becomes the arrow out of the initial
// object, and a token becomes the diagonal with the same payload.
template <class C>
nh::NullFunctor<C, nh::ThetaInitial<C>, ArrCat<C>, ThetaDelta<C>> gamma_functor(const C& base) {
  nh::NullFunctor<C, nh::ThetaInitial<C>, ArrCat<C>, ThetaDelta<C>> nf;
  nf.on_obj = [base](const typename C::Obj& x) { return ArrObject<C>{base.initial_arrow(x)}; };
  nf.on_map = [base](const typename C::Map& g) {
    return make_square(base, ArrObject<C>{base.initial_arrow(base.dom(g))},
                       ArrObject<C>{base.initial_arrow(base.cod(g))},
                       base.identity(base.initial()), g);
  };
  nf.on_token = [](const typename C::Map&, const typename C::Map& t) { return t; };
  return nf;
}

// A homotopy cokernel presented by its object, quotient map, token, and the
// base pushout it was built from.
template <class C>
struct CokernelTriple {
  ArrMorphism<C> source;
  ArrObject<C> obj;
  ArrMorphism<C> c;
  typename C::Map gamma;
  typename C::Pushout po;
};

// One base pushout computes the whole triple: push the structure arrow of the
// source along the top of the square, mediate into the target bottom.
template <class C>
CokernelTriple<C> homotopy_cokernel(const C& base, const ArrMorphism<C>& f) {
  CokernelTriple<C> t;
  t.source = f;
  t.po = base.pushout(f.src.a, f.top);
  t.obj = ArrObject<C>{base.copair(t.po, f.bottom, f.dst.a)};
  t.c = make_square(base, f.dst, t.obj, t.po.leg_c, base.identity(base.cod(f.dst.a)));
  t.gamma = t.po.leg_b;
  return t;
}

// Given h out of the target and a diagonal phi through source.h, produce the
// unique square h' out of the cokernel with c.h' = h and gamma whiskered into
// h' equal to phi.
template <class C>
ArrMorphism<C> cokernel_factorize(const C& base, const CokernelTriple<C>& t,
                                  const ArrMorphism<C>& h, const typename C::Map& phi) {
  ThetaDelta<C> th{base};
  if (!th.member(ArrCat<C>{base}.compose(t.source, h), phi))
    throw Error("factorization token is not a diagonal of the composite: " +
                base.describe_map(phi));
  auto u = base.copair(t.po, phi, h.top);
  return make_square(base, t.obj, h.dst, u, h.bottom);
}

// Unique diagonal through h restricting to phi along the quotient map. The
// compatibility premise (source whiskered into phi equals gamma whiskered
// into h) is checked first.
template <class C>
typename C::Map strong_lift(const C& base, const CokernelTriple<C>& t, const ArrMorphism<C>& h,
                            const typename C::Map& phi) {
  ArrCat<C> ac{base};
  ThetaDelta<C> th{base};
  const auto ch = ac.compose(t.c, h);
  if (!th.member(ch, phi))
    throw Error("lift token is not a diagonal of the composite: " + base.describe_map(phi));
  const auto lhs = th.whisker(t.source, phi, ac.identity(h.dst));
  const auto rhs = th.whisker(ac.identity(t.source.src), t.gamma, h);
  if (!base.eq(lhs, rhs))
    throw Error("lift token is not compatible with the cokernel token: " + base.describe_map(phi));
  std::vector<typename C::Map> found;
  const auto id_d = ac.identity(h.dst);
  for (const auto& psi : th.enumerate(h))
    if (base.eq(th.whisker(t.c, psi, id_d), phi)) found.push_back(psi);
  if (found.size() != 1)
    throw Error("expected exactly one lifted diagonal, found " + std::to_string(found.size()));
  return found.front();
}

// Mediating square between cokernels of the two vertical arrows of a
// commuting square of squares.
template <class C>
ArrMorphism<C> cokernel_induced_arrow(const C& base, const CokernelTriple<C>& ta,
                                      const CokernelTriple<C>& tb, const ArrMorphism<C>& f,
                                      const ArrMorphism<C>& f0) {
  ArrCat<C> ac{base};
  if (!ac.eq(ac.compose(ta.source, f0), ac.compose(f, tb.source)))
    throw Error("connecting squares do not commute with the sources");
  ThetaDelta<C> th{base};
  const auto h = ac.compose(f0, tb.c);
  const auto phi = th.whisker(f, tb.gamma, ac.identity(tb.obj));
  return cokernel_factorize(base, ta, h, phi);
}

// When the connecting pair is null via a diagonal d, the induced square
// carries a canonical diagonal, obtained by lifting d whiskered into the
// second cokernel token.
template <class C>
std::pair<ArrMorphism<C>, typename C::Map> cokernel_induced_nullhomotopy(
    const C& base, const CokernelTriple<C>& ta, const CokernelTriple<C>& tb,
    const ArrMorphism<C>& d) {
  ArrCat<C> ac{base};
  ThetaDelta<C> th{base};
  const auto f = ac.compose(ta.source, d);
  const auto f0 = ac.compose(d, tb.source);
  const auto h = cokernel_induced_arrow(base, ta, tb, f, f0);
  const auto phi = th.whisker(d, tb.gamma, ac.identity(tb.obj));
  return {h, strong_lift(base, ta, h, phi)};
}

// Universal-property check (existence, uniqueness, strong lifting) for the
// computed cokernel of f against every probe target.
template <class C>
CheckReport check_universal(const C& base, const ArrMorphism<C>& f,
                            const std::vector<ArrObject<C>>& probes) {
  auto t = homotopy_cokernel(base, f);
  ArrCat<C> ac{base};
  ThetaDelta<C> th{base};
  nh::CokernelData<ArrCat<C>, ThetaDelta<C>> ck{t.obj, t.c, t.gamma};
  auto rep = nh::check_cokernel_universal(ac, th, f, ck, probes, true);
  rep.name = "cokernel-universal";
  return rep;
}

// Constructive pairing for the diagonal structure: compatible diagonals glue
// along the bottom pushout.
template <class C>
typename C::Map pair_tokens(const C& base, const ArrMorphism<C>& f, const ArrMorphism<C>& g,
                            const typename C::Map& phi, const typename C::Map& psi) {
  if (!base.eq(base.compose(f.bottom, phi), base.compose(g.bottom, psi)))
    throw Error("diagonals are not compatible over the span: " + base.describe_map(phi) + " and " +
                base.describe_map(psi));
  auto pb = base.pushout(f.bottom, g.bottom);
  return base.copair(pb, phi, psi);
}

// Strongness of the level-wise pushout, swept over diagonal pairs directly: a
// diagonal determines its square, so the cocones are reconstructed from the
// tokens. The glued diagonal must be the unique one restricting to the pair,
// and must agree with the constructive pairing.
template <class C>
CheckReport check_strong_pushout_squares(const C& base, const ArrMorphism<C>& f,
                                         const ArrMorphism<C>& g,
                                         const std::vector<ArrObject<C>>& probes) {
  CheckReport rep;
  rep.name = "strong-pushout-squares";
  ArrCat<C> ac{base};
  ThetaDelta<C> th{base};
  const auto po = ac.pushout(f, g);
  for (const auto& d : probes) {
    const auto id_d = ac.identity(d);
    for (const auto& phi : base.hom(base.cod(f.dst.a), base.dom(d.a))) {
      const auto fphi = base.compose(f.bottom, phi);
      const auto x = make_square(base, f.dst, d, base.compose(f.dst.a, phi),
                                 base.compose(phi, d.a));
      for (const auto& psi : base.hom(base.cod(g.dst.a), base.dom(d.a))) {
        if (!base.eq(fphi, base.compose(g.bottom, psi))) continue;
        ++rep.cases;
        const auto y = make_square(base, g.dst, d, base.compose(g.dst.a, psi),
                                   base.compose(psi, d.a));
        const auto u = ac.copair(po, x, y);
        std::vector<typename C::Map> found;
        for (const auto& t : th.enumerate(u))
          if (base.eq(th.whisker(po.leg_b, t, id_d), phi) &&
              base.eq(th.whisker(po.leg_c, t, id_d), psi))
            found.push_back(t);
        bool ok = found.size() == 1 && base.eq(found.front(), pair_tokens(base, f, g, phi, psi));
        if (!ok) {
          rep.pass = false;
          rep.witness = "{\"count\":" + std::to_string(found.size()) +
                        ",\"phi\":" + th.describe_token(phi) + ",\"psi\":" + th.describe_token(psi) +
                        ",\"span\":[" + ac.describe_map(f) + "," + ac.describe_map(g) + "]}";
          return rep;
        }
      }
    }
  }
  return rep;
}

// Fullness, faithfulness, and the token bijection of the embedding, on all
// base arrows within the bound.
template <class C>
CheckReport check_gamma_embedding(const C& base, std::size_t bound) {
  CheckReport rep;
  rep.name = "embedding-full-faithful";
  rep.params = "bound=" + std::to_string(bound);
  ArrCat<C> ac{base};
  ThetaDelta<C> th{base};
  nh::ThetaInitial<C> ti{base};
  auto gam = gamma_functor(base);
  for (const auto& x : base.objects(bound))
    for (const auto& y : base.objects(bound)) {
      auto maps = base.hom(x, y);
      std::vector<ArrMorphism<C>> images;
      for (const auto& m : maps) images.push_back(gam.on_map(m));
      for (std::size_t i = 0; i < images.size(); ++i)
        for (std::size_t j = i + 1; j < images.size(); ++j) {
          ++rep.cases;
          if (ac.eq(images[i], images[j])) {
            rep.pass = false;
            rep.witness = "{\"collapsed\":[" + base.describe_map(maps[i]) + "," +
                          base.describe_map(maps[j]) + "]}";
            return rep;
          }
        }
      auto arr_hom = ac.hom(gam.on_obj(x), gam.on_obj(y));
      ++rep.cases;
      if (arr_hom.size() != maps.size()) {
        rep.pass = false;
        rep.witness = "{\"hom\":[" + base.describe_obj(x) + "," + base.describe_obj(y) +
                      "],\"image_size\":" + std::to_string(maps.size()) +
                      ",\"square_count\":" + std::to_string(arr_hom.size()) + "}";
        return rep;
      }
      for (const auto& m : maps) {
        auto src_tokens = ti.enumerate(m);
        auto dst_tokens = th.enumerate(gam.on_map(m));
        ++rep.cases;
        bool sizes = src_tokens.size() == dst_tokens.size();
        bool mapped = true;
        for (const auto& t : src_tokens)
          if (!th.member(gam.on_map(m), gam.on_token(m, t))) mapped = false;
        if (!sizes || !mapped) {
          rep.pass = false;
          rep.witness = "{\"arrow\":" + base.describe_map(m) +
                        ",\"source_tokens\":" + std::to_string(src_tokens.size()) +
                        ",\"square_tokens\":" + std::to_string(dst_tokens.size()) + "}";
          return rep;
        }
      }
    }
  return rep;
}

// Cokernels of embedded arrows come out on the nose: the cokernel object of
// the image of a is a itself, with identity-shaped quotient data; and the
// cokernel of the arrow out of the initial object is the identity quotient.
template <class C>
CheckReport check_gamma_exactness(const C& base, std::size_t bound) {
  CheckReport rep;
  rep.name = "embedding-cokernel-exactness";
  rep.params = "bound=" + std::to_string(bound);
  ArrCat<C> ac{base};
  auto gam = gamma_functor(base);
  for (const auto& x : base.objects(bound))
    for (const auto& y : base.objects(bound))
      for (const auto& a : base.hom(x, y)) {
        ++rep.cases;
        auto t = homotopy_cokernel(base, gam.on_map(a));
        bool ok = base.eq(t.obj.a, a) && base.eq(t.c.top, base.initial_arrow(x)) &&
                  base.eq(t.c.bottom, base.identity(y)) && base.eq(t.gamma, base.identity(x));
        if (!ok) {
          rep.pass = false;
          rep.witness = "{\"arrow\":" + base.describe_map(a) +
                        ",\"cokernel\":" + ac.describe_obj(t.obj) + "}";
          return rep;
        }
        ++rep.cases;
        ArrObject<C> xa{a};
        auto t0 = homotopy_cokernel(base, ac.initial_arrow(xa));
        ok = base.eq(t0.obj.a, a) && ac.eq(t0.c, ac.identity(xa)) &&
             base.eq(t0.gamma, base.initial_arrow(x));
        if (!ok) {
          rep.pass = false;
          rep.witness = "{\"arrow\":" + base.describe_map(a) +
                        ",\"cokernel\":" + ac.describe_obj(t0.obj) + "}";
          return rep;
        }
      }
  return rep;
}

}  // namespace hoco::arrowcat
