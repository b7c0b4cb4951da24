#pragma once

// Distributors J ⇸ K (diagrams on J × K^op): composition by coends, units,
// tensor, trace, and weighted (co)limits.

#include <algorithm>
#include <optional>
#include <random>
#include <string>

#include "dlab/monoidal.hpp"

namespace dlab {

inline CatPtr dist_shape(const CatPtr& j, const CatPtr& k) { return pair_shape(j, opposite(k)); }

template <InstanceCategory B>
struct Distributor {
  CatPtr source, target;
  Diagram<B> payload;  // over J × K^op
};

template <InstanceCategory B>
Distributor<B> make_distributor(const CatPtr& j, const CatPtr& k, Diagram<B> payload) {
  if (!same_category(payload.shape, dist_shape(j, k)))
    throw CategoryError("distributor " + j->name() + " -/-> " + k->name() + ": payload has shape '" +
                        payload.shape->name() + "'");
  return {j, k, std::move(payload)};
}

template <InstanceCategory B>
std::optional<Distributor<B>> random_distributor(const B& b, const CatPtr& j, const CatPtr& k, std::mt19937_64& rng,
                                                 const RandomOptions& opt = {}) {
  auto d = random_diagram(b, dist_shape(j, k), rng, opt);
  if (!d) return std::nullopt;
  return Distributor<B>{j, k, std::move(*d)};
}

// ---------------------------------------------------------------------------
// Composition

template <InstanceCategory B>
struct Composite {
  CoendData<B> coend;
  Distributor<B> value;
};

/// (X ∘ Y)(j, l) = ∫^k X(j, k) ⊗ Y(k, l).
template <InstanceCategory B>
Composite<B> compose_dist(const KanEngine<B>& eng, const Distributor<B>& x, const Distributor<B>& y) {
  if (!same_category(x.target, y.source))
    throw CategoryError("cannot compose " + x.source->name() + " -/-> " + x.target->name() + " with " +
                        y.source->name() + " -/-> " + y.target->name());
  auto s = coend_shape(x.source, x.target, opposite(y.target));
  auto xy = external_tensor(eng.base(), x.payload, y.payload);
  const auto& full = s.full;
  auto p = [&](std::size_t i) { return projection(full, i); };
  auto F = pairing(xy.shape, full,
                   {pairing(x.payload.shape, full, {p(0), p(1)}), pairing(y.payload.shape, full, {p(2), p(3)})});
  auto c = coend(eng, s, restrict(F, xy));
  Distributor<B> v{x.source, y.target, c.value()};
  return {std::move(c), std::move(v)};
}

/// The triple coend ∫^{K×L} X(j,k) ⊗ Y(k,l) ⊗ Z(l,m), through which both
/// bracketings are compared.
template <InstanceCategory B>
CoendData<B> triple_coend(const KanEngine<B>& eng, const Distributor<B>& x, const Distributor<B>& y,
                          const Distributor<B>& z) {
  const auto& b = eng.base();
  auto kl = pair_shape(x.target, y.target);
  auto s = coend_shape(x.source, kl, opposite(z.target));
  auto xyz = external_tensor(b, external_tensor(b, x.payload, y.payload), z.payload);
  const auto& full = s.full;  // J, (K×L)^op, K×L, M^op
  auto p = [&](std::size_t i) { return projection(full, i); };
  auto klop = full->factors()[1];
  auto kop = compose(projection(klop, 0), p(1)), lop = compose(projection(klop, 1), p(1));
  auto k = compose(projection(kl, 0), p(2)), l = compose(projection(kl, 1), p(2));
  auto xy_shape = xyz.shape->factors()[0];
  auto F = pairing(xyz.shape, full,
                   {pairing(xy_shape, full,
                            {pairing(x.payload.shape, full, {p(0), kop}), pairing(y.payload.shape, full, {k, lop})}),
                    pairing(z.payload.shape, full, {l, p(3)})});
  return coend(eng, s, restrict(F, xyz));
}

template <InstanceCategory B>
struct AssociatorResult {
  std::optional<Distributor<B>> left, right;  // (X∘Y)∘Z and X∘(Y∘Z)
  std::optional<DiagramMap<B>> from_triple_left, from_triple_right, map;
  bool passed = false;
  std::string witness;
};

/// The associator (X∘Y)∘Z → X∘(Y∘Z), assembled from the comparisons of both
/// iterated coends with the triple coend.
template <InstanceCategory B>
AssociatorResult<B> associator(const KanEngine<B>& eng, const Distributor<B>& x, const Distributor<B>& y,
                               const Distributor<B>& z) {
  const auto& b = eng.base();
  AssociatorResult<B> res;
  auto xy = compose_dist(eng, x, y);
  auto xy_z = compose_dist(eng, xy.value, z);
  auto yz = compose_dist(eng, y, z);
  auto x_yz = compose_dist(eng, x, yz.value);
  res.left = xy_z.value;
  res.right = x_yz.value;
  auto t = triple_coend(eng, x, y, z);
  if (!xy.coend.lan.unit || !xy_z.coend.lan.unit || !yz.coend.lan.unit || !x_yz.coend.lan.unit) {
    res.witness = "coend units unavailable";
    return res;
  }
  const auto& I = *t.shape.indexing;
  const auto& KL = *t.shape.k;
  const auto& K = *x.target;
  const auto& L = *y.target;
  auto unit = [](const CoendData<B>& c, std::size_t a, std::size_t f, std::size_t d) {
    return c.lan.unit->at(c.shape.indexing->object_from_coords({a, f, d}));
  };
  auto comps = [&](bool left) {
    return [&, left](std::size_t i) {
      auto c = I.object_coords(i);  // (j, (f, g), m)
      auto fg = KL.morphism_coords(c[1]);
      auto f = fg[0], g = fg[1];
      auto j = c[0], m = c[2];
      auto k0 = K.source(f), k1 = K.target(f), l0 = L.source(g), l1 = L.target(g);
      auto xo = x.payload.at(x.payload.shape->object_from_coords({j, k1}));
      auto yo = y.payload.at(y.payload.shape->object_from_coords({k0, l1}));
      auto zo = z.payload.at(z.payload.shape->object_from_coords({l0, m}));
      if (left) return b.compose(unit(xy_z.coend, j, g, m), b.tensor(unit(xy.coend, j, f, l1), b.identity(zo)));
      return b.compose(unit(x_yz.coend, j, f, m),
                       b.compose(b.tensor(b.identity(xo), unit(yz.coend, k0, g, m)), b.associator(xo, yo, zo)));
    };
  };
  res.from_triple_left = eng.lan_transpose(t.lan, xy_z.value.payload, comps(true));
  res.from_triple_right = eng.lan_transpose(t.lan, x_yz.value.payload, comps(false));
  if (!res.from_triple_left || !res.from_triple_right) {
    res.witness = "comparison with the triple coend could not be constructed";
    return res;
  }
  auto inv = inverse(b, *res.from_triple_left);
  if (!inv) {
    res.witness = "triple coend -> (X o Y) o Z not invertible at " +
                  t.shape.jl->object_id(first_non_iso(b, *res.from_triple_left));
    return res;
  }
  auto o = first_non_iso(b, *res.from_triple_right);
  if (o != npos) {
    res.witness = "triple coend -> X o (Y o Z) not invertible at " + t.shape.jl->object_id(o);
    return res;
  }
  res.map = compose(b, *res.from_triple_right, *inv);
  if (!validate(b, *res.map).empty()) {
    res.witness = "associator is not natural";
    return res;
  }
  res.passed = true;
  return res;
}

// ---------------------------------------------------------------------------
// Units

/// hom_K(k, j) as a list of morphism indices.
inline std::vector<std::size_t> hom_list(const FinCategory& k, std::size_t from, std::size_t to) {
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m < k.num_morphisms(); ++m)
    if (k.source(m) == from && k.target(m) == to) out.push_back(m);
  return out;
}

/// The copower S · n as a colimit of n copies of the unit.
template <InstanceCategory B>
typename B::ColimitT copower_unit(const B& b, std::size_t n) {
  auto s = b.unit();
  return b.colimit(*discrete(n), std::vector<typename B::Object>(n, s),
                   std::vector<typename B::Morphism>(n, b.identity(s)));
}

/// x ⊗ (S · n) → z from maps x → z, one per summand.
template <InstanceCategory B>
typename B::Morphism out_of_copower(const B& b, const typename B::Object& x, const typename B::ColimitT& c,
                                    const typename B::Object& z, const std::vector<typename B::Morphism>& maps) {
  auto s = b.unit();
  std::vector<typename B::Morphism> legs;
  for (const auto& m : maps) legs.push_back(b.curry(x, s, b.compose(m, b.right_unitor(x))));
  auto h = b.factor_cocone(c, b.internal_hom(x, z), legs);
  if (!h) throw CategoryError("copower: legs do not factor");
  return b.compose(b.evaluation(x, z), b.tensor(b.identity(x), *h));
}

/// (S · n) ⊗ x → z.
template <InstanceCategory B>
typename B::Morphism out_of_copower_left(const B& b, const typename B::Object& x, const typename B::ColimitT& c,
                                         const typename B::Object& z, const std::vector<typename B::Morphism>& maps) {
  return b.compose(out_of_copower(b, x, c, z, maps), b.symmetry(c.apex, x));
}

/// U_K(j, k) = S · hom_K(k, j).
template <InstanceCategory B>
Distributor<B> unit_distributor(const B& b, const CatPtr& kp) {
  const auto& K = *kp;
  auto shape = dist_shape(kp, kp);
  Diagram<B> d{shape, {}, {}};
  std::vector<typename B::ColimitT> cop;
  std::vector<std::vector<std::size_t>> homs;
  for (std::size_t o = 0; o < shape->num_objects(); ++o) {
    auto c = shape->object_coords(o);
    homs.push_back(hom_list(K, c[1], c[0]));
    cop.push_back(copower_unit(b, homs.back().size()));
    d.objects.push_back(cop.back().apex);
  }
  for (std::size_t m = 0; m < shape->num_morphisms(); ++m) {
    auto c = shape->morphism_coords(m);  // a: j → j', and k' → k in K
    auto a = c[0], bk = c[1];
    auto src = shape->object_from_coords({K.source(a), K.target(bk)});
    auto tgt = shape->object_from_coords({K.target(a), K.source(bk)});
    std::vector<typename B::Morphism> legs;
    for (auto h : homs[src]) {
      auto img = K.compose(a, K.compose(h, bk));
      auto pos = std::find(homs[tgt].begin(), homs[tgt].end(), img) - homs[tgt].begin();
      legs.push_back(cop[tgt].legs[pos]);
    }
    d.morphisms.push_back(*b.factor_cocone(cop[src], cop[tgt].apex, legs));
  }
  return {kp, kp, std::move(d)};
}

/// X ∘ U_K → X, given X ∘ U_K.
template <InstanceCategory B>
std::optional<DiagramMap<B>> right_unit_map(const KanEngine<B>& eng, const Distributor<B>& x, const Composite<B>& xu) {
  const auto& b = eng.base();
  const auto& K = *x.target;
  const auto& I = *xu.coend.shape.indexing;
  const auto& P = *x.payload.shape;
  return eng.lan_transpose(xu.coend.lan, x.payload, [&](std::size_t i) {
    auto c = I.object_coords(i);  // (j, f: k0 → k1, l)
    auto j = c[0], f = c[1], l = c[2];
    auto k0 = K.source(f), k1 = K.target(f);
    auto src = x.payload.at(P.object_from_coords({j, k1}));
    auto tgt = x.payload.at(P.object_from_coords({j, l}));
    auto hs = hom_list(K, l, k0);
    std::vector<typename B::Morphism> maps;
    for (auto h : hs) maps.push_back(x.payload.map(P.morphism_from_coords({x.source->identity(j), K.compose(f, h)})));
    return out_of_copower(b, src, copower_unit(b, hs.size()), tgt, maps);
  });
}

/// U_J ∘ X → X, given U_J ∘ X.
template <InstanceCategory B>
std::optional<DiagramMap<B>> left_unit_map(const KanEngine<B>& eng, const Distributor<B>& x, const Composite<B>& ux) {
  const auto& b = eng.base();
  const auto& J = *x.source;
  const auto& I = *ux.coend.shape.indexing;
  const auto& P = *x.payload.shape;
  return eng.lan_transpose(ux.coend.lan, x.payload, [&](std::size_t i) {
    auto c = I.object_coords(i);  // (j, f: k0 → k1, l)
    auto j = c[0], f = c[1], l = c[2];
    auto k0 = J.source(f), k1 = J.target(f);
    auto src = x.payload.at(P.object_from_coords({k0, l}));
    auto tgt = x.payload.at(P.object_from_coords({j, l}));
    auto hs = hom_list(J, k1, j);
    std::vector<typename B::Morphism> maps;
    for (auto h : hs) maps.push_back(x.payload.map(P.morphism_from_coords({J.compose(h, f), x.target->identity(l)})));
    return out_of_copower_left(b, src, copower_unit(b, hs.size()), tgt, maps);
  });
}

/// Both unit laws with constructed comparisons; returns a witness or "".
template <InstanceCategory B>
std::string unit_law_failure(const KanEngine<B>& eng, const Distributor<B>& x) {
  const auto& b = eng.base();
  auto xu = compose_dist(eng, x, unit_distributor(b, x.target));
  auto r = right_unit_map(eng, x, xu);
  if (!r || !validate(b, *r).empty()) return "X o U -> X could not be constructed";
  if (auto o = first_non_iso(b, *r); o != npos) return "X o U -> X not invertible at " + x.payload.shape->object_id(o);
  auto ux = compose_dist(eng, unit_distributor(b, x.source), x);
  auto l = left_unit_map(eng, x, ux);
  if (!l || !validate(b, *l).empty()) return "U o X -> X could not be constructed";
  if (auto o = first_non_iso(b, *l); o != npos) return "U o X -> X not invertible at " + x.payload.shape->object_id(o);
  return {};
}

// ---------------------------------------------------------------------------
// Tensor and trace

/// (X1 ⊗ X2)((j1, j2), (k1, k2)) = X1(j1, k1) ⊗ X2(j2, k2).
template <InstanceCategory B>
Distributor<B> tensor_dist(const B& b, const Distributor<B>& x1, const Distributor<B>& x2) {
  auto jj = pair_shape(x1.source, x2.source), kk = pair_shape(x1.target, x2.target);
  auto shape = dist_shape(jj, kk);
  auto ext = external_tensor(b, x1.payload, x2.payload);
  auto pj = projection(shape, 0), pk = projection(shape, 1);
  auto kkop = shape->factors()[1];
  auto F = pairing(ext.shape, shape,
                   {pairing(x1.payload.shape, shape, {compose(projection(jj, 0), pj), compose(projection(kkop, 0), pk)}),
                    pairing(x2.payload.shape, shape, {compose(projection(jj, 1), pj), compose(projection(kkop, 1), pk)})});
  return {jj, kk, restrict(F, ext)};
}

template <InstanceCategory B>
struct TraceData {
  CoendData<B> coend;
  typename B::Object value;
};

/// tr(X) = ∫^J X(j, j).
template <InstanceCategory B>
TraceData<B> trace(const KanEngine<B>& eng, const Distributor<B>& x) {
  if (!same_category(x.source, x.target)) throw CategoryError("trace of a distributor that is not an endo-distributor");
  auto e = terminal_category();
  auto s = coend_shape(e, x.source, e);
  auto F = pairing(x.payload.shape, s.full, {projection(s.full, 2), projection(s.full, 1)});
  auto c = coend(eng, s, restrict(F, x.payload));
  auto v = c.value().at(0);
  return {std::move(c), std::move(v)};
}

template <InstanceCategory B>
struct TraceComparison {
  std::optional<DiagramMap<B>> first, second, map;
  bool passed = false;
  std::string witness;
};

namespace detail {
template <InstanceCategory B>
typename B::Morphism trace_unit(const TraceData<B>& t, std::size_t f) {
  return t.coend.lan.unit->at(t.coend.shape.indexing->object_from_coords({0, f, 0}));
}

template <InstanceCategory B>
void finish_comparison(const B& b, TraceComparison<B>& r, const std::string& what) {
  if (!r.first || !r.second) {
    r.witness = what + ": comparison could not be constructed";
    return;
  }
  auto inv = inverse(b, *r.first);
  if (!inv) {
    r.witness = what + ": first comparison not invertible";
    return;
  }
  if (first_non_iso(b, *r.second) != npos) {
    r.witness = what + ": second comparison not invertible";
    return;
  }
  r.map = compose(b, *r.second, *inv);
  r.passed = true;
}
}  // namespace detail

/// tr(X ∘ Y) ≅ tr(Y ∘ X), both compared with ∫^{(j,k)} X(j,k) ⊗ Y(k,j).
template <InstanceCategory B>
TraceComparison<B> trace_cyclicity(const KanEngine<B>& eng, const Distributor<B>& x, const Distributor<B>& y) {
  const auto& b = eng.base();
  TraceComparison<B> res;
  const auto& J = *x.source;
  const auto& K = *x.target;
  auto xy = compose_dist(eng, x, y), yx = compose_dist(eng, y, x);
  auto txy = trace(eng, xy.value), tyx = trace(eng, yx.value);
  if (!xy.coend.lan.unit || !yx.coend.lan.unit || !txy.coend.lan.unit || !tyx.coend.lan.unit) {
    res.witness = "cyclicity: coend units unavailable";
    return res;
  }
  // W((j1,k1)^op, (j0,k0)) = X(j0, k1) ⊗ Y(k0, j1)
  auto jk = pair_shape(x.source, x.target);
  auto e = terminal_category();
  auto s = coend_shape(e, jk, e);
  const auto& full = *s.full;
  const auto& PX = *x.payload.shape;
  const auto& PY = *y.payload.shape;
  Diagram<B> w{s.full, {}, {}};
  for (std::size_t o = 0; o < full.num_objects(); ++o) {
    auto c = full.object_coords(o);
    auto a = jk->object_coords(c[1]), d = jk->object_coords(c[2]);
    w.objects.push_back(b.tensor(x.payload.at(PX.object_from_coords({d[0], a[1]})),
                                 y.payload.at(PY.object_from_coords({d[1], a[0]}))));
  }
  for (std::size_t m = 0; m < full.num_morphisms(); ++m) {
    auto c = full.morphism_coords(m);
    auto a = jk->morphism_coords(c[1]), d = jk->morphism_coords(c[2]);
    w.morphisms.push_back(b.tensor(x.payload.map(PX.morphism_from_coords({d[0], a[1]})),
                                   y.payload.map(PY.morphism_from_coords({d[1], a[0]}))));
  }
  auto dd = coend(eng, s, w);
  const auto& I = *s.indexing;
  auto unit = [](const CoendData<B>& c, std::size_t a, std::size_t f, std::size_t d) {
    return c.lan.unit->at(c.shape.indexing->object_from_coords({a, f, d}));
  };
  res.first = eng.lan_transpose(dd.lan, txy.coend.value(), [&](std::size_t i) {
    auto fg = jk->morphism_coords(I.object_coords(i)[1]);
    auto f = fg[0], g = fg[1];
    return b.compose(detail::trace_unit(txy, f), unit(xy.coend, J.source(f), g, J.target(f)));
  });
  res.second = eng.lan_transpose(dd.lan, tyx.coend.value(), [&](std::size_t i) {
    auto fg = jk->morphism_coords(I.object_coords(i)[1]);
    auto f = fg[0], g = fg[1];
    auto xo = x.payload.at(PX.object_from_coords({J.source(f), K.target(g)}));
    auto yo = y.payload.at(PY.object_from_coords({K.source(g), J.target(f)}));
    return b.compose(detail::trace_unit(tyx, g),
                     b.compose(unit(yx.coend, K.source(g), f, K.target(g)), b.symmetry(xo, yo)));
  });
  detail::finish_comparison(b, res, "cyclicity");
  return res;
}

/// tr(Z1 ⊗ Z2) → tr(Z1) ⊗ tr(Z2), and its invertibility.
template <InstanceCategory B>
TraceComparison<B> trace_monoidality(const KanEngine<B>& eng, const Distributor<B>& z1, const Distributor<B>& z2) {
  const auto& b = eng.base();
  TraceComparison<B> res;
  auto t1 = trace(eng, z1), t2 = trace(eng, z2);
  auto t12 = trace(eng, tensor_dist(b, z1, z2));
  if (!t1.coend.lan.unit || !t2.coend.lan.unit) {
    res.witness = "monoidality: coend units unavailable";
    return res;
  }
  const auto& jl = t12.coend.shape.jl;
  auto v = b.tensor(t1.value, t2.value);
  Diagram<B> target{jl, {v}, {b.identity(v)}};
  const auto& I = *t12.coend.shape.indexing;
  const auto& JJ = *t12.coend.shape.k;
  res.second = eng.lan_transpose(t12.coend.lan, target, [&](std::size_t i) {
    auto fs = JJ.morphism_coords(I.object_coords(i)[1]);
    return b.tensor(detail::trace_unit(t1, fs[0]), detail::trace_unit(t2, fs[1]));
  });
  res.first = identity_map(b, t12.coend.value());
  detail::finish_comparison(b, res, "monoidality");
  return res;
}

// ---------------------------------------------------------------------------
// Weighted (co)limits

template <InstanceCategory B>
struct WeightedColimit {
  Composite<B> composite;
  typename B::Object value;
};

/// colim^W X = ∫^k W(k) ⊗ X(k) for W over K^op and X over K.
template <InstanceCategory B>
WeightedColimit<B> weighted_colimit(const KanEngine<B>& eng, const Diagram<B>& w, const Diagram<B>& x) {
  auto K = x.shape, e = terminal_category();
  detail::require_same_shape(w.shape, opposite(K));
  auto wd = dist_shape(e, K), xd = dist_shape(K, e);
  Distributor<B> W{e, K, restrict(projection(wd, 1), w)};
  Distributor<B> X{K, e, restrict(projection(xd, 0), x)};
  auto c = compose_dist(eng, W, X);
  auto v = c.value.payload.at(0);
  return {std::move(c), std::move(v)};
}

/// lim^W X = ∫_k [W(k), X(k)] for W and X over K.
template <InstanceCategory B>
Division<B> weighted_limit_data(const KanEngine<B>& eng, const Diagram<B>& w, const Diagram<B>& x) {
  detail::require_same_shape(w.shape, x.shape);
  return division(eng, w, restrict(projection(pair_shape(x.shape, terminal_category()), 0), x));
}

template <InstanceCategory B>
typename B::Object weighted_limit(const KanEngine<B>& eng, const Diagram<B>& w, const Diagram<B>& x) {
  return weighted_limit_data(eng, w, x).value.at(0);
}

/// The diagram constant at the monoidal unit.
template <InstanceCategory B>
Diagram<B> unit_weight(const B& b, const CatPtr& shape) {
  return constant_diagram(b, shape, b.unit());
}

/// hom(−, k) over K^op (contravariant) or hom(k, −) over K, as copowers of S.
template <InstanceCategory B>
Diagram<B> representable_weight(const B& b, const CatPtr& k, std::size_t obj, bool contravariant) {
  auto u = unit_distributor(b, k);
  auto kop = opposite(k);
  if (contravariant)
    return restrict(pairing(u.payload.shape, kop, {constant_functor(kop, k, obj), identity_functor(kop)}), u.payload);
  return restrict(pairing(u.payload.shape, k, {identity_functor(k), constant_functor(k, kop, obj)}), u.payload);
}

/// ∫^k S ⊗ X(k) → colim X, transposed from the colimit legs.
template <InstanceCategory B>
std::optional<typename B::Morphism> unit_weighted_colimit_comparison(const KanEngine<B>& eng, const Diagram<B>& x) {
  const auto& b = eng.base();
  auto wc = weighted_colimit(eng, unit_weight(b, opposite(x.shape)), x);
  auto colim = b.colimit(*x.shape, x.objects, x.morphisms);
  const auto& s = wc.composite.coend.shape;
  Diagram<B> target{s.jl, {colim.apex}, {b.identity(colim.apex)}};
  auto m = eng.lan_transpose(wc.composite.coend.lan, target, [&](std::size_t i) {
    auto f = s.indexing->object_coords(i)[1];
    auto k0 = x.shape->source(f);
    return b.compose(colim.legs[k0], b.left_unitor(x.at(k0)));
  });
  if (!m) return std::nullopt;
  return m->at(0);
}

/// lim X → ∫_k [S, X(k)], transposed from the limit legs.
template <InstanceCategory B>
std::optional<typename B::Morphism> unit_weighted_limit_comparison(const KanEngine<B>& eng, const Diagram<B>& x) {
  const auto& b = eng.base();
  auto d = weighted_limit_data(eng, unit_weight(b, x.shape), x);
  auto lim = b.limit(*x.shape, x.objects, x.morphisms);
  const auto& s = d.end.shape;
  Diagram<B> source{s.jl, {lim.apex}, {b.identity(lim.apex)}};
  auto m = eng.ran_transpose(d.end.ran, source, [&](std::size_t i) {
    auto f = s.indexing->object_coords(i)[1];
    auto k1 = x.shape->target(f);
    return b.curry(b.unit(), lim.apex, b.compose(lim.legs[k1], b.left_unitor(lim.apex)));
  });
  if (!m) return std::nullopt;
  return m->at(0);
}

/// colim^{hom(−,k)} X → X(k).
template <InstanceCategory B>
std::optional<typename B::Morphism> coyoneda_comparison(const KanEngine<B>& eng, const Diagram<B>& x, std::size_t k) {
  const auto& b = eng.base();
  const auto& K = *x.shape;
  auto wc = weighted_colimit(eng, representable_weight(b, x.shape, k, true), x);
  const auto& s = wc.composite.coend.shape;
  Diagram<B> target{s.jl, {x.at(k)}, {b.identity(x.at(k))}};
  auto m = eng.lan_transpose(wc.composite.coend.lan, target, [&](std::size_t i) {
    auto f = s.indexing->object_coords(i)[1];
    auto k0 = K.source(f), k1 = K.target(f);
    auto hs = hom_list(K, k1, k);
    std::vector<typename B::Morphism> maps;
    for (auto h : hs) maps.push_back(x.map(K.compose(h, f)));
    return out_of_copower_left(b, x.at(k0), copower_unit(b, hs.size()), x.at(k), maps);
  });
  if (!m) return std::nullopt;
  return m->at(0);
}

/// X(k) → lim^{hom(k,−)} X.
template <InstanceCategory B>
std::optional<typename B::Morphism> yoneda_comparison(const KanEngine<B>& eng, const Diagram<B>& x, std::size_t k) {
  const auto& b = eng.base();
  const auto& K = *x.shape;
  auto w = representable_weight(b, x.shape, k, false);
  auto d = weighted_limit_data(eng, w, x);
  const auto& s = d.end.shape;
  Diagram<B> source{s.jl, {x.at(k)}, {b.identity(x.at(k))}};
  auto m = eng.ran_transpose(d.end.ran, source, [&](std::size_t i) {
    auto f = s.indexing->object_coords(i)[1];  // f: a → c
    auto a = K.source(f), c = K.target(f);
    auto hs = hom_list(K, k, a);
    std::vector<typename B::Morphism> maps;
    for (auto h : hs) maps.push_back(x.map(K.compose(f, h)));
    return b.curry(w.at(a), x.at(k), out_of_copower_left(b, x.at(k), copower_unit(b, hs.size()), x.at(c), maps));
  });
  if (!m) return std::nullopt;
  return m->at(0);
}

/// hom(colim^W X, Z) ≅ nat(X, [W(−), Z]) elementwise; returns a witness or "".
template <InstanceCategory B>
std::string weighted_adjunction_failure(const KanEngine<B>& eng, const Diagram<B>& w, const Diagram<B>& x,
                                        const typename B::Object& z, std::size_t limit = 4096) {
  const auto& b = eng.base();
  const auto& K = *x.shape;
  auto wc = weighted_colimit(eng, w, x);
  const auto& s = wc.composite.coend.shape;
  if (!wc.composite.coend.lan.unit) return "coend unit unavailable";
  Diagram<B> hz{x.shape, {}, {}};
  for (std::size_t k = 0; k < K.num_objects(); ++k) hz.objects.push_back(b.internal_hom(w.at(k), z));
  for (std::size_t m = 0; m < K.num_morphisms(); ++m) hz.morphisms.push_back(internal_hom_map(b, w.map(m), b.identity(z)));
  auto unit_at = [&](std::size_t f) { return wc.composite.coend.lan.unit->at(s.indexing->object_from_coords({0, f, 0})); };
  auto forward = [&](const typename B::Morphism& phi) {
    DiagramMap<B> psi{x, hz, {}};
    for (std::size_t k = 0; k < K.num_objects(); ++k)
      psi.components.push_back(b.curry(w.at(k), x.at(k), b.compose(phi, unit_at(K.identity(k)))));
    return psi;
  };
  Diagram<B> zt{s.jl, {z}, {b.identity(z)}};
  auto backward = [&](const DiagramMap<B>& psi) -> std::optional<typename B::Morphism> {
    auto m = eng.lan_transpose(wc.composite.coend.lan, zt, [&](std::size_t i) {
      auto f = s.indexing->object_coords(i)[1];
      auto k1 = K.target(f);
      return b.compose(b.evaluation(w.at(k1), z), b.tensor(b.identity(w.at(k1)), b.compose(psi.at(k1), x.map(f))));
    });
    if (!m) return std::nullopt;
    return m->at(0);
  };
  if (b.hom_size(wc.value, z) > limit) return "hom-set too large";
  auto lhs = b.hom(wc.value, z);
  auto rhs = enumerate_maps(b, x, hz, limit + 1);
  if (lhs.size() != rhs.size())
    return "hom(colim^W X, Z) has " + std::to_string(lhs.size()) + " elements, nat(X, [W, Z]) has " +
           std::to_string(rhs.size());
  for (const auto& phi : lhs) {
    auto psi = forward(phi);
    if (!validate(b, psi).empty()) return "forward image is not natural";
    auto back = backward(psi);
    if (!back || !(*back == phi)) return "backward(forward(phi)) != phi";
  }
  for (const auto& psi : rhs) {
    auto phi = backward(psi);
    if (!phi || !equal_maps(forward(*phi), psi)) return "forward(backward(psi)) != psi";
  }
  return {};
}

// ---------------------------------------------------------------------------
// Reports

struct DistOptions {
  std::uint64_t seed = 0;
  std::size_t associator_samples = 50;
  std::size_t trace_samples = 50;
  std::size_t unit_samples = 30;
  std::size_t weighted_samples = 30;
  std::size_t representable_samples = 20;
  std::size_t max_objects = 3;
  bool hom_hom = true;
  // which sides the weighted report covers
  bool colimits = true, limits = true;
  RandomOptions random{};
};

inline std::vector<CatPtr> shapes_up_to(const std::vector<CatPtr>& shapes, std::size_t n) {
  std::vector<CatPtr> out;
  for (const auto& s : shapes)
    if (s->num_objects() <= n) out.push_back(s);
  return out;
}

template <InstanceCategory B>
Report dist_report(const KanEngine<B>& eng, const std::vector<CatPtr>& shapes, const DistOptions& opt = {}) {
  const auto& b = eng.base();
  Report rep;
  rep.command = "dist";
  rep.seed = opt.seed;
  rep.parameters.emplace_back("base", b.name());
  auto sh = shapes_up_to(shapes, opt.max_objects);
  if (sh.empty()) throw CategoryError("no shapes with at most " + std::to_string(opt.max_objects) + " objects");
  std::mt19937_64 rng(opt.seed);
  auto pick = [&] { return sh[rng() % sh.size()]; };
  auto names = [](std::initializer_list<CatPtr> cs) {
    std::string s;
    for (const auto& c : cs) s += (s.empty() ? "" : ",") + c->name();
    return s;
  };

  auto assoc = make_check("associator (X o Y) o Z -> X o (Y o Z) invertible",
                          "both bracketings compared with the triple coend");
  for (std::size_t i = 0; i < opt.associator_samples; ++i) {
    auto J = pick(), K = pick(), L = pick(), M = pick();
    auto x = random_distributor(b, J, K, rng, opt.random), y = random_distributor(b, K, L, rng, opt.random);
    auto z = random_distributor(b, L, M, rng, opt.random);
    if (!x || !y || !z) continue;
    auto r = associator(eng, *x, *y, *z);
    assoc.expect_with(r.passed, [&] { return r.witness + " over " + names({J, K, L, M}); });
  }

  auto cyc = make_check("trace cyclicity tr(X o Y) = tr(Y o X)", "both compared with the coend over J x K");
  for (std::size_t i = 0; i < opt.trace_samples; ++i) {
    auto J = pick(), K = pick();
    auto x = random_distributor(b, J, K, rng, opt.random), y = random_distributor(b, K, J, rng, opt.random);
    if (!x || !y) continue;
    auto r = trace_cyclicity(eng, *x, *y);
    cyc.expect_with(r.passed, [&] { return r.witness + " over " + names({J, K}); });
  }

  auto mon = make_check("trace monoidality tr(Z1 (x) Z2) = tr(Z1) (x) tr(Z2)");
  for (std::size_t i = 0; i < opt.trace_samples; ++i) {
    auto J = pick(), K = pick();
    auto z1 = random_distributor(b, J, J, rng, opt.random), z2 = random_distributor(b, K, K, rng, opt.random);
    if (!z1 || !z2) continue;
    auto r = trace_monoidality(eng, *z1, *z2);
    mon.expect_with(r.passed, [&] { return r.witness + " over " + names({J, K}); });
  }

  auto units = make_check("unit laws X o U = X = U o X (engine convention)",
                          "U_K(j, k) = S . hom(k, j); comparisons built from the copower legs");
  for (std::size_t i = 0; i < opt.unit_samples; ++i) {
    auto J = pick(), K = pick();
    auto x = random_distributor(b, J, K, rng, opt.random);
    if (!x) continue;
    auto w = unit_law_failure(eng, *x);
    units.expect_with(w.empty(), [&] { return w + " over " + names({J, K}); });
  }

  auto hh = make_check("hom o hom = hom over [1]");
  if (opt.hom_hom) {
    auto u = unit_distributor(b, poset_chain(1));
    auto uu = compose_dist(eng, u, u);
    auto m = right_unit_map(eng, u, uu);
    hh.expect(m && validate(b, *m).empty() && first_non_iso(b, *m) == npos, "hom o hom -> hom not invertible");
  }
  if (opt.associator_samples) rep.checks.push_back(std::move(assoc));
  if (opt.trace_samples) {
    rep.checks.push_back(std::move(cyc));
    rep.checks.push_back(std::move(mon));
  }
  if (opt.unit_samples) rep.checks.push_back(std::move(units));
  if (opt.hom_hom) rep.checks.push_back(std::move(hh));
  rep.notes.push_back("unit distributors are an engine convention; only component-level laws are checked, "
                      "not full bicategorical coherence");
  return rep;
}

template <InstanceCategory B>
Report weighted_report(const KanEngine<B>& eng, const std::vector<CatPtr>& shapes, const DistOptions& opt = {}) {
  const auto& b = eng.base();
  Report rep;
  rep.command = "weighted";
  rep.seed = opt.seed;
  rep.parameters.emplace_back("base", b.name());
  auto sh = shapes_up_to(shapes, opt.max_objects);
  if (sh.empty()) throw CategoryError("no shapes with at most " + std::to_string(opt.max_objects) + " objects");
  std::mt19937_64 rng(opt.seed);
  auto pick = [&] { return sh[rng() % sh.size()]; };
  auto iso = [&](const std::optional<typename B::Morphism>& m) { return m && b.inverse(*m).has_value(); };

  auto term = make_check("unit weight gives ordinary colimits and limits",
                         "canonical maps int^k S (x) X(k) -> colim X and lim X -> int_k [S, X(k)] invertible");
  for (std::size_t i = 0; i < opt.weighted_samples; ++i) {
    auto K = pick();
    auto x = random_diagram(b, K, rng, opt.random);
    if (!x) continue;
    term.expect_with((!opt.colimits || iso(unit_weighted_colimit_comparison(eng, *x))) &&
                         (!opt.limits || iso(unit_weighted_limit_comparison(eng, *x))),
                     [&] { return "X=" + describe(b, *x); });
  }
  auto rep_w = make_check("representable weight gives evaluation",
                          "colim^{hom(-,k)} X -> X(k) and X(k) -> lim^{hom(k,-)} X invertible");
  for (std::size_t i = 0; i < opt.representable_samples; ++i) {
    auto K = pick();
    auto x = random_diagram(b, K, rng, opt.random);
    if (!x) continue;
    auto k = rng() % K->num_objects();
    rep_w.expect_with((!opt.colimits || iso(coyoneda_comparison(eng, *x, k))) &&
                          (!opt.limits || iso(yoneda_comparison(eng, *x, k))),
                      [&] { return "k=" + K->object_id(k) + ", X=" + describe(b, *x); });
  }
  auto adj = make_check("hom(colim^W X, Z) = nat(X, [W, Z])", "elementwise round trips");
  RandomOptions tiny = opt.random;
  tiny.max_size = std::min<std::size_t>(tiny.max_size, 2);
  for (std::size_t i = 0; opt.colimits && i < opt.representable_samples; ++i) {
    auto K = pick();
    auto w = random_diagram(b, opposite(K), rng, tiny), x = random_diagram(b, K, rng, tiny);
    auto zs = b.sample_objects(2);
    if (!w || !x || zs.empty()) continue;
    auto z = zs[rng() % zs.size()];
    auto f = weighted_adjunction_failure(eng, *w, *x, z);
    adj.expect_with(f.empty(), [&] { return f + "; W=" + describe(b, *w) + ", X=" + describe(b, *x); });
  }
  rep.checks.push_back(std::move(term));
  rep.checks.push_back(std::move(rep_w));
  if (opt.colimits) rep.checks.push_back(std::move(adj));
  if (!opt.colimits) rep.notes.push_back("limit side only");
  if (!opt.limits) rep.notes.push_back("colimit side only");
  return rep;
}

}  // namespace dlab

