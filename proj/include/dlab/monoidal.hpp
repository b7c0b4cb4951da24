#pragma once

// Monoidal structure on represented derivators: the external tensor as a
// bimorphism, its internalization along diagonals, division (Hom_l) as an end,
// and the adjunction of two variables.

#include <functional>
#include <random>
#include <string>

#include "dlab/coend.hpp"
#include "dlab/report.hpp"

namespace dlab {

/// (X over J1, Y over J2) ↦ diagram over J1 × J2. Structure maps of the
/// bimorphisms built here are identities, so only the functor parts are stored.
template <InstanceCategory B>
struct Bimorphism {
  std::string name;
  std::function<Diagram<B>(const Diagram<B>&, const Diagram<B>&)> apply;
  std::function<DiagramMap<B>(const DiagramMap<B>&, const DiagramMap<B>&)> apply_map;
};

/// (X, Y over J) ↦ diagram over J.
template <InstanceCategory B>
struct ProductMorphism {
  std::string name;
  std::function<Diagram<B>(const Diagram<B>&, const Diagram<B>&)> apply;
  std::function<DiagramMap<B>(const DiagramMap<B>&, const DiagramMap<B>&)> apply_map;
};

inline CatPtr pair_shape(const CatPtr& a, const CatPtr& b) { return product(std::vector<CatPtr>{a, b}); }

/// (X ⊠ Y)(j1, j2) = X(j1) ⊗ Y(j2).
template <InstanceCategory B>
Diagram<B> external_tensor(const B& b, const Diagram<B>& x, const Diagram<B>& y) {
  auto P = pair_shape(x.shape, y.shape);
  Diagram<B> d{P, {}, {}};
  for (std::size_t o = 0; o < P->num_objects(); ++o) {
    auto c = P->object_coords(o);
    d.objects.push_back(b.tensor(x.at(c[0]), y.at(c[1])));
  }
  for (std::size_t m = 0; m < P->num_morphisms(); ++m) {
    auto c = P->morphism_coords(m);
    d.morphisms.push_back(b.tensor(x.map(c[0]), y.map(c[1])));
  }
  return d;
}

template <InstanceCategory B>
DiagramMap<B> external_tensor(const B& b, const DiagramMap<B>& f, const DiagramMap<B>& g) {
  DiagramMap<B> r{external_tensor(b, f.source, g.source), external_tensor(b, f.target, g.target), {}};
  const auto& P = *r.source.shape;
  for (std::size_t o = 0; o < P.num_objects(); ++o) {
    auto c = P.object_coords(o);
    r.components.push_back(b.tensor(f.at(c[0]), g.at(c[1])));
  }
  return r;
}

template <InstanceCategory B>
Bimorphism<B> represented_tensor(const B& b) {
  return {"external tensor", [b](const Diagram<B>& x, const Diagram<B>& y) { return external_tensor(b, x, y); },
          [b](const DiagramMap<B>& f, const DiagramMap<B>& g) { return external_tensor(b, f, g); }};
}

namespace detail {
inline void require_same_shape(const CatPtr& a, const CatPtr& b) {
  if (!same_category(a, b)) throw CategoryError("shape mismatch: '" + a->name() + "' vs '" + b->name() + "'");
}
}  // namespace detail

/// Pointwise tensor (X ⊗ Y)(j) = X(j) ⊗ Y(j).
template <InstanceCategory B>
ProductMorphism<B> pointwise_tensor(const B& b) {
  ProductMorphism<B> f{"pointwise tensor", {}, {}};
  f.apply = [b](const Diagram<B>& x, const Diagram<B>& y) {
    detail::require_same_shape(x.shape, y.shape);
    Diagram<B> d{x.shape, {}, {}};
    for (std::size_t o = 0; o < x.objects.size(); ++o) d.objects.push_back(b.tensor(x.at(o), y.at(o)));
    for (std::size_t m = 0; m < x.morphisms.size(); ++m) d.morphisms.push_back(b.tensor(x.map(m), y.map(m)));
    return d;
  };
  f.apply_map = [b, ap = f.apply](const DiagramMap<B>& g, const DiagramMap<B>& h) {
    DiagramMap<B> r{ap(g.source, h.source), ap(g.target, h.target), {}};
    for (std::size_t o = 0; o < g.components.size(); ++o) r.components.push_back(b.tensor(g.at(o), h.at(o)));
    return r;
  };
  return f;
}

/// Pointwise binary coproduct X(j) ⊔ Y(j), with the colimit chosen by the base.
template <InstanceCategory B>
ProductMorphism<B> pointwise_coproduct(const B& b) {
  auto d2 = discrete(2);
  auto sum = [b, d2](const typename B::Object& p, const typename B::Object& q) {
    return b.colimit(*d2, {p, q}, {b.identity(p), b.identity(q)});
  };
  auto sum_map = [b, sum](const typename B::Morphism& f, const typename B::Morphism& g) {
    auto s = sum(b.source(f), b.source(g));
    auto t = sum(b.target(f), b.target(g));
    return *b.factor_cocone(s, t.apex, {b.compose(t.legs[0], f), b.compose(t.legs[1], g)});
  };
  ProductMorphism<B> f{"pointwise coproduct", {}, {}};
  f.apply = [sum, sum_map](const Diagram<B>& x, const Diagram<B>& y) {
    detail::require_same_shape(x.shape, y.shape);
    Diagram<B> d{x.shape, {}, {}};
    for (std::size_t o = 0; o < x.objects.size(); ++o) d.objects.push_back(sum(x.at(o), y.at(o)).apex);
    for (std::size_t m = 0; m < x.morphisms.size(); ++m) d.morphisms.push_back(sum_map(x.map(m), y.map(m)));
    return d;
  };
  f.apply_map = [sum_map, ap = f.apply](const DiagramMap<B>& g, const DiagramMap<B>& h) {
    DiagramMap<B> r{ap(g.source, h.source), ap(g.target, h.target), {}};
    for (std::size_t o = 0; o < g.components.size(); ++o) r.components.push_back(sum_map(g.at(o), h.at(o)));
    return r;
  };
  return f;
}

/// l(B)_J = Δ_J* ∘ B_{J,J}.
template <InstanceCategory B>
ProductMorphism<B> internalize(const Bimorphism<B>& bm) {
  return {"l(" + bm.name + ")",
          [bm](const Diagram<B>& x, const Diagram<B>& y) {
            detail::require_same_shape(x.shape, y.shape);
            return restrict(diagonal(x.shape), bm.apply(x, y));
          },
          [bm](const DiagramMap<B>& f, const DiagramMap<B>& g) {
            return restrict(diagonal(f.source.shape), bm.apply_map(f, g));
          }};
}

/// r(F)_{J1,J2} = F_{J1×J2} ∘ (pr1* × pr2*).
template <InstanceCategory B>
Bimorphism<B> externalize(const ProductMorphism<B>& pm) {
  return {"r(" + pm.name + ")",
          [pm](const Diagram<B>& x, const Diagram<B>& y) {
            auto P = pair_shape(x.shape, y.shape);
            return pm.apply(restrict(projection(P, 0), x), restrict(projection(P, 1), y));
          },
          [pm](const DiagramMap<B>& f, const DiagramMap<B>& g) {
            auto P = pair_shape(f.source.shape, g.source.shape);
            return pm.apply_map(restrict(projection(P, 0), f), restrict(projection(P, 1), g));
          }};
}

/// l(r(F)) agrees with F exactly on (X, Y) and on (f, g).
template <InstanceCategory B>
bool lr_identity(const ProductMorphism<B>& pm, const DiagramMap<B>& f, const DiagramMap<B>& g) {
  auto lr = internalize(externalize(pm));
  if (!(lr.apply(f.source, g.source) == pm.apply(f.source, g.source))) return false;
  if (!(lr.apply(f.target, g.target) == pm.apply(f.target, g.target))) return false;
  auto a = lr.apply_map(f, g), b = pm.apply_map(f, g);
  return a.source == b.source && a.target == b.target && a.components == b.components;
}

/// Strictness of a bimorphism along (u1, u2): B(u1*X, u2*Y) = (u1 × u2)* B(X, Y).
template <InstanceCategory B>
bool bimorphism_strict(const Bimorphism<B>& bm, const Functor& u1, const Functor& u2, const Diagram<B>& x,
                       const Diagram<B>& y) {
  auto uu = product_functor(pair_shape(u1.source, u2.source), pair_shape(u1.target, u2.target), {u1, u2});
  return bm.apply(restrict(u1, x), restrict(u2, y)) == restrict(uu, bm.apply(x, y));
}

// ---------------------------------------------------------------------------
// Internal homs and division

/// [f, g]: [x, z] → [x', z'] for f: x' → x, g: z → z'.
template <InstanceCategory B>
typename B::Morphism internal_hom_map(const B& b, const typename B::Morphism& f, const typename B::Morphism& g) {
  auto x = b.target(f), xp = b.source(f), z = b.source(g);
  auto h = b.internal_hom(x, z);
  auto body = b.compose(g, b.compose(b.evaluation(x, z), b.tensor(f, b.identity(h))));
  return b.curry(xp, h, body);
}

/// The two-sided diagram (a, b, j2) ↦ [X(a), Z(b, j2)] over e × J1^op × J1 × J2.
template <InstanceCategory B>
Diagram<B> division_integrand(const B& b, const Diagram<B>& x, const Diagram<B>& z) {
  const auto& zf = z.shape->factors();
  if (zf.size() != 2 || !same_category(zf[0], x.shape))
    throw CategoryError("division: Z must live on " + x.shape->name() + " x J2, got " + z.shape->name());
  auto J1 = x.shape, J2 = zf[1];
  auto W = two_sided_shape(terminal_category(), J1, J2);
  const auto& P = *z.shape;
  Diagram<B> d{W, {}, {}};
  for (std::size_t o = 0; o < W->num_objects(); ++o) {
    auto c = W->object_coords(o);
    d.objects.push_back(b.internal_hom(x.at(c[1]), z.at(P.object_from_coords({c[2], c[3]}))));
  }
  for (std::size_t m = 0; m < W->num_morphisms(); ++m) {
    auto c = W->morphism_coords(m);  // c[1] is a J1-morphism a' → a, read in J1^op as a → a'
    d.morphisms.push_back(internal_hom_map(b, x.map(c[1]), z.map(P.morphism_from_coords({c[2], c[3]}))));
  }
  return d;
}

/// J2 ≅ e × J2.
inline Functor into_e_times(const CatPtr& jl) {
  auto J2 = jl->factors().at(1);
  return pairing(jl, J2, {collapse(J2), identity_functor(J2)});
}

template <InstanceCategory B>
struct Division {
  Diagram<B> integrand;
  EndData<B> end;
  Diagram<B> value;  // over J2
};

/// Hom_l(X, Z)(j2) = ∫_{j1} [X(j1), Z(j1, j2)].
template <InstanceCategory B>
Division<B> division(const KanEngine<B>& eng, const Diagram<B>& x, const Diagram<B>& z) {
  auto w = division_integrand(eng.base(), x, z);
  auto e = end(eng, terminal_category(), x.shape, z.shape->factors()[1], w);
  auto v = restrict(into_e_times(e.shape.jl), e.value());
  return {std::move(w), std::move(e), std::move(v)};
}

/// Hom_r(Y, Z)(j1) = ∫_{j2} [Y(j2), Z(j1, j2)], through the symmetry of the base.
template <InstanceCategory B>
Division<B> division_right(const KanEngine<B>& eng, const Diagram<B>& y, const Diagram<B>& z) {
  const auto& zf = z.shape->factors();
  if (zf.size() != 2) throw CategoryError("division: Z must live on a binary product");
  auto swapped = permute_leaves(pair_shape(zf[1], zf[0]), z.shape, {1, 0});
  return division(eng, y, restrict(swapped, z));
}

// ---------------------------------------------------------------------------
// The adjunction hom(X ⊠ Y, Z) ≅ hom(Y, Hom_l(X, Z))

template <InstanceCategory B>
struct AdjunctionTransposer {
  const KanEngine<B>& eng;
  Diagram<B> x, y, z, xy;
  Division<B> hom;
  Diagram<B> y_jl;  // Y over e × J2
  Functor to_jl;

  AdjunctionTransposer(const KanEngine<B>& e, Diagram<B> x_, Diagram<B> y_, Diagram<B> z_)
      : eng(e), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)), xy(external_tensor(e.base(), x, y)),
        hom(division(e, x, z)), y_jl(restrict(projection(hom.end.shape.jl, 1), y)),
        to_jl(into_e_times(hom.end.shape.jl)) {
    detail::require_same_shape(xy.shape, z.shape);
  }

  /// φ: X ⊠ Y → Z  ↦  Y → Hom_l(X, Z), through the end wedge.
  std::optional<DiagramMap<B>> forward(const DiagramMap<B>& phi) const {
    const auto& b = eng.base();
    const auto& s = hom.end.shape;
    const auto& I = *s.indexing;
    const auto& K = *s.k;
    const auto& P = *z.shape;
    auto m = eng.ran_transpose(hom.end.ran, y_jl, [&](std::size_t i) {
      auto c = I.object_coords(i);  // (*, f: a → b, j2)
      auto f = c[1], j2 = c[2];
      auto a = K.source(f);
      auto yid = y.shape->identity(j2);
      auto body = b.compose(z.map(P.morphism_from_coords({f, yid})), phi.at(P.object_from_coords({a, j2})));
      return b.curry(x.at(a), y.at(j2), body);
    });
    if (!m) return std::nullopt;
    return restrict(to_jl, *m);
  }

  /// ψ: Y → Hom_l(X, Z)  ↦  X ⊠ Y → Z, evaluating the wedge at identities.
  std::optional<DiagramMap<B>> backward(const DiagramMap<B>& psi) const {
    const auto& b = eng.base();
    const auto& s = hom.end.shape;
    if (!hom.end.ran.counit) return std::nullopt;
    const auto& P = *z.shape;
    DiagramMap<B> out{xy, z, {}};
    for (std::size_t o = 0; o < P.num_objects(); ++o) {
      auto c = P.object_coords(o);
      auto a = c[0], j2 = c[1];
      auto i = s.indexing->object_from_coords({0, s.k->identity(a), j2});
      auto leg = b.compose(hom.end.ran.counit->at(i), psi.at(j2));
      auto za = z.at(o);
      out.components.push_back(b.compose(b.evaluation(x.at(a), za), b.tensor(b.identity(x.at(a)), leg)));
    }
    return out;
  }
};

struct AdjunctionResult {
  bool passed = false;
  std::size_t lhs = 0, rhs = 0;
  std::string witness;
};

/// Enumerates both hom-sets and checks that forward and backward are mutually
/// inverse bijections. Optionally also checks naturality along g: Y' → Y.
template <InstanceCategory B>
AdjunctionResult adjunction_check(const KanEngine<B>& eng, const Diagram<B>& x, const Diagram<B>& y,
                                  const Diagram<B>& z, std::size_t limit = 4096) {
  const auto& b = eng.base();
  AdjunctionResult res;
  AdjunctionTransposer<B> t(eng, x, y, z);
  auto lhs = enumerate_maps(b, t.xy, z, limit + 1);
  auto rhs = enumerate_maps(b, y, t.hom.value, limit + 1);
  res.lhs = lhs.size();
  res.rhs = rhs.size();
  if (lhs.size() > limit || rhs.size() > limit) {
    res.witness = "hom-sets too large to enumerate";
    return res;
  }
  if (lhs.size() != rhs.size()) {
    res.witness = "hom(X*Y, Z) has " + std::to_string(lhs.size()) + " elements, hom(Y, Hom_l(X, Z)) has " +
                  std::to_string(rhs.size());
    return res;
  }
  for (const auto& phi : lhs) {
    auto psi = t.forward(phi);
    if (!psi || !validate(b, *psi).empty()) {
      res.witness = "forward image of " + describe(b, phi) + " is not a natural transformation";
      return res;
    }
    auto back = t.backward(*psi);
    if (!back || !equal_maps(*back, phi)) {
      res.witness = "backward(forward(phi)) != phi for phi = " + describe(b, phi);
      return res;
    }
  }
  for (const auto& psi : rhs) {
    auto phi = t.backward(psi);
    if (!phi || !validate(b, *phi).empty()) {
      res.witness = "backward image of " + describe(b, psi) + " is not a natural transformation";
      return res;
    }
    auto fwd = t.forward(*phi);
    if (!fwd || !equal_maps(*fwd, psi)) {
      res.witness = "forward(backward(psi)) != psi for psi = " + describe(b, psi);
      return res;
    }
  }
  res.passed = true;
  return res;
}

/// Naturality in Y: forward(φ ∘ (X ⊠ g)) = forward(φ) ∘ g for g: Y' → Y.
template <InstanceCategory B>
bool adjunction_natural_in_y(const KanEngine<B>& eng, const Diagram<B>& x, const DiagramMap<B>& g,
                             const Diagram<B>& z, const DiagramMap<B>& phi) {
  const auto& b = eng.base();
  AdjunctionTransposer<B> t(eng, x, g.target, z), tp(eng, x, g.source, z);
  auto lhs = tp.forward(compose(b, phi, external_tensor(b, identity_map(b, x), g)));
  auto f = t.forward(phi);
  return lhs && f && equal_maps(*lhs, compose(b, *f, g));
}

// ---------------------------------------------------------------------------
// Structure maps of Hom_l

struct EvaluationGap {
  std::size_t nat = 0, hom = 0;
  bool injective = false, surjective = false;
  bool iso() const { return injective && surjective; }
  std::string describe() const;
};

/// nat(X, Z) → hom(X(k), Z(k)), τ ↦ τ_k, for finite-set diagrams over K.
EvaluationGap evaluation_gap_witness(const Diagram<FinSetBase>& x, const Diagram<FinSetBase>& z, std::size_t k);

/// The example with K = [1], X = (1 → 1), Z = ({0,1} → {0}), k = 1.
struct EvaluationGapPreset {
  Diagram<FinSetBase> x, z;
  std::size_t k;
};
EvaluationGapPreset evaluation_gap_preset();

/// For the preset: expects exactly 2 vs 1 and a non-injective evaluation.
/// Otherwise: checks that evaluation at k is a bijection.
Report eval_gap_report(const EvaluationGapPreset& in, bool preset);

/// γ: u2* Hom_l(X, Z) → Hom_l(X, (id × u2)* Z), induced on ends.
template <InstanceCategory B>
std::optional<DiagramMap<B>> hom_second_variable_map(const KanEngine<B>& eng, const Functor& u2, const Diagram<B>& x,
                                                     const Diagram<B>& z) {
  auto big = division(eng, x, z);
  auto idu = product_functor(pair_shape(x.shape, u2.source), z.shape, {identity_functor(x.shape), u2});
  auto small = division(eng, x, restrict(idu, z));
  if (!big.end.ran.counit) return std::nullopt;
  const auto& I = *big.end.shape.indexing;
  const auto& Is = *small.end.shape.indexing;
  auto e_u2 = product_functor(small.end.shape.jl, big.end.shape.jl, {identity_functor(terminal_category()), u2});
  auto src = restrict(e_u2, big.end.value());
  auto m = eng.ran_transpose(small.end.ran, src, [&](std::size_t i) {
    auto c = Is.object_coords(i);
    return big.end.ran.counit->at(I.object_from_coords({c[0], c[1], u2.obj(c[2])}));
  });
  if (!m) return std::nullopt;
  return restrict(into_e_times(small.end.shape.jl), *m);
}

/// The mate (id × u2)_!(X ⊠ Y) → X ⊠ u2_!Y.
template <InstanceCategory B>
std::optional<DiagramMap<B>> tensor_lan_mate_second(const KanEngine<B>& eng, const Functor& u2, const Diagram<B>& x,
                                                    const Diagram<B>& y) {
  const auto& b = eng.base();
  auto ly = eng.lan(u2, y);
  if (!ly.unit) return std::nullopt;
  auto xy = external_tensor(b, x, y);
  auto tgt = external_tensor(b, x, ly.value);
  auto idu = product_functor(xy.shape, tgt.shape, {identity_functor(x.shape), u2});
  auto l = eng.lan(idu, xy);
  const auto& P = *xy.shape;
  return eng.lan_transpose(l, tgt, [&](std::size_t o) {
    auto c = P.object_coords(o);
    return b.tensor(b.identity(x.at(c[0])), ly.unit->at(c[1]));
  });
}

/// The mate (u1 × id)_!(X ⊠ Y) → u1_!X ⊠ Y.
template <InstanceCategory B>
std::optional<DiagramMap<B>> tensor_lan_mate_first(const KanEngine<B>& eng, const Functor& u1, const Diagram<B>& x,
                                                   const Diagram<B>& y) {
  const auto& b = eng.base();
  auto lx = eng.lan(u1, x);
  if (!lx.unit) return std::nullopt;
  auto xy = external_tensor(b, x, y);
  auto tgt = external_tensor(b, lx.value, y);
  auto ui = product_functor(xy.shape, tgt.shape, {u1, identity_functor(y.shape)});
  auto l = eng.lan(ui, xy);
  const auto& P = *xy.shape;
  return eng.lan_transpose(l, tgt, [&](std::size_t o) {
    auto c = P.object_coords(o);
    return b.tensor(lx.unit->at(c[0]), b.identity(y.at(c[1])));
  });
}

struct SecondVariableResult {
  bool hom_iso = false;    // γ^{Hom_l}_{id,u2} invertible
  bool mate_iso = false;   // (id × u2)_! ⊠ → ⊠ (id × u2_!) invertible
  bool agree() const { return hom_iso == mate_iso; }
};

template <InstanceCategory B>
SecondVariableResult second_variable_structure_check(const KanEngine<B>& eng, const Functor& u2, const Diagram<B>& x,
                                                     const Diagram<B>& y, const Diagram<B>& z) {
  SecondVariableResult r;
  auto g = hom_second_variable_map(eng, u2, x, z);
  r.hom_iso = g && validate(eng.base(), *g).empty() && first_non_iso(eng.base(), *g) == npos;
  auto m = tensor_lan_mate_second(eng, u2, x, y);
  r.mate_iso = m && validate(eng.base(), *m).empty() && first_non_iso(eng.base(), *m) == npos;
  return r;
}

// ---------------------------------------------------------------------------
// Reports

struct MonoidalOptions {
  std::uint64_t seed = 0;
  std::size_t lr_fixtures = 20;
  std::size_t adjunction_samples = 50;
  std::size_t structure_samples = 20;
  RandomOptions random{};
};

/// The l/r correspondence, strictness and cocontinuity of the external tensor.
template <InstanceCategory B>
Report bimorphism_report(const KanEngine<B>& eng, const std::vector<CatPtr>& shapes, const MonoidalOptions& opt = {}) {
  const auto& b = eng.base();
  Report rep;
  rep.command = "bimorphism";
  rep.seed = opt.seed;
  rep.parameters.emplace_back("base", b.name());
  std::mt19937_64 rng(opt.seed);
  std::vector<ProductMorphism<B>> fs{pointwise_tensor(b), pointwise_coproduct(b)};
  auto bm = represented_tensor(b);

  CheckResult lr = make_check("l o r = id", "internalize(externalize(F)) equals F on objects and maps");
  for (std::size_t i = 0; i < opt.lr_fixtures; ++i) {
    const auto& F = fs[i % fs.size()];
    const auto& J = shapes[i % shapes.size()];
    auto x = random_diagram(b, J, rng, opt.random), y = random_diagram(b, J, rng, opt.random);
    auto x2 = random_diagram(b, J, rng, opt.random), y2 = random_diagram(b, J, rng, opt.random);
    if (!x || !y || !x2 || !y2) continue;
    auto f = random_map(b, *x, *x2, rng), g = random_map(b, *y, *y2, rng);
    if (!f) f = identity_map(b, *x);
    if (!g) g = identity_map(b, *y);
    lr.expect_with(lr_identity(F, *f, *g), [&] { return F.name + " on " + J->name() + ": l(r(F)) != F"; });
  }

  CheckResult ext = make_check("externalize(pointwise tensor) = external tensor");
  auto rpt = externalize(pointwise_tensor(b));
  for (const auto& J1 : shapes)
    for (std::size_t i = 0; i < 2; ++i) {
      const auto& J2 = shapes[(i * 3 + J1->num_objects()) % shapes.size()];
      auto x = random_diagram(b, J1, rng, opt.random), y = random_diagram(b, J2, rng, opt.random);
      if (!x || !y) continue;
      ext.expect_with(rpt.apply(*x, *y) == bm.apply(*x, *y), [&] { return J1->name() + " x " + J2->name(); });
    }

  CheckResult strict = make_check("external tensor is strict", "B(u1*X, u2*Y) = (u1 x u2)* B(X, Y)");
  CheckResult cocont = make_check("external tensor preserves lan in each variable",
                         "(u x id)_!(X * Y) -> u_!X * Y and (id x u)_!(X * Y) -> X * u_!Y are invertible");
  for (std::size_t i = 0; i < opt.structure_samples; ++i) {
    const auto& J1 = shapes[rng() % shapes.size()];
    const auto& K1 = shapes[rng() % shapes.size()];
    const auto& J2 = shapes[rng() % shapes.size()];
    auto us = enumerate_functors(J1, K1), vs = enumerate_functors(J2, J2);
    if (us.empty()) continue;
    const auto& u = us[rng() % us.size()];
    const auto& v = vs[rng() % vs.size()];
    auto x = random_diagram(b, K1, rng, opt.random), y = random_diagram(b, J2, rng, opt.random);
    auto xs = random_diagram(b, J1, rng, opt.random);
    if (!x || !y || !xs) continue;
    strict.expect_with(bimorphism_strict(bm, u, v, *x, *y), [&] { return "u=" + describe(u) + ", v=" + describe(v); });
    auto m1 = tensor_lan_mate_first(eng, u, *xs, *y);
    auto m2 = tensor_lan_mate_second(eng, u, *y, *xs);
    cocont.expect_with(m1 && first_non_iso(b, *m1) == npos, [&] { return "first variable, u=" + describe(u); });
    cocont.expect_with(m2 && first_non_iso(b, *m2) == npos, [&] { return "second variable, u=" + describe(u); });
  }
  for (auto* c : {&lr, &ext, &strict, &cocont}) rep.checks.push_back(std::move(*c));
  return rep;
}

/// Division, the adjunction of two variables and the structure maps of Hom_l.
template <InstanceCategory B>
Report adjunction_report(const KanEngine<B>& eng, const MonoidalOptions& opt = {}) {
  const auto& b = eng.base();
  Report rep;
  rep.command = "adjunction";
  rep.seed = opt.seed;
  rep.parameters.emplace_back("base", b.name());
  std::mt19937_64 rng(opt.seed);
  auto e = terminal_category(), one = poset_chain(1);
  RandomOptions small = opt.random;
  small.max_size = std::min<std::size_t>(small.max_size, 2);

  CheckResult adj = make_check("hom(X * Y, Z) = hom(Y, Hom_l(X, Z))", "bijection through the end wedge, both round trips");
  CheckResult nat = make_check("bijection is natural in Y");
  CheckResult right = make_check("Hom_r agrees with Hom_l after swapping", "Hom_r(Y, Z) over J1 computed by symmetry");
  for (std::size_t i = 0; i < opt.adjunction_samples; ++i) {
    auto J1 = i % 2 ? one : e;
    auto J2 = i % 3 == 2 ? one : e;
    auto x = random_diagram(b, J1, rng, small), y = random_diagram(b, J2, rng, small);
    auto z = random_diagram(b, pair_shape(J1, J2), rng, small);
    if (!x || !y || !z) continue;
    auto r = adjunction_check(eng, *x, *y, *z);
    adj.expect_with(r.passed, [&] { return r.witness + "; X=" + describe(b, *x) + ", Y=" + describe(b, *y); });
    auto yp = random_diagram(b, J2, rng, small);
    if (yp) {
      auto g = random_map(b, *yp, *y, rng);
      auto phi = random_map(b, external_tensor(b, *x, *y), *z, rng);
      if (g && phi)
        nat.expect_with(adjunction_natural_in_y(eng, *x, *g, *z, *phi),
                        [&] { return "X=" + describe(b, *x) + ", g=" + describe(b, *g); });
    }
    // Hom_r(Y, Z) with Y over J2: the value over J1 is ∫_{j2} [Y(j2), Z(-, j2)].
    auto hr = division_right(eng, *y, *z);
    bool ok = hr.value.objects.size() == J1->num_objects();
    if (ok && J2->num_objects() == 1)
      for (std::size_t a = 0; a < J1->num_objects(); ++a)
        ok = ok && hr.value.at(a) == b.internal_hom(y->at(0), z->at(z->shape->object_from_coords({a, 0})));
    right.expect_with(ok, [&] { return "Y=" + describe(b, *y) + ", Z=" + describe(b, *z); });
  }

  CheckResult sv = make_check("second variable: Hom_l structure maps iff tensor mates",
                     "gamma^{Hom_l}_{id,u2} and (id x u2)_! mates are both invertible");
  auto fam = default_shape_family();
  for (std::size_t i = 0; i < opt.structure_samples; ++i) {
    const auto& J2 = fam[rng() % 5];
    const auto& K2 = fam[rng() % 5];
    auto us = enumerate_functors(J2, K2);
    if (us.empty()) continue;
    const auto& u2 = us[rng() % us.size()];
    auto J1 = i % 2 ? one : e;
    auto x = random_diagram(b, J1, rng, small), y = random_diagram(b, J2, rng, small);
    auto z = random_diagram(b, pair_shape(J1, K2), rng, small);
    if (!x || !y || !z) continue;
    auto r = second_variable_structure_check(eng, u2, *x, *y, *z);
    sv.expect_with(r.agree() && r.hom_iso && r.mate_iso, [&] {
      return "u2=" + describe(u2) + ": hom map " + (r.hom_iso ? "iso" : "not iso") + ", mate " +
             (r.mate_iso ? "iso" : "not iso");
    });
  }
  for (auto* c : {&adj, &nat, &right, &sv}) rep.checks.push_back(std::move(*c));
  return rep;
}

}  // namespace dlab
