#pragma once

// Additivity of represented derivators (zero objects, biproducts, the shear
// map), the center, and linearity over End(S).

#include <functional>
#include <optional>
#include <random>
#include <string>

#include "dlab/axioms.hpp"
#include "dlab/monoidal.hpp"
#include "dlab/report.hpp"

namespace dlab {

// ---------------------------------------------------------------------------
// Base level

template <InstanceCategory B>
struct ZeroData {
  typename B::ColimitT initial;
  typename B::LimitT terminal;
  std::optional<typename B::Morphism> to_terminal, to_initial;
  bool pointed() const { return to_initial.has_value(); }
};

template <InstanceCategory B>
ZeroData<B> zero_data(const B& b) {
  auto E = empty_category();
  ZeroData<B> z{b.colimit(*E, {}, {}), b.limit(*E, {}, {}), {}, {}};
  z.to_terminal = b.factor_cocone(z.initial, z.terminal.apex, {});
  if (z.to_terminal) z.to_initial = b.inverse(*z.to_terminal);
  return z;
}

/// x → 0 → y; requires a zero object.
template <InstanceCategory B>
typename B::Morphism zero_map(const B& b, const ZeroData<B>& z, const typename B::Object& x,
                              const typename B::Object& y) {
  if (!z.pointed()) throw CategoryError("zero map requested in a category without a zero object");
  return b.compose(*b.factor_cocone(z.initial, y, {}), b.compose(*z.to_initial, *b.factor_cone(z.terminal, x, {})));
}

template <InstanceCategory B>
struct Biproduct {
  typename B::ColimitT coproduct;
  typename B::LimitT product;
  std::optional<typename B::Morphism> comparison, inverse;
};

/// x ⊔ y → x × y with matrix [[1, 0], [0, 1]].
template <InstanceCategory B>
Biproduct<B> biproduct(const B& b, const ZeroData<B>& z, const typename B::Object& x, const typename B::Object& y) {
  auto d2 = discrete(2);
  Biproduct<B> r{b.colimit(*d2, {x, y}, {b.identity(x), b.identity(y)}),
                 b.limit(*d2, {x, y}, {b.identity(x), b.identity(y)}), {}, {}};
  if (!z.pointed()) return r;
  auto i0 = b.factor_cone(r.product, x, {b.identity(x), zero_map(b, z, x, y)});
  auto i1 = b.factor_cone(r.product, y, {zero_map(b, z, y, x), b.identity(y)});
  if (i0 && i1) r.comparison = b.factor_cocone(r.coproduct, r.product.apex, {*i0, *i1});
  if (r.comparison) r.inverse = b.inverse(*r.comparison);
  return r;
}

/// f + g = [f, g] ∘ Δ, with Δ: x → x × x ≅ x ⊔ x.
template <InstanceCategory B>
typename B::Morphism sum(const B& b, const ZeroData<B>& z, const typename B::Morphism& f,
                         const typename B::Morphism& g) {
  auto x = b.source(f), y = b.target(f);
  auto bp = biproduct(b, z, x, x);
  if (!bp.inverse) throw CategoryError("sum of maps requires biproducts");
  auto diag = b.compose(*bp.inverse, *b.factor_cone(bp.product, x, {b.identity(x), b.identity(x)}));
  return b.compose(*b.factor_cocone(bp.coproduct, y, {f, g}), diag);
}

struct AdditiveVerdict {
  bool passed = false;
  std::string witness;
};

/// Zero object, biproducts and shear on sampled objects of the base.
template <InstanceCategory B>
AdditiveVerdict is_additive_category(const B& b, std::size_t max_size = 2) {
  auto z = zero_data(b);
  if (!z.pointed())
    return {false, "not pointed: initial " + b.describe(z.initial.apex) + " is not isomorphic to terminal " +
                       b.describe(z.terminal.apex)};
  auto objs = b.sample_objects(max_size);
  for (const auto& x : objs)
    for (const auto& y : objs) {
      auto bp = biproduct(b, z, x, y);
      if (!bp.inverse) return {false, "coproduct -> product not invertible for " + b.describe(x) + ", " + b.describe(y)};
    }
  for (const auto& x : objs) {
    auto bp = biproduct(b, z, x, x);
    const auto& c = bp.coproduct;
    auto shear = b.factor_cocone(c, c.apex, {c.legs[0], sum(b, z, c.legs[0], c.legs[1])});
    if (!shear || !b.inverse(*shear)) return {false, "shear not invertible on " + b.describe(x)};
  }
  return {true, {}};
}

// ---------------------------------------------------------------------------
// Diagram level, through Kan extensions

/// The unique map from the initial to the terminal object of C^J, as lan and
/// ran along the empty functor.
template <InstanceCategory B>
std::optional<DiagramMap<B>> diagram_zero_comparison(const KanEngine<B>& eng, const CatPtr& j) {
  Functor u{empty_category(), j, {}, {}};
  Diagram<B> none{empty_category(), {}, {}};
  auto l = eng.lan(u, none);
  auto r = eng.ran(u, none);
  return eng.lan_transpose(l, r.value, [&](std::size_t) -> typename B::Morphism {
    throw CategoryError("no components over the empty category");
  });
}

template <InstanceCategory B>
struct DiagramCoproduct {
  Coproduct cp;
  LanData<B> lan;  // along the fold J ⊔ J → J
  std::vector<std::size_t> side, index;  // for each object of J ⊔ J
  DiagramMap<B> inj(std::size_t s) const {
    DiagramMap<B> m{{}, lan.value, {}};
    m.source = s == 0 ? restrict(cp.first, lan.input) : restrict(cp.second, lan.input);
    const auto& f = s == 0 ? cp.first : cp.second;
    for (std::size_t j = 0; j < f.source->num_objects(); ++j) m.components.push_back(lan.unit->at(f.obj(j)));
    return m;
  }
};

template <InstanceCategory B>
DiagramCoproduct<B> diagram_coproduct(const KanEngine<B>& eng, const Diagram<B>& x, const Diagram<B>& y) {
  detail::require_same_shape(x.shape, y.shape);
  auto cp = coproduct(x.shape, x.shape);
  DiagramCoproduct<B> d{cp, eng.lan(codiagonal(cp, x.shape), glue(cp, x, y)), {}, {}};
  d.side.resize(cp.category->num_objects());
  d.index.resize(cp.category->num_objects());
  for (std::size_t j = 0; j < x.shape->num_objects(); ++j) {
    d.side[cp.first.obj(j)] = 0;
    d.index[cp.first.obj(j)] = j;
    d.side[cp.second.obj(j)] = 1;
    d.index[cp.second.obj(j)] = j;
  }
  return d;
}

/// [f, g]: X ⊔ Y → Z.
template <InstanceCategory B>
std::optional<DiagramMap<B>> copair(const KanEngine<B>& eng, const DiagramCoproduct<B>& c, const Diagram<B>& z,
                                    const DiagramMap<B>& f, const DiagramMap<B>& g) {
  return eng.lan_transpose(c.lan, z, [&](std::size_t i) { return (c.side[i] == 0 ? f : g).at(c.index[i]); });
}

template <InstanceCategory B>
DiagramMap<B> zero_diagram_map(const B& b, const ZeroData<B>& z, const Diagram<B>& x, const Diagram<B>& y) {
  DiagramMap<B> m{x, y, {}};
  for (std::size_t j = 0; j < x.objects.size(); ++j) m.components.push_back(zero_map(b, z, x.at(j), y.at(j)));
  return m;
}

/// X ⊔ Y → X × Y in C^J, the product being ran along the fold.
template <InstanceCategory B>
std::optional<DiagramMap<B>> diagram_biproduct_comparison(const KanEngine<B>& eng, const ZeroData<B>& z,
                                                          const Diagram<B>& x, const Diagram<B>& y) {
  const auto& b = eng.base();
  auto c = diagram_coproduct(eng, x, y);
  auto r = eng.ran(codiagonal(c.cp, x.shape), c.lan.input);
  auto to_prod = [&](const Diagram<B>& src, std::size_t s) {
    return eng.ran_transpose(r, src, [&](std::size_t i) {
      const auto& tgt = c.side[i] == 0 ? x : y;
      auto j = c.index[i];
      return c.side[i] == s ? b.identity(src.at(j)) : zero_map(b, z, src.at(j), tgt.at(j));
    });
  };
  auto ix = to_prod(x, 0), iy = to_prod(y, 1);
  if (!ix || !iy) return std::nullopt;
  return copair(eng, c, r.value, *ix, *iy);
}

/// f + g componentwise.
template <InstanceCategory B>
DiagramMap<B> sum(const B& b, const ZeroData<B>& z, const DiagramMap<B>& f, const DiagramMap<B>& g) {
  DiagramMap<B> m{f.source, f.target, {}};
  for (std::size_t j = 0; j < f.components.size(); ++j) m.components.push_back(sum(b, z, f.at(j), g.at(j)));
  return m;
}

/// [ι1, ι1 + ι2]: X ⊔ X → X ⊔ X.
template <InstanceCategory B>
std::optional<DiagramMap<B>> diagram_shear(const KanEngine<B>& eng, const ZeroData<B>& z, const Diagram<B>& x) {
  auto c = diagram_coproduct(eng, x, x);
  if (!c.lan.unit) return std::nullopt;
  auto i1 = c.inj(0), i2 = c.inj(1);
  return copair(eng, c, c.lan.value, i1, sum(eng.base(), z, i1, i2));
}

enum class KanFunctor { Restriction, Lan, Ran };
inline const char* kan_functor_name(KanFunctor f) {
  return f == KanFunctor::Restriction ? "u*" : f == KanFunctor::Lan ? "u_!" : "u_*";
}

/// F(X) ⊔ F(Y) → F(X ⊔ Y) for F = u*, u_! or u_*. X and Y live on the source
/// of F (K for u*, J otherwise).
template <InstanceCategory B>
std::optional<DiagramMap<B>> preservation_comparison(const KanEngine<B>& eng, KanFunctor which, const Functor& u,
                                                     const Diagram<B>& x, const Diagram<B>& y) {
  auto c = diagram_coproduct(eng, x, y);
  if (!c.lan.unit) return std::nullopt;
  auto i1 = c.inj(0), i2 = c.inj(1);
  if (which == KanFunctor::Restriction) {
    auto ux = restrict(u, x), uy = restrict(u, y);
    auto cu = diagram_coproduct(eng, ux, uy);
    return copair(eng, cu, restrict(u, c.lan.value), restrict(u, i1), restrict(u, i2));
  }
  if (which == KanFunctor::Lan) {
    auto lx = eng.lan(u, x), ly = eng.lan(u, y), ls = eng.lan(u, c.lan.value);
    auto f1 = eng.lan_map(lx, ls, i1), f2 = eng.lan_map(ly, ls, i2);
    if (!f1 || !f2) return std::nullopt;
    auto ck = diagram_coproduct(eng, lx.value, ly.value);
    return copair(eng, ck, ls.value, *f1, *f2);
  }
  auto rx = eng.ran(u, x), ry = eng.ran(u, y), rs = eng.ran(u, c.lan.value);
  auto f1 = eng.ran_map(rx, rs, i1), f2 = eng.ran_map(ry, rs, i2);
  if (!f1 || !f2) return std::nullopt;
  auto ck = diagram_coproduct(eng, rx.value, ry.value);
  return copair(eng, ck, rs.value, *f1, *f2);
}

struct AdditiveOptions {
  std::uint64_t seed = 0;
  std::size_t samples_per_shape = 3;
  std::size_t functor_samples = 30;
  std::size_t linearity_samples = 50;
  RandomOptions random{};
};

template <InstanceCategory B>
Report additivity_report(const KanEngine<B>& eng, const std::vector<CatPtr>& shapes, const AdditiveOptions& opt = {}) {
  const auto& b = eng.base();
  Report rep;
  rep.command = "additive";
  rep.seed = opt.seed;
  rep.parameters.emplace_back("base", b.name());
  std::mt19937_64 rng(opt.seed);
  auto z = zero_data(b);
  auto ok = [&](const std::optional<DiagramMap<B>>& m) {
    return m && validate(b, *m).empty() && first_non_iso(b, *m) == npos;
  };

  auto pointed = make_check("pointed", "initial -> terminal in C^J is invertible");
  for (const auto& J : shapes) {
    auto m = diagram_zero_comparison(eng, J);
    pointed.expect_with(ok(m), [&] {
      return "C^" + J->name() + " is not pointed: initial " + describe(b, m ? m->source : Diagram<B>{J, {}, {}}) +
             " vs terminal " + describe(b, m ? m->target : Diagram<B>{J, {}, {}});
    });
  }
  rep.checks.push_back(pointed);
  if (!pointed.passed) {
    rep.notes.push_back("biproduct, shear and preservation checks need a zero object and were not run");
    return rep;
  }

  auto bip = make_check("biproducts", "X + Y -> X x Y in C^J is invertible");
  auto shear = make_check("shear", "[i1, i1 + i2]: X + X -> X + X is invertible");
  for (const auto& J : shapes)
    for (std::size_t s = 0; s < opt.samples_per_shape; ++s) {
      auto x = random_diagram(b, J, rng, opt.random), y = random_diagram(b, J, rng, opt.random);
      if (!x || !y) continue;
      bip.expect_with(ok(diagram_biproduct_comparison(eng, z, *x, *y)),
                      [&] { return "X=" + describe(b, *x) + ", Y=" + describe(b, *y); });
      shear.expect_with(ok(diagram_shear(eng, z, *x)), [&] { return "X=" + describe(b, *x); });
    }

  auto pres = make_check("u*, u_!, u_* preserve biproducts", "F(X) + F(Y) -> F(X + Y) is invertible");
  for (std::size_t s = 0; s < opt.functor_samples; ++s) {
    auto J = shapes[rng() % shapes.size()], K = shapes[rng() % shapes.size()];
    auto us = enumerate_functors(J, K);
    if (us.empty()) continue;
    const auto& u = us[rng() % us.size()];
    auto xk = random_diagram(b, K, rng, opt.random), yk = random_diagram(b, K, rng, opt.random);
    auto xj = random_diagram(b, J, rng, opt.random), yj = random_diagram(b, J, rng, opt.random);
    if (!xk || !yk || !xj || !yj) continue;
    for (auto which : {KanFunctor::Restriction, KanFunctor::Lan, KanFunctor::Ran}) {
      auto m = which == KanFunctor::Restriction ? preservation_comparison(eng, which, u, *xk, *yk)
                                                : preservation_comparison(eng, which, u, *xj, *yj);
      pres.expect_with(ok(m), [&] { return std::string(kan_functor_name(which)) + " for u=" + describe(u); });
    }
  }
  for (auto* c : {&bip, &shear, &pres}) rep.checks.push_back(std::move(*c));
  return rep;
}

// ---------------------------------------------------------------------------
// Center

/// A family τ_x: x → x in the base, applied pointwise to diagrams.
template <InstanceCategory B>
struct CenterElement {
  std::string label;
  std::function<typename B::Morphism(const typename B::Object&)> at;
};

template <InstanceCategory B>
DiagramMap<B> apply(const B&, const CenterElement<B>& t, const Diagram<B>& x) {
  DiagramMap<B> m{x, x, {}};
  for (const auto& o : x.objects) m.components.push_back(t.at(o));
  return m;
}

/// All families (τ_x) over the given objects that commute with every
/// morphism between them.
template <InstanceCategory B>
std::vector<std::vector<typename B::Morphism>> natural_endo_families(const B& b,
                                                                     const std::vector<typename B::Object>& objs) {
  using M = typename B::Morphism;
  std::vector<std::vector<M>> out;
  std::vector<M> cur;
  std::vector<std::vector<M>> homs(objs.size() * objs.size());
  for (std::size_t i = 0; i < objs.size(); ++i)
    for (std::size_t j = 0; j < objs.size(); ++j) homs[i * objs.size() + j] = b.hom(objs[i], objs[j]);
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == objs.size()) {
      out.push_back(cur);
      return;
    }
    for (const auto& t : homs[i * objs.size() + i]) {
      bool good = true;
      for (std::size_t k = 0; k <= i && good; ++k) {
        const auto& tk = k == i ? t : cur[k];
        for (const auto& f : homs[k * objs.size() + i])
          if (!(b.compose(t, f) == b.compose(f, tk))) {
            good = false;
            break;
          }
        for (const auto& f : homs[i * objs.size() + k])
          if (good && !(b.compose(tk, f) == b.compose(f, t))) {
            good = false;
            break;
          }
      }
      if (!good) continue;
      cur.push_back(t);
      go(i + 1);
      cur.pop_back();
    }
  };
  go(0);
  return out;
}

/// Solution space of τ_n A = A τ_m over all n×m elementary matrices A,
/// for 1 ≤ m, n ≤ max_dim; one block τ_n per dimension in each basis vector.
std::vector<std::vector<Matrix>> mat_center_basis(const MatBase& b, std::size_t max_dim);

template <InstanceCategory B>
struct CenterDescription {
  std::string ring;
  std::vector<CenterElement<B>> elements;
};

CenterDescription<MatBase> center(const MatBase& b, std::size_t max_dim = 3);
CenterDescription<FinSetBase> center(const FinSetBase& b, std::size_t max_size = 3);

/// Naturality, compatibility with restriction and determination by the
/// component at e, on sampled diagrams.
template <InstanceCategory B>
void certify_center(const KanEngine<B>& eng, const std::vector<CenterElement<B>>& elems,
                    const std::vector<CatPtr>& shapes, std::mt19937_64& rng, const RandomOptions& ropt,
                    std::size_t samples, CheckResult& nat, CheckResult& restr, CheckResult& comm) {
  const auto& b = eng.base();
  for (const auto& J : shapes)
    for (std::size_t s = 0; s < samples; ++s) {
      auto x = random_diagram(b, J, rng, ropt), y = random_diagram(b, J, rng, ropt);
      if (!x || !y) continue;
      auto f = random_map(b, *x, *y, rng);
      auto K = shapes[rng() % shapes.size()];
      auto us = enumerate_functors(K, J);
      for (const auto& t : elems) {
        auto tx = apply(b, t, *x), ty = apply(b, t, *y);
        bool good = validate(b, tx).empty() && validate(b, ty).empty();
        if (f) good = good && equal_maps(compose(b, ty, *f), compose(b, *f, tx));
        nat.expect_with(good, [&] { return t.label + " on " + describe(b, *x); });
        if (!us.empty()) {
          const auto& u = us[rng() % us.size()];
          restr.expect_with(equal_maps(restrict(u, tx), apply(b, t, restrict(u, *x))),
                            [&] { return t.label + " along u=" + describe(u); });
        }
        for (std::size_t j = 0; j < J->num_objects(); ++j) {
          auto pj = point(J, j);
          restr.expect_with(equal_maps(restrict(pj, tx), apply(b, t, restrict(pj, *x))),
                            [&] { return t.label + " at " + J->object_id(j); });
        }
        for (const auto& s2 : elems) {
          auto sx = apply(b, s2, *x);
          comm.expect_with(equal_maps(compose(b, tx, sx), compose(b, sx, tx)),
                           [&] { return t.label + " and " + s2.label + " do not commute"; });
        }
      }
    }
}

template <typename B>
concept HasCenter = requires(const B& b) { center(b, std::size_t{1}); };

/// Center description plus certification on the given shapes, with an
/// enumeration cross-check over small objects.
template <InstanceCategory B>
  requires HasCenter<B>
Report center_report(const KanEngine<B>& eng, const std::vector<CatPtr>& shapes, const AdditiveOptions& opt = {}) {
  const auto& b = eng.base();
  Report rep;
  rep.command = "center";
  rep.seed = opt.seed;
  rep.parameters.emplace_back("base", b.name());
  std::mt19937_64 rng(opt.seed);
  auto d = center(b, 3);
  rep.parameters.emplace_back("ring", d.ring);
  auto enumc = make_check("enumeration agrees", "natural endomorphisms of id on objects of size <= 2");
  auto fams = natural_endo_families(b, b.sample_objects(2));
  enumc.expect_with(fams.size() == d.elements.size(), [&] {
    return std::to_string(fams.size()) + " families vs " + std::to_string(d.elements.size()) + " elements";
  });
  auto nat = make_check("natural", "each element acts by natural endomorphisms of C^J");
  auto restr = make_check("restriction", "action commutes with u* and evaluation at points");
  auto comm = make_check("commutative", "elements commute pairwise");
  certify_center(eng, d.elements, shapes, rng, opt.random, opt.samples_per_shape, nat, restr, comm);
  for (auto* c : {&enumc, &nat, &restr, &comm}) rep.checks.push_back(std::move(*c));
  return rep;
}

// ---------------------------------------------------------------------------
// Linear structure from End(S)

/// σ(s)_x = l_x ∘ (s ⊗ x) ∘ l_x⁻¹ with l: S ⊗ − ≅ id.
template <InstanceCategory B>
CenterElement<B> sigma(const B& b, const typename B::Morphism& s) {
  return {"sigma(" + b.describe(s) + ")", [b, s](const typename B::Object& x) {
            auto l = b.left_unitor(x);
            return b.compose(l, b.compose(b.tensor(s, b.identity(x)), *b.inverse(l)));
          }};
}

template <InstanceCategory B>
struct LinearStructure {
  std::string ring;
  std::vector<typename B::Morphism> scalars;  // End(S)
  std::vector<CenterElement<B>> images;
};

template <InstanceCategory B>
LinearStructure<B> sigma_from_unit(const B& b) {
  if (!is_additive_category(b, 1).passed) throw CategoryError(b.name() + " is not additive");
  LinearStructure<B> ls;
  auto s = b.unit();
  ls.scalars = b.hom(s, s);
  ls.ring = "End(S) with " + std::to_string(ls.scalars.size()) + " elements";
  for (const auto& c : ls.scalars) ls.images.push_back(sigma(b, c));
  return ls;
}

/// Exhaustive ring-map laws of σ over End(S), checked on sampled objects.
template <InstanceCategory B>
void certify_sigma(const B& b, const LinearStructure<B>& ls, std::size_t max_size, CheckResult& laws,
                   CheckResult& injective) {
  auto z = zero_data(b);
  auto S = b.unit();
  auto objs = b.sample_objects(max_size);
  const auto& sc = ls.scalars;
  auto one = b.identity(S), zero = zero_map(b, z, S, S);
  for (const auto& x : objs) {
    laws.expect_with(sigma(b, one).at(x) == b.identity(x), [&] { return "sigma(1) != id on " + b.describe(x); });
    laws.expect_with(sigma(b, zero).at(x) == zero_map(b, z, x, x), [&] { return "sigma(0) != 0 on " + b.describe(x); });
  }
  for (const auto& s : sc)
    for (const auto& t : sc) {
      auto st = b.compose(s, t), spt = sum(b, z, s, t);
      for (const auto& x : objs) {
        auto w = [&](const char* what) { return std::string(what) + " fails for " + b.describe(s) + ", " + b.describe(t); };
        laws.expect_with(sigma(b, spt).at(x) == sum(b, z, sigma(b, s).at(x), sigma(b, t).at(x)), [&] { return w("additivity"); });
        laws.expect_with(sigma(b, st).at(x) == b.compose(sigma(b, s).at(x), sigma(b, t).at(x)),
                         [&] { return w("multiplicativity"); });
      }
      if (!(s == t))
        injective.expect_with(!(sigma(b, s).at(S) == sigma(b, t).at(S)),
                              [&] { return "sigma(" + b.describe(s) + ") = sigma(" + b.describe(t) + ")"; });
    }
}

/// u*(s·f) = s·u*(f), u_!(s·f) = s·u_!(f), u_*(s·f) = s·u_*(f).
/// f lives on the source of u, g on its target.
template <InstanceCategory B>
std::string linearity_failure(const KanEngine<B>& eng, const Functor& u, const typename B::Morphism& s,
                              const DiagramMap<B>& f, const DiagramMap<B>& g) {
  const auto& b = eng.base();
  auto sg = sigma(b, s);
  auto sgg = compose(b, apply(b, sg, g.target), g);
  if (!equal_maps(restrict(u, sgg), compose(b, apply(b, sg, restrict(u, g.target)), restrict(u, g))))
    return "u*(s g) != s u*(g)";
  auto sf = compose(b, apply(b, sg, f.target), f);
  auto lx = eng.lan(u, f.source), ly = eng.lan(u, f.target);
  auto a = eng.lan_map(lx, ly, sf), c = eng.lan_map(lx, ly, f);
  if (!a || !c || !equal_maps(*a, compose(b, apply(b, sg, ly.value), *c))) return "u_!(s f) != s u_!(f)";
  auto rx = eng.ran(u, f.source), ry = eng.ran(u, f.target);
  auto ra = eng.ran_map(rx, ry, sf), rc = eng.ran_map(rx, ry, f);
  if (!ra || !rc || !equal_maps(*ra, compose(b, apply(b, sg, ry.value), *rc))) return "u_*(s f) != s u_*(f)";
  return {};
}

template <InstanceCategory B>
Report linearity_report(const KanEngine<B>& eng, const std::vector<CatPtr>& shapes, const AdditiveOptions& opt = {}) {
  const auto& b = eng.base();
  Report rep;
  rep.command = "linearity";
  rep.seed = opt.seed;
  rep.parameters.emplace_back("base", b.name());
  std::mt19937_64 rng(opt.seed);
  auto ls = sigma_from_unit(b);
  auto lin = make_check("Kan extension functors are linear", "u*, u_!, u_* commute with sigma(s) on (u, s, f)");
  for (std::size_t i = 0; i < opt.linearity_samples; ++i) {
    auto J = shapes[rng() % shapes.size()], K = shapes[rng() % shapes.size()];
    auto us = enumerate_functors(J, K);
    if (us.empty()) continue;
    const auto& u = us[rng() % us.size()];
    const auto& s = ls.scalars[rng() % ls.scalars.size()];
    auto x = random_diagram(b, J, rng, opt.random), y = random_diagram(b, J, rng, opt.random);
    auto xk = random_diagram(b, K, rng, opt.random), yk = random_diagram(b, K, rng, opt.random);
    if (!x || !y || !xk || !yk) continue;
    auto f = random_map(b, *x, *y, rng);
    auto g = random_map(b, *xk, *yk, rng);
    if (!f || !g) continue;
    auto w = linearity_failure(eng, u, s, *f, *g);
    lin.expect_with(w.empty(), [&] { return w + ": u=" + describe(u) + ", s=" + b.describe(s); });
  }
  rep.checks.push_back(std::move(lin));
  return rep;
}

}  // namespace dlab
