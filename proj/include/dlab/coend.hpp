#pragma once

// Coends and ends of two-sided diagrams X: J × K^op × K × L → C.
//
//   ∫^K X = π_! (id × (t,s) × id)^* X   over J × Ar(K) × L → J × L
//   ∫_K X = π_* (id × (s,t) × id)^* X   over J × Ar(K)^op × L → J × L

#include <optional>
#include <random>
#include <string>

#include "dlab/kan.hpp"
#include "dlab/report.hpp"

namespace dlab {

/// The flat product J × K^op × K × L.
CatPtr two_sided_shape(const CatPtr& j, const CatPtr& k, const CatPtr& l);

struct CoendShape {
  CatPtr j, k, l;
  CatPtr full;  // J × K^op × K × L
  CatPtr jl;    // J × L
  TwistedArrow ar;
  CatPtr indexing;     // J × Ar(K) × L, or J × Ar(K)^op × L for ends
  Functor restriction; // indexing → full
  Functor projection;  // indexing → jl
};

CoendShape coend_shape(const CatPtr& j, const CatPtr& k, const CatPtr& l);
CoendShape end_shape(const CatPtr& j, const CatPtr& k, const CatPtr& l);

template <InstanceCategory B>
struct CoendData {
  CoendShape shape;
  Diagram<B> restricted;
  LanData<B> lan;
  const Diagram<B>& value() const { return lan.value; }
};

template <InstanceCategory B>
struct EndData {
  CoendShape shape;
  Diagram<B> restricted;
  RanData<B> ran;
  const Diagram<B>& value() const { return ran.value; }
};

namespace detail {
inline void check_two_sided(const CoendShape& s, const CatPtr& shape) {
  if (!same_category(s.full, shape))
    throw CategoryError("(co)end over " + s.k->name() + ": diagram has shape '" + shape->name() + "', expected '" +
                        s.full->name() + "'");
}
}  // namespace detail

template <InstanceCategory B>
CoendData<B> coend(const KanEngine<B>& eng, const CoendShape& s, const Diagram<B>& x) {
  detail::check_two_sided(s, x.shape);
  auto r = restrict(s.restriction, x);
  auto l = eng.lan(s.projection, r);
  return {s, std::move(r), std::move(l)};
}
template <InstanceCategory B>
CoendData<B> coend(const KanEngine<B>& eng, const CatPtr& j, const CatPtr& k, const CatPtr& l, const Diagram<B>& x) {
  return coend(eng, coend_shape(j, k, l), x);
}

template <InstanceCategory B>
EndData<B> end(const KanEngine<B>& eng, const CoendShape& s, const Diagram<B>& x) {
  detail::check_two_sided(s, x.shape);
  auto r = restrict(s.restriction, x);
  auto l = eng.ran(s.projection, r);
  return {s, std::move(r), std::move(l)};
}
template <InstanceCategory B>
EndData<B> end(const KanEngine<B>& eng, const CatPtr& j, const CatPtr& k, const CatPtr& l, const Diagram<B>& x) {
  return end(eng, end_shape(j, k, l), x);
}

/// The hom functor K^op × K → Set as a two-sided diagram over e × K^op × K × e.
Diagram<FinSetBase> hom_diagram(const CatPtr& k);

/// The square comparing the coend of X(j, −, −, l) with the value of the
/// coend at (j, l); its left mate is the canonical map.
Square pointwise_coend_square(const CoendShape& s, std::size_t j, std::size_t l);

/// For each (j, l): the canonical map ∫^K X(j,−,−,l) → (∫^K X)(j,l). Returns
/// the first (j, l) object index of J × L whose map is missing or not
/// invertible, or npos.
template <InstanceCategory B>
std::size_t pointwise_coend_failure(const KanEngine<B>& eng, const CoendData<B>& c) {
  const auto& JL = *c.shape.jl;
  for (std::size_t o = 0; o < JL.num_objects(); ++o) {
    auto co = JL.object_coords(o);
    auto sq = pointwise_coend_square(c.shape, co[0], co[1]);
    auto m = eng.left_mate(sq, c.lan);
    if (!m || first_non_iso(eng.base(), *m) != npos) return o;
  }
  return npos;
}

// ---------------------------------------------------------------------------
// Fubini

/// Shapes and reindexing functors for comparing ∫^{K×L}, ∫^K∫^L and ∫^L∫^K
/// of X over J × (K×L)^op × (K×L) × M.
struct FubiniShapes {
  CatPtr j, k, l, m, kl;
  CoendShape single;
  // ∫^K ∫^L: inner coend over L with J' = J × K^op × K, outer over K.
  CoendShape inner_l, outer_k;
  Functor to_inner_l;  // inner_l.full → single.full
  Functor regroup_k;   // outer_k.full → inner_l.jl
  // ∫^L ∫^K
  CoendShape inner_k, outer_l;
  Functor to_inner_k;
  Functor regroup_l;
};

FubiniShapes fubini_shapes(const CatPtr& j, const CatPtr& k, const CatPtr& l, const CatPtr& m);

template <InstanceCategory B>
struct FubiniResult {
  std::optional<Diagram<B>> single, kl, lk;
  /// ∫^{K×L} → ∫^K∫^L and ∫^{K×L} → ∫^L∫^K, built by transposing composites
  /// of coend units; and the induced ∫^K∫^L → ∫^L∫^K.
  std::optional<DiagramMap<B>> to_kl, to_lk, kl_to_lk;
  bool passed = false;
  std::string witness;
};

template <InstanceCategory B>
FubiniResult<B> fubini_check(const KanEngine<B>& eng, const FubiniShapes& fs, const Diagram<B>& x) {
  const auto& b = eng.base();
  FubiniResult<B> res;
  auto single = coend(eng, fs.single, x);
  res.single = single.value();

  auto iterate = [&](const CoendShape& inner_s, const CoendShape& outer_s, const Functor& to_inner,
                     const Functor& regroup_f, bool l_first) -> std::optional<DiagramMap<B>> {
    auto inner = coend(eng, inner_s, restrict(to_inner, x));
    auto outer = coend(eng, outer_s, restrict(regroup_f, inner.value()));
    (l_first ? res.kl : res.lk) = outer.value();
    if (!inner.lan.unit || !outer.lan.unit) return std::nullopt;
    const auto& P = *fs.single.indexing;
    const auto& KL = *fs.kl;
    const auto& J3 = *inner_s.j;
    const auto& Kout = *outer_s.k;
    return eng.lan_transpose(single.lan, outer.value(), [&](std::size_t o) {
      auto c = P.object_coords(o);
      auto mc = KL.morphism_coords(c[1]);
      auto fo = l_first ? mc[0] : mc[1];  // outer variable
      auto fi = l_first ? mc[1] : mc[0];  // inner variable
      auto j3 = J3.object_from_coords({c[0], Kout.target(fo), Kout.source(fo)});
      auto in_obj = inner_s.indexing->object_from_coords({j3, fi, c[2]});
      auto out_obj = outer_s.indexing->object_from_coords({c[0], fo, c[2]});
      return b.compose(outer.lan.unit->at(out_obj), inner.lan.unit->at(in_obj));
    });
  };
  res.to_kl = iterate(fs.inner_l, fs.outer_k, fs.to_inner_l, fs.regroup_k, true);
  res.to_lk = iterate(fs.inner_k, fs.outer_l, fs.to_inner_k, fs.regroup_l, false);
  if (!res.to_kl || !res.to_lk) {
    res.witness = "comparison map could not be constructed";
    return res;
  }
  auto inv = inverse(b, *res.to_kl);
  if (!inv) {
    auto o = first_non_iso(b, *res.to_kl);
    res.witness = "int^{KxL} -> int^K int^L not invertible at " + fs.single.jl->object_id(o);
    return res;
  }
  auto o2 = first_non_iso(b, *res.to_lk);
  if (o2 != npos) {
    res.witness = "int^{KxL} -> int^L int^K not invertible at " + fs.single.jl->object_id(o2);
    return res;
  }
  res.kl_to_lk = compose(b, *res.to_lk, *inv);
  if (!validate(b, *res.kl_to_lk).empty()) {
    res.witness = "induced comparison is not natural";
    return res;
  }
  res.passed = true;
  return res;
}

// ---------------------------------------------------------------------------
// Reports

struct CoendOptions {
  std::uint64_t seed = 0;
  std::size_t pointwise_samples = 100;
  std::size_t fubini_samples = 100;  // per (K, L) pair
  std::size_t end_samples = 30;
  RandomOptions random{};
};

namespace detail {
inline std::vector<CatPtr> outer_shapes() { return {terminal_category(), poset_chain(1), discrete(2)}; }

template <InstanceCategory B>
void hom_oracles(const KanEngine<B>& eng, bool co, CheckResult& r) {
  if constexpr (std::is_same_v<B, FinSetBase>) {
    auto e = terminal_category();
    auto one = poset_chain(1);
    auto h = hom_diagram(one);
    if (co) {
      auto n = coend(eng, e, one, e, h).value().at(0).size;
      r.expect_with(n == 2, [&] { return "coend of hom over [1] has " + std::to_string(n) + " elements, expected 2"; });
    } else {
      auto n = end(eng, e, one, e, h).value().at(0).size;
      r.expect_with(n == 1, [&] { return "end of hom over [1] has " + std::to_string(n) + " elements, expected 1"; });
    }
  }
}
}  // namespace detail

/// Oracle values and the pointwise property on random two-sided diagrams.
template <InstanceCategory B>
Report coend_report(const KanEngine<B>& eng, const std::vector<CatPtr>& shapes, const CoendOptions& opt = {}) {
  const auto& b = eng.base();
  Report rep;
  rep.command = "coend";
  rep.seed = opt.seed;
  rep.parameters.emplace_back("base", b.name());
  std::mt19937_64 rng(opt.seed);
  auto oracle = make_check("oracle", "coend of hom over [1] is a 2-element set");
  detail::hom_oracles(eng, true, oracle);
  if (oracle.cases == 0) rep.notes.push_back("hom oracle applies to finite sets only");
  else rep.checks.push_back(std::move(oracle));
  auto pw = make_check("pointwise", "coend of X(j,-,-,l) -> (coend of X)(j,l) is invertible");
  auto outer = detail::outer_shapes();
  for (std::size_t i = 0; i < opt.pointwise_samples; ++i) {
    auto J = outer[rng() % outer.size()], L = outer[rng() % outer.size()], K = shapes[rng() % shapes.size()];
    auto x = random_diagram(b, two_sided_shape(J, K, L), rng, opt.random);
    if (!x) continue;
    auto c = coend(eng, J, K, L, *x);
    auto o = pointwise_coend_failure(eng, c);
    pw.expect_with(o == npos, [&] {
      return "K=" + K->name() + ", J=" + J->name() + ", L=" + L->name() + " at " + c.shape.jl->object_id(o) +
             ": X=" + describe(b, *x);
    });
  }
  rep.checks.push_back(std::move(pw));
  return rep;
}

/// Oracle values, and ∫_K X ≅ Π_k X(k,k) over discrete K through the end's
/// projections.
template <InstanceCategory B>
Report end_report(const KanEngine<B>& eng, const std::vector<CatPtr>& shapes, const CoendOptions& opt = {}) {
  const auto& b = eng.base();
  Report rep;
  rep.command = "end";
  rep.seed = opt.seed;
  rep.parameters.emplace_back("base", b.name());
  std::mt19937_64 rng(opt.seed);
  auto oracle = make_check("oracle", "end of hom over [1] is a 1-element set; end of hom is Nat(id, id)");
  detail::hom_oracles(eng, false, oracle);
  if constexpr (std::is_same_v<B, FinSetBase>) {
    auto e = terminal_category();
    for (const auto& K : shapes) {
      auto n = end(eng, e, K, e, hom_diagram(K)).value().at(0).size;
      auto nat = enumerate_nat_trans(identity_functor(K), identity_functor(K)).size();
      oracle.expect_with(n == nat, [&] {
        return "end of hom over " + K->name() + " has " + std::to_string(n) + " elements, Nat(id,id) has " +
               std::to_string(nat);
      });
    }
  }
  if (oracle.cases == 0) rep.notes.push_back("hom oracle applies to finite sets only");
  else rep.checks.push_back(std::move(oracle));
  auto disc = make_check("discrete", "end over discrete K -> product of diagonal values is invertible");
  auto e = terminal_category();
  for (std::size_t i = 0; i < opt.end_samples; ++i) {
    auto K = discrete(1 + rng() % 3);
    auto x = random_diagram(b, two_sided_shape(e, K, e), rng, opt.random);
    if (!x) continue;
    auto en = end(eng, e, K, e, *x);
    bool ok = en.ran.counit.has_value();
    if (ok) {
      std::vector<typename B::Object> diag;
      std::vector<typename B::Morphism> legs;
      for (std::size_t k = 0; k < K->num_objects(); ++k) {
        auto o = x->shape->object_from_coords({0, k, k, 0});
        diag.push_back(x->at(o));
        legs.push_back(en.ran.counit->at(en.shape.indexing->object_from_coords({0, K->identity(k), 0})));
      }
      std::vector<typename B::Morphism> ids;
      for (const auto& d : diag) ids.push_back(b.identity(d));
      auto prod = b.limit(*K, diag, ids);
      auto m = b.factor_cone(prod, en.value().at(0), legs);
      ok = m && b.inverse(*m).has_value();
    }
    disc.expect_with(ok, [&] { return "K=" + K->name() + ", X=" + describe(b, *x); });
  }
  rep.checks.push_back(std::move(disc));
  return rep;
}

/// The three Fubini values connected by constructed comparisons, per pair
/// (K, L) of the given shapes.
template <InstanceCategory B>
Report fubini_report(const KanEngine<B>& eng, const std::vector<CatPtr>& kl_shapes, const CoendOptions& opt = {}) {
  const auto& b = eng.base();
  Report rep;
  rep.command = "fubini";
  rep.seed = opt.seed;
  rep.parameters.emplace_back("base", b.name());
  std::mt19937_64 rng(opt.seed);
  auto e = terminal_category();
  for (const auto& K : kl_shapes)
    for (const auto& L : kl_shapes) {
      auto fs = fubini_shapes(e, K, L, e);
      auto chk = make_check("fubini K=" + K->name() + ", L=" + L->name(),
                            "int^{KxL} -> int^K int^L and -> int^L int^K are invertible");
      for (std::size_t i = 0; i < opt.fubini_samples; ++i) {
        auto x = random_diagram(b, fs.single.full, rng, opt.random);
        if (!x) continue;
        auto r = fubini_check(eng, fs, *x);
        chk.expect_with(r.passed, [&] { return r.witness + ": X=" + describe(b, *x); });
      }
      rep.checks.push_back(std::move(chk));
    }
  return rep;
}

}  // namespace dlab
