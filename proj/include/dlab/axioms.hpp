#pragma once

// The derivator axioms Der1–Der4 for a represented derivator y(C), checked
// over a finite family of shapes.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "dlab/kan.hpp"
#include "dlab/report.hpp"

namespace dlab {

struct AxiomOptions {
  std::uint64_t seed = 0;
  std::size_t der1_samples = 2;
  std::size_t der2_samples = 5;
  std::size_t der3_samples = 1;
  std::size_t der4_samples = 2;
  RandomOptions random{};
};

/// Reassembles a diagram on J ⊔ K from its two restrictions.
template <InstanceCategory B>
Diagram<B> glue(const Coproduct& cp, const Diagram<B>& x1, const Diagram<B>& x2) {
  const auto& C = *cp.category;
  Diagram<B> d{cp.category, std::vector<typename B::Object>(C.num_objects()),
               std::vector<typename B::Morphism>(C.num_morphisms())};
  for (std::size_t o = 0; o < x1.objects.size(); ++o) d.objects[cp.first.obj(o)] = x1.at(o);
  for (std::size_t o = 0; o < x2.objects.size(); ++o) d.objects[cp.second.obj(o)] = x2.at(o);
  for (std::size_t m = 0; m < x1.morphisms.size(); ++m) d.morphisms[cp.first.mor(m)] = x1.map(m);
  for (std::size_t m = 0; m < x2.morphisms.size(); ++m) d.morphisms[cp.second.mor(m)] = x2.map(m);
  return d;
}

template <InstanceCategory B>
DiagramMap<B> glue(const Coproduct& cp, const DiagramMap<B>& f1, const DiagramMap<B>& f2) {
  DiagramMap<B> f{glue(cp, f1.source, f2.source), glue(cp, f1.target, f2.target),
                  std::vector<typename B::Morphism>(cp.category->num_objects())};
  for (std::size_t o = 0; o < f1.components.size(); ++o) f.components[cp.first.obj(o)] = f1.at(o);
  for (std::size_t o = 0; o < f2.components.size(); ++o) f.components[cp.second.obj(o)] = f2.at(o);
  return f;
}

namespace detail {

template <InstanceCategory B>
std::optional<typename B::Morphism> random_automorphism(const B& b, const typename B::Object& x, std::mt19937_64& rng) {
  for (int i = 0; i < 100; ++i) {
    auto f = b.random_morphism(x, x, rng);
    if (f && b.inverse(*f)) return f;
  }
  return b.identity(x);
}

/// Y isomorphic to X, by conjugating with random automorphisms; returns X → Y.
template <InstanceCategory B>
DiagramMap<B> random_conjugate(const B& b, const Diagram<B>& x, std::mt19937_64& rng) {
  const auto& J = *x.shape;
  std::vector<typename B::Morphism> phi, inv;
  for (const auto& o : x.objects) {
    phi.push_back(*random_automorphism(b, o, rng));
    inv.push_back(*b.inverse(phi.back()));
  }
  Diagram<B> y{x.shape, x.objects, {}};
  for (std::size_t m = 0; m < J.num_morphisms(); ++m)
    y.morphisms.push_back(b.compose(phi[J.target(m)], b.compose(x.map(m), inv[J.source(m)])));
  return {x, y, phi};
}

}  // namespace detail

template <InstanceCategory B>
CheckResult check_der1(const KanEngine<B>& eng, const std::vector<CatPtr>& shapes, const AxiomOptions& opt,
                       std::mt19937_64& rng) {
  const auto& b = eng.base();
  CheckResult r{"Der1 (binary and empty coproducts)", true, 0,
                "C^(J+K) -> C^J x C^K by restriction, inverse by gluing; C^empty is terminal", {}};
  auto empty = empty_category();
  Diagram<B> none{empty, {}, {}};
  r.expect(validate(b, none).empty() && enumerate_maps(b, none, none).size() == 1,
           "C^empty does not have exactly one object with one endomorphism");
  for (const auto& J : shapes)
    for (const auto& K : shapes) {
      auto cp = coproduct(J, K);
      for (std::size_t s = 0; s < opt.der1_samples; ++s) {
        auto x = random_diagram(b, cp.category, rng, opt.random);
        auto x1 = random_diagram(b, J, rng, opt.random);
        auto x2 = random_diagram(b, K, rng, opt.random);
        if (!x || !x1 || !x2) continue;
        std::string w = J->name() + " + " + K->name();
        r.expect(glue(cp, restrict(cp.first, *x), restrict(cp.second, *x)) == *x, "glue . restrict != id on " + w);
        auto g = glue(cp, *x1, *x2);
        r.expect(validate(b, g).empty() && restrict(cp.first, g) == *x1 && restrict(cp.second, g) == *x2,
                 "restrict . glue != id on " + w);
        // on morphisms
        auto f1 = detail::random_conjugate(b, *x1, rng);
        auto f2 = detail::random_conjugate(b, *x2, rng);
        auto gf = glue(cp, f1, f2);
        r.expect(validate(b, gf).empty() && equal_maps(restrict(cp.first, gf), f1) &&
                     equal_maps(restrict(cp.second, gf), f2),
                 "gluing of maps is not inverse to restriction on " + w);
      }
    }
  return r;
}

template <InstanceCategory B>
CheckResult check_der2(const KanEngine<B>& eng, const std::vector<CatPtr>& shapes, const AxiomOptions& opt,
                       std::mt19937_64& rng) {
  const auto& b = eng.base();
  CheckResult r{"Der2 (isomorphisms are pointwise)", true, 0,
                "a map is invertible in C^J iff each component is invertible", {}};
  constexpr std::size_t kMaxMaps = 200;
  RandomOptions small = opt.random;
  small.max_size = std::min<std::size_t>(small.max_size, 2);
  for (const auto& J : shapes)
    for (std::size_t s = 0; s < opt.der2_samples; ++s) {
      auto x = random_diagram(b, J, rng, small);
      if (!x) continue;
      auto conj = detail::random_conjugate(b, *x, rng);
      auto y = random_diagram(b, J, rng, small);
      std::vector<DiagramMap<B>> maps{conj};
      if (y) {
        auto more = enumerate_maps(b, *x, *y, kMaxMaps);
        maps.insert(maps.end(), more.begin(), more.end());
      }
      for (const auto& f : maps) {
        bool pointwise = first_non_iso(b, f) == npos;
        bool iso = false;
        if (pointwise) {
          auto g = inverse(b, f);
          iso = g && validate(b, *g).empty() && equal_maps(compose(b, *g, f), identity_map(b, f.source)) &&
                equal_maps(compose(b, f, *g), identity_map(b, f.target));
        } else {
          for (const auto& g : enumerate_maps(b, f.target, f.source, kMaxMaps))
            if (equal_maps(compose(b, g, f), identity_map(b, f.source)) &&
                equal_maps(compose(b, f, g), identity_map(b, f.target))) {
              iso = true;
              break;
            }
        }
        r.expect_with(iso == pointwise, [&] {
          return "on " + J->name() + ": pointwise " + (pointwise ? "iso" : "non-iso") + " but " +
                 (iso ? "iso" : "not iso") + " in C^J; X=" + describe(b, f.source);
        });
      }
    }
  return r;
}

template <InstanceCategory B>
CheckResult check_der3(const KanEngine<B>& eng, const std::vector<CatPtr>& shapes, const AxiomOptions& opt,
                       std::mt19937_64& rng) {
  const auto& b = eng.base();
  CheckResult r{"Der3 (Kan extensions with triangle identities)", true, 0,
                "(u_!, u*) and (u*, u_*) satisfy both triangle identities for every functor in the family", {}};
  for (const auto& J : shapes)
    for (const auto& K : shapes)
      for (const auto& u : enumerate_functors(J, K))
        for (std::size_t s = 0; s < opt.der3_samples; ++s) {
          try {
            auto x = random_diagram(b, J, rng, opt.random);
            auto y = random_diagram(b, K, rng, opt.random);
            if (!x || !y) continue;
            auto w = [&](const std::string& what) { return what + ": u=" + describe(u) + ", X=" + describe(b, *x); };
            auto uy = restrict(u, *y);
            // ε_{u_!X} ∘ u_!(η_X) = id
            auto lx = eng.lan(u, *x);
            auto l2 = eng.lan(u, restrict(u, lx.value));
            std::optional<DiagramMap<B>> eta_bang, eps;
            if (lx.unit) eta_bang = eng.lan_map(lx, l2, *lx.unit);
            eps = eng.lan_counit(l2, lx.value);
            r.expect_with(eta_bang && eps && equal_maps(compose(b, *eps, *eta_bang), identity_map(b, lx.value)), [&] { return w("left triangle for u_! -| u* fails"); });
            // u*ε_Y ∘ η_{u*Y} = id
            auto ly = eng.lan(u, uy);
            auto eps_y = eng.lan_counit(ly, *y);
            r.expect_with(ly.unit && eps_y && equal_maps(compose(b, restrict(u, *eps_y), *ly.unit), identity_map(b, uy)), [&] { return w("right triangle for u_! -| u* fails"); });
            // u_*(ε_X) ∘ η_{u_*X} = id
            auto rx = eng.ran(u, *x);
            auto r2 = eng.ran(u, restrict(u, rx.value));
            auto eta_r = eng.ran_unit(r2, rx.value);
            std::optional<DiagramMap<B>> eps_star;
            if (rx.counit) eps_star = eng.ran_map(r2, rx, *rx.counit);
            r.expect_with(eta_r && eps_star && equal_maps(compose(b, *eps_star, *eta_r), identity_map(b, rx.value)), [&] { return w("left triangle for u* -| u_* fails"); });
            // ε_{u*Y} ∘ u*(η_Y) = id
            auto ry = eng.ran(u, uy);
            auto eta_y = eng.ran_unit(ry, *y);
            r.expect_with(ry.counit && eta_y && equal_maps(compose(b, *ry.counit, restrict(u, *eta_y)), identity_map(b, uy)), [&] { return w("right triangle for u* -| u_* fails"); });
          } catch (const std::length_error&) {
            ++r.skipped;
          } catch (const std::exception& ex) {
            r.expect(false, std::string("triangle identities raised: ") + ex.what() + ": u=" + describe(u));
          }
        }
  return r;
}

template <InstanceCategory B>
CheckResult check_der4(const KanEngine<B>& eng, const std::vector<CatPtr>& shapes, const AxiomOptions& opt,
                       std::mt19937_64& rng) {
  const auto& b = eng.base();
  CheckResult r{"Der4 (base change for comma squares)", true, 0,
                "left mates of (u/k) squares and right mates of (k/u) squares are invertible", {}};
  for (const auto& J : shapes)
    for (const auto& K : shapes)
      for (const auto& u : enumerate_functors(J, K))
        for (std::size_t s = 0; s < opt.der4_samples; ++s) {
          try {
            auto x = random_diagram(b, J, rng, opt.random);
            if (!x) continue;
            auto lq = eng.lan(u, *x);
            auto rq = eng.ran(u, *x);
            for (std::size_t k = 0; k < K->num_objects(); ++k) {
              auto w = [&](const std::string& what) {
                return what + ": u=" + describe(u) + ", k=" + K->object_id(k) + ", X=" + describe(b, *x);
              };
              auto m = eng.left_mate(comma_square(u, k), lq);
              if (!m) r.expect_with(false, [&] { return w("left mate cannot be formed"); });
              else r.expect_with(first_non_iso(b, *m) == npos, [&] { return w("left mate not invertible"); });
              auto rm = eng.right_mate(coslice_square(u, k), rq);
              if (!rm) r.expect_with(false, [&] { return w("right mate cannot be formed"); });
              else r.expect_with(first_non_iso(b, *rm) == npos, [&] { return w("right mate not invertible"); });
            }
          } catch (const std::length_error&) {
            ++r.skipped;
          } catch (const std::exception& ex) {
            r.expect(false, std::string("base change raised: ") + ex.what() + ": u=" + describe(u));
          }
        }
  return r;
}

template <InstanceCategory B>
Report axioms_report(const KanEngine<B>& eng, const std::vector<CatPtr>& shapes, const AxiomOptions& opt = {}) {
  Report rep;
  rep.command = "check-axioms";
  rep.seed = opt.seed;
  rep.parameters.emplace_back("base", eng.base().name());
  std::string names;
  for (const auto& s : shapes) names += (names.empty() ? "" : ",") + s->name();
  rep.parameters.emplace_back("shapes", names);
  if (eng.wiring() == KanWiring::LanFromRan) rep.parameters.emplace_back("engine", "lan-from-ran (corrupted)");
  std::mt19937_64 rng(opt.seed);
  rep.checks.push_back(check_der1(eng, shapes, opt, rng));
  rep.checks.push_back(check_der2(eng, shapes, opt, rng));
  rep.checks.push_back(check_der3(eng, shapes, opt, rng));
  rep.checks.push_back(check_der4(eng, shapes, opt, rng));
  rep.notes.push_back("Der1 is checked for binary and empty coproducts of shapes only, not arbitrary small coproducts");
  return rep;
}

/// A single left or right Kan extension of a given diagram: well-formedness,
/// the pointwise (comma-square) comparison at every k, and the triangle
/// identities at X. The value itself is left to the caller to print.
template <InstanceCategory B>
Report kan_report(const KanEngine<B>& eng, const Functor& u, const Diagram<B>& x, bool left) {
  const auto& b = eng.base();
  Report rep;
  rep.command = left ? "kan lan" : "kan ran";
  rep.parameters.emplace_back("base", b.name());
  rep.parameters.emplace_back("u", describe(u));
  rep.parameters.emplace_back("X", describe(b, x));
  const auto& K = *u.target;
  auto wf = make_check("well-formed", left ? "u_!X is a diagram and the unit is natural"
                                           : "u_*X is a diagram and the counit is natural");
  auto pw = make_check("pointwise", left ? "colim over (u/k) -> (u_!X)(k) is invertible for every k"
                                         : "(u_*X)(k) -> lim over (k/u) is invertible for every k");
  auto tri = make_check("triangle identities", "both triangles of the adjunction hold at X");
  if (left) {
    auto l = eng.lan(u, x);
    wf.expect_with(validate(b, l.value).empty() && l.unit && validate(b, *l.unit).empty(),
                   [&] { return "value " + describe(b, l.value); });
    for (std::size_t k = 0; k < K.num_objects(); ++k) {
      auto m = eng.left_mate(comma_square(u, k), l);
      pw.expect_with(m && first_non_iso(b, *m) == npos, [&] { return "at k=" + K.object_id(k); });
    }
    auto l2 = eng.lan(u, restrict(u, l.value));
    std::optional<DiagramMap<B>> eta_bang;
    if (l.unit) eta_bang = eng.lan_map(l, l2, *l.unit);
    auto eps = eng.lan_counit(l2, l.value);
    tri.expect(eta_bang && eps && equal_maps(compose(b, *eps, *eta_bang), identity_map(b, l.value)),
               "counit after lan of the unit is not the identity");
  } else {
    auto r = eng.ran(u, x);
    wf.expect_with(validate(b, r.value).empty() && r.counit && validate(b, *r.counit).empty(),
                   [&] { return "value " + describe(b, r.value); });
    for (std::size_t k = 0; k < K.num_objects(); ++k) {
      auto m = eng.right_mate(coslice_square(u, k), r);
      pw.expect_with(m && first_non_iso(b, *m) == npos, [&] { return "at k=" + K.object_id(k); });
    }
    auto r2 = eng.ran(u, restrict(u, r.value));
    auto eta = eng.ran_unit(r2, r.value);
    std::optional<DiagramMap<B>> eps_star;
    if (r.counit) eps_star = eng.ran_map(r2, r, *r.counit);
    tri.expect(eta && eps_star && equal_maps(compose(b, *eps_star, *eta), identity_map(b, r.value)),
               "ran of the counit after the unit is not the identity");
  }
  for (auto* c : {&wf, &pw, &tri}) rep.checks.push_back(std::move(*c));
  return rep;
}

}  // namespace dlab
