#include "doctest.h"

#include "dlab/kan.hpp"

using namespace dlab;

namespace {

Diagram<FinSetBase> arrow_diagram(std::size_t a, std::size_t b, std::vector<std::size_t> f) {
  FinSetBase base;
  auto one = poset_chain(1);
  Diagram<FinSetBase> d{one, {{a}, {b}}, std::vector<FinMap>(3)};
  d.morphisms[one->find_morphism("id0")] = base.identity({a});
  d.morphisms[one->find_morphism("id1")] = base.identity({b});
  d.morphisms[one->find_morphism("a")] = FinMap{a, b, std::move(f)};
  return d;
}

}  // namespace

TEST_CASE("restriction") {
  FinSetBase b;
  auto x = arrow_diagram(2, 1, {0, 0});
  CHECK(validate(b, x).empty());
  CHECK(restrict(identity_functor(x.shape), x) == x);
  auto r = restrict(point(x.shape, 0), x);
  CHECK(r.at(0) == FinSet{2});
  auto c = restrict(collapse(x.shape), Diagram<FinSetBase>{terminal_category(), {{3}}, {b.identity({3})}});
  CHECK(c.at(0) == FinSet{3});
  CHECK(c.at(1) == FinSet{3});
}

TEST_CASE("extension by zero and by the terminal object") {
  auto one = poset_chain(1);
  auto e = terminal_category();
  auto at1 = point(one, 1);
  KanEngine<MatBase> mat{MatBase(2)};
  Diagram<MatBase> x{e, {{3}}, {Matrix::identity(3, 2)}};
  auto l = mat.lan(at1, x);
  CHECK(l.value.at(0).dim == 0);
  CHECK(l.value.at(1).dim == 3);
  CHECK(validate(mat.base(), l.value).empty());
  REQUIRE(l.unit);
  CHECK(validate(mat.base(), *l.unit).empty());

  KanEngine<FinSetBase> fs{FinSetBase()};
  Diagram<FinSetBase> y{e, {{2}}, {FinSetBase().identity({2})}};
  // (0/u) is nonempty for u = 1, so the right extension along 1 repeats the value;
  // along 0 it is the terminal object at 1.
  auto r = fs.ran(at1, y);
  CHECK(r.value.at(0).size == 2);
  CHECK(r.value.at(1).size == 2);
  auto r0 = fs.ran(point(one, 0), y);
  CHECK(r0.value.at(0).size == 2);
  CHECK(r0.value.at(1).size == 1);
}

TEST_CASE("extension along the collapse is the (co)limit") {
  KanEngine<FinSetBase> k{FinSetBase()};
  auto x = arrow_diagram(3, 2, {0, 1, 1});
  auto p = collapse(x.shape);
  CHECK(k.lan(p, x).value.at(0).size == 2);
  CHECK(k.ran(p, x).value.at(0).size == 3);
  auto span = builtin_shape("span");
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    auto d = random_diagram(k.base(), span, rng, {3});
    REQUIRE(d);
    auto c = k.base().colimit(*span, d->objects, d->morphisms);
    CHECK(k.lan(collapse(span), *d).value.at(0) == c.apex);
  }
}

TEST_CASE("extension along the identity is the identity up to the unit") {
  KanEngine<MatBase> k{MatBase(3)};
  std::mt19937_64 rng(1);
  for (const auto& shape : default_shape_family()) {
    auto x = random_diagram(k.base(), shape, rng);
    REQUIRE(x);
    auto l = k.lan(identity_functor(shape), *x);
    REQUIRE(l.unit);
    CHECK(first_non_iso(k.base(), *l.unit) == npos);
    auto r = k.ran(identity_functor(shape), *x);
    REQUIRE(r.counit);
    CHECK(first_non_iso(k.base(), *r.counit) == npos);
  }
}

TEST_CASE("triangle identities") {
  KanEngine<FinSetBase> k{FinSetBase()};
  const auto& b = k.base();
  std::mt19937_64 rng(3);
  auto fam = default_shape_family();
  for (const auto& J : {fam[1], fam[4], fam[8]})
    for (const auto& K : {fam[1], fam[2], fam[5]})
      for (const auto& u : enumerate_functors(J, K)) {
        auto x = random_diagram(b, J, rng);
        auto y = random_diagram(b, K, rng);
        REQUIRE(x);
        REQUIRE(y);
        // ε_{u_!X} ∘ u_!(η_X) = id
        auto lx = k.lan(u, *x);
        auto l2 = k.lan(u, restrict(u, lx.value));
        auto eta_bang = k.lan_map(lx, l2, *lx.unit);
        auto eps = k.lan_counit(l2, lx.value);
        REQUIRE(eta_bang);
        REQUIRE(eps);
        CHECK(equal_maps(compose(b, *eps, *eta_bang), identity_map(b, lx.value)));
        // u*ε_Y ∘ η_{u*Y} = id
        auto ly = k.lan(u, restrict(u, *y));
        auto eps_y = k.lan_counit(ly, *y);
        REQUIRE(eps_y);
        CHECK(equal_maps(compose(b, restrict(u, *eps_y), *ly.unit), identity_map(b, restrict(u, *y))));
        // ran versions
        auto ry = k.ran(u, restrict(u, *y));
        auto eta_y = k.ran_unit(ry, *y);
        REQUIRE(eta_y);
        CHECK(equal_maps(compose(b, *ry.counit, restrict(u, *eta_y)), identity_map(b, restrict(u, *y))));
      }
}

TEST_CASE("Beck-Chevalley for comma squares") {
  KanEngine<FinSetBase> k{FinSetBase()};
  auto one = poset_chain(1);
  std::mt19937_64 rng(11);
  auto at0 = point(one, 0);
  for (int i = 0; i < 10; ++i) {
    auto x = random_diagram(k.base(), terminal_category(), rng, {3});
    for (std::size_t b = 0; b < 2; ++b) {
      auto s = comma_square(at0, b);
      check_square(s, true);
      auto m = k.left_mate(s, *x);
      REQUIRE(m);
      CHECK(first_non_iso(k.base(), *m) == npos);
      auto c = coslice_square(at0, b);
      check_square(c, false);
      auto rm = k.right_mate(c, *x);
      REQUIRE(rm);
      CHECK(first_non_iso(k.base(), *rm) == npos);
    }
  }
}

TEST_CASE("identity square gives the identity mate") {
  KanEngine<FinSetBase> k{FinSetBase()};
  auto x = arrow_diagram(2, 3, {0, 2});
  auto id = identity_functor(x.shape);
  Square s{id, id, id, id, {id, id, {}}, "identity"};
  for (std::size_t o = 0; o < 2; ++o) s.alpha.components.push_back(x.shape->identity(o));
  auto m = k.left_mate(s, x);
  REQUIRE(m);
  CHECK(m->components[0] == k.base().identity({2}));
  CHECK(m->components[1] == k.base().identity({3}));
}

TEST_CASE("a non-exact square has a non-invertible mate") {
  // [1] = [1] over [1] -> e: the mate is X -> const(colim X).
  KanEngine<FinSetBase> k{FinSetBase()};
  auto x = arrow_diagram(1, 2, {0});
  auto one = x.shape;
  auto id = identity_functor(one), c = collapse(one);
  auto e = terminal_category();
  Square s{id, id, c, c, {c, c, {e->identity(0), e->identity(0)}}, "non-exact"};
  check_square(s, true);
  auto m = k.left_mate(s, x);
  REQUIRE(m);
  CHECK(first_non_iso(k.base(), *m) == 0);
}

TEST_CASE("the lan-from-ran engine cannot transpose") {
  KanEngine<FinSetBase> k{FinSetBase(), KanWiring::LanFromRan};
  auto x = arrow_diagram(2, 1, {0, 0});
  auto s = comma_square(identity_functor(x.shape), 1);
  CHECK_FALSE(k.left_mate(s, x));
}
