#include "doctest.h"

#include "dlab/monoidal.hpp"

using namespace dlab;

namespace {

Diagram<FinSetBase> arrow(std::size_t s, std::size_t t, std::vector<std::size_t> f) {
  auto one = poset_chain(1);
  FinSetBase b;
  Diagram<FinSetBase> d{one, {{s}, {t}}, std::vector<FinMap>(3)};
  d.morphisms[one->find_morphism("id0")] = b.identity({s});
  d.morphisms[one->find_morphism("id1")] = b.identity({t});
  d.morphisms[one->find_morphism("a")] = FinMap{s, t, std::move(f)};
  return d;
}

Diagram<FinSetBase> point_set(std::size_t n) {
  return {terminal_category(), {{n}}, {FinSetBase().identity({n})}};
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST_CASE("external tensor multiplies sizes entrywise") {
  FinSetBase b;
  auto x = arrow(2, 3, {0, 2}), y = arrow(1, 2, {1});
  auto t = external_tensor(b, x, y);
  CHECK(validate(b, t).empty());
  const auto& P = *t.shape;
  for (std::size_t o = 0; o < P.num_objects(); ++o) {
    auto c = P.object_coords(o);
    CHECK(t.at(o).size == x.at(c[0]).size * y.at(c[1]).size);
  }
  MatBase m(2);
  std::mt19937_64 rng(1);
  auto one = poset_chain(1);
  auto mx = random_diagram(m, one, rng, {3}), my = random_diagram(m, one, rng, {3});
  auto mt = external_tensor(m, *mx, *my);
  CHECK(validate(m, mt).empty());
  for (std::size_t o = 0; o < 4; ++o) {
    auto c = mt.shape->object_coords(o);
    CHECK(mt.at(o).dim == mx->at(c[0]).dim * my->at(c[1]).dim);
  }
}

TEST_CASE("internalization") {
  FinSetBase b;
  auto l = internalize(represented_tensor(b));
  auto x = arrow(2, 3, {0, 2}), y = arrow(1, 2, {1});
  auto p = l.apply(x, y);
  CHECK(p.at(0).size == 2);
  CHECK(p.at(1).size == 6);
  CHECK(p == pointwise_tensor(b).apply(x, y));
  CHECK(l.apply(point_set(2), point_set(3)).at(0).size == 6);
}

TEST_CASE("l o r is the identity on the shape family") {
  std::mt19937_64 rng(3);
  MatBase m(3);
  for (const auto& F : {pointwise_tensor(m), pointwise_coproduct(m)})
    for (const auto& J : default_shape_family()) {
      auto x = random_diagram(m, J, rng), y = random_diagram(m, J, rng);
      REQUIRE(x);
      REQUIRE(y);
      CHECK(lr_identity(F, identity_map(m, *x), identity_map(m, *y)));
      CHECK(externalize(F).apply(*x, *y).shape->num_objects() == J->num_objects() * J->num_objects());
    }
}

TEST_CASE("division over e is the internal hom") {
  KanEngine<FinSetBase> k{FinSetBase()};
  auto e = terminal_category();
  Diagram<FinSetBase> z{pair_shape(e, e), {{3}}, {FinSetBase().identity({3})}};
  auto d = division(k, point_set(2), z);
  CHECK(d.value.at(0).size == 9);
}

TEST_CASE("division over [1] is the set of natural transformations") {
  KanEngine<FinSetBase> k{FinSetBase()};
  auto one = poset_chain(1), e = terminal_category();
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    auto x = random_diagram(k.base(), one, rng, {3});
    auto z1 = random_diagram(k.base(), one, rng, {3});
    REQUIRE(x);
    REQUIRE(z1);
    auto z = restrict(projection(pair_shape(one, e), 0), *z1);
    auto d = division(k, *x, z);
    CHECK(d.value.at(0).size == enumerate_maps(k.base(), *x, *z1).size());
  }
  KanEngine<MatBase> km{MatBase(2)};
  for (int i = 0; i < 20; ++i) {
    auto x = random_diagram(km.base(), one, rng, {2});
    auto z1 = random_diagram(km.base(), one, rng, {2});
    REQUIRE(x);
    REQUIRE(z1);
    auto d = division(km, *x, restrict(projection(pair_shape(one, e), 0), *z1));
    CHECK(ipow(2, d.value.at(0).dim) == enumerate_maps(km.base(), *x, *z1).size());
  }
}

TEST_CASE("the exponential law over e") {
  KanEngine<FinSetBase> k{FinSetBase()};
  auto e = terminal_category();
  auto z = Diagram<FinSetBase>{pair_shape(e, e), {{2}}, {FinSetBase().identity({2})}};
  auto r = adjunction_check(k, point_set(2), point_set(3), z);
  CHECK(r.passed);
  CHECK(r.lhs == 64);
  CHECK(r.rhs == 64);
}

TEST_CASE("adjunction round trips on random inputs") {
  std::mt19937_64 rng(7);
  auto one = poset_chain(1), e = terminal_category();
  KanEngine<FinSetBase> k{FinSetBase()};
  KanEngine<MatBase> km{MatBase(2)};
  for (int i = 0; i < 10; ++i) {
    auto J2 = i % 2 ? one : e;
    auto x = random_diagram(k.base(), one, rng), y = random_diagram(k.base(), J2, rng);
    auto z = random_diagram(k.base(), pair_shape(one, J2), rng);
    REQUIRE(z);
    auto r = adjunction_check(k, *x, *y, *z);
    CHECK_MESSAGE(r.passed, r.witness);
    auto mx = random_diagram(km.base(), one, rng), my = random_diagram(km.base(), J2, rng);
    auto mz = random_diagram(km.base(), pair_shape(one, J2), rng);
    auto rm = adjunction_check(km, *mx, *my, *mz);
    CHECK_MESSAGE(rm.passed, rm.witness);
  }
}

TEST_CASE("evaluation at an object need not be invertible") {
  auto p = evaluation_gap_preset();
  auto g = evaluation_gap_witness(p.x, p.z, p.k);
  CHECK(g.nat == 2);
  CHECK(g.hom == 1);
  CHECK_FALSE(g.injective);
  CHECK_FALSE(g.iso());
  auto id = evaluation_gap_witness(point_set(2), point_set(3), 0);
  CHECK(id.iso());
  auto both = evaluation_gap_witness(arrow(0, 1, {}), arrow(1, 1, {0}), 0);
  CHECK(both.nat == 1);
  CHECK(both.hom == 1);
  CHECK(both.iso());
}

TEST_CASE("second variable structure maps") {
  auto one = poset_chain(1), e = terminal_category();
  std::mt19937_64 rng(11);
  KanEngine<FinSetBase> k{FinSetBase()};
  auto u0 = point(one, 0);
  for (int i = 0; i < 10; ++i) {
    auto x = random_diagram(k.base(), one, rng), y = random_diagram(k.base(), e, rng);
    auto z = random_diagram(k.base(), pair_shape(one, one), rng);
    auto r = second_variable_structure_check(k, u0, *x, *y, *z);
    CHECK(r.hom_iso);
    CHECK(r.mate_iso);
  }
  KanEngine<MatBase> km{MatBase(2)};
  auto p = collapse(one);
  for (int i = 0; i < 10; ++i) {
    auto x = random_diagram(km.base(), one, rng), y = random_diagram(km.base(), one, rng);
    auto z = random_diagram(km.base(), pair_shape(one, e), rng);
    auto r = second_variable_structure_check(km, p, *x, *y, *z);
    CHECK(r.hom_iso);
    CHECK(r.mate_iso);
  }
  auto x = random_diagram(km.base(), one, rng);
  auto z = random_diagram(km.base(), pair_shape(one, one), rng);
  auto g = hom_second_variable_map(km, identity_functor(one), *x, *z);
  REQUIRE(g);
  CHECK(equal_maps(*g, identity_map(km.base(), g->source)));
}

TEST_CASE("reports pass") {
  KanEngine<FinSetBase> k{FinSetBase()};
  auto r1 = bimorphism_report(k, default_shape_family(), {.seed = 1});
  for (const auto& c : r1.checks) CHECK_MESSAGE(c.passed, c.name << ": " << (c.witnesses.empty() ? "" : c.witnesses[0]));
  auto r2 = adjunction_report(k, {.seed = 2});
  for (const auto& c : r2.checks) CHECK_MESSAGE(c.passed, c.name << ": " << (c.witnesses.empty() ? "" : c.witnesses[0]));
  KanEngine<MatBase> km{MatBase(2)};
  auto r3 = adjunction_report(km, {.seed = 3});
  for (const auto& c : r3.checks) CHECK_MESSAGE(c.passed, c.name << ": " << (c.witnesses.empty() ? "" : c.witnesses[0]));
}

TEST_CASE("evaluation-gap report") {
  auto r = eval_gap_report(evaluation_gap_preset(), true);
  CHECK(r.passed());
  CHECK(r.notes.at(0).find("2 elements") != std::string::npos);
  // over e, evaluation is the identity on hom
  auto e = terminal_category();
  Diagram<FinSetBase> one{e, {FinSet{2}}, {FinMap{2, 2, {0, 1}}}};
  CHECK(eval_gap_report({one, one, 0}, false).passed());
  CHECK_FALSE(eval_gap_report(evaluation_gap_preset(), false).passed());
}
