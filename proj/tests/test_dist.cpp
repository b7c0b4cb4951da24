#include "doctest.h"

#include "dlab/dist.hpp"

using namespace dlab;

namespace {

std::vector<CatPtr> small_shapes() {
  std::vector<CatPtr> out;
  for (const auto& s : default_shape_family())
    if (s->num_objects() <= 3) out.push_back(s);
  return out;
}

}  // namespace

TEST_CASE("composition over e and over a discrete category") {
  KanEngine<FinSetBase> k{FinSetBase()};
  const auto& b = k.base();
  std::mt19937_64 rng(1);
  auto e = terminal_category(), one = poset_chain(1), d2 = discrete(2);
  for (int i = 0; i < 10; ++i) {
    auto x = random_distributor(b, one, e, rng, {3}), y = random_distributor(b, e, one, rng, {3});
    auto c = compose_dist(k, *x, *y);
    const auto& P = *c.value.payload.shape;
    for (std::size_t o = 0; o < P.num_objects(); ++o) {
      auto co = P.object_coords(o);
      CHECK(c.value.payload.at(o).size == x->payload.at(co[0]).size * y->payload.at(co[1]).size);
    }
    auto x2 = random_distributor(b, one, d2, rng, {3}), y2 = random_distributor(b, d2, one, rng, {3});
    auto c2 = compose_dist(k, *x2, *y2);
    CHECK(validate(b, c2.value.payload).empty());
    for (std::size_t o = 0; o < P.num_objects(); ++o) {
      auto co = P.object_coords(o);
      std::size_t sum = 0;
      for (std::size_t m = 0; m < 2; ++m)
        sum += x2->payload.at(x2->payload.shape->object_from_coords({co[0], m})).size *
               y2->payload.at(y2->payload.shape->object_from_coords({m, co[1]})).size;
      CHECK(c2.value.payload.at(o).size == sum);
    }
  }
}

TEST_CASE("unit distributor of [1] is the hom table") {
  FinSetBase b;
  auto one = poset_chain(1);
  auto u = unit_distributor(b, one);
  CHECK(validate(b, u.payload).empty());
  const auto& P = *u.payload.shape;
  CHECK(u.payload.at(P.object_from_coords({0, 0})).size == 1);
  CHECK(u.payload.at(P.object_from_coords({1, 0})).size == 1);  // hom(0, 1)
  CHECK(u.payload.at(P.object_from_coords({0, 1})).size == 0);  // hom(1, 0)
  CHECK(u.payload.at(P.object_from_coords({1, 1})).size == 1);
  auto ue = unit_distributor(b, terminal_category());
  CHECK(ue.payload.at(0) == b.unit());
  MatBase m(3);
  auto um = unit_distributor(m, builtin_shape("idem"));
  CHECK(um.payload.at(0).dim == 2);
  CHECK(validate(m, um.payload).empty());
}

TEST_CASE("hom o hom = hom over [1]") {
  KanEngine<FinSetBase> k{FinSetBase()};
  auto u = unit_distributor(k.base(), poset_chain(1));
  auto uu = compose_dist(k, u, u);
  for (std::size_t o = 0; o < 4; ++o) CHECK(uu.value.payload.at(o) == u.payload.at(o));
  auto m = right_unit_map(k, u, uu);
  REQUIRE(m);
  CHECK(first_non_iso(k.base(), *m) == npos);
}

TEST_CASE("unit laws") {
  std::mt19937_64 rng(3);
  auto sh = small_shapes();
  KanEngine<FinSetBase> k{FinSetBase()};
  KanEngine<MatBase> km{MatBase(2)};
  for (int i = 0; i < 10; ++i) {
    auto J = sh[rng() % sh.size()], K = sh[rng() % sh.size()];
    auto x = random_distributor(k.base(), J, K, rng);
    REQUIRE(x);
    CHECK_MESSAGE(unit_law_failure(k, *x).empty(), J->name() << " " << K->name());
    auto xm = random_distributor(km.base(), J, K, rng);
    REQUIRE(xm);
    CHECK_MESSAGE(unit_law_failure(km, *xm).empty(), J->name() << " " << K->name());
  }
}

TEST_CASE("associator") {
  std::mt19937_64 rng(5);
  auto sh = small_shapes();
  KanEngine<FinSetBase> k{FinSetBase()};
  KanEngine<MatBase> km{MatBase(2)};
  for (int i = 0; i < 8; ++i) {
    auto J = sh[rng() % sh.size()], K = sh[rng() % sh.size()], L = sh[rng() % sh.size()], M = sh[rng() % sh.size()];
    auto x = random_distributor(k.base(), J, K, rng), y = random_distributor(k.base(), K, L, rng);
    auto z = random_distributor(k.base(), L, M, rng);
    auto r = associator(k, *x, *y, *z);
    CHECK_MESSAGE(r.passed, r.witness);
    auto xm = random_distributor(km.base(), J, K, rng), ym = random_distributor(km.base(), K, L, rng);
    auto zm = random_distributor(km.base(), L, M, rng);
    auto rm = associator(km, *xm, *ym, *zm);
    CHECK_MESSAGE(rm.passed, rm.witness);
    REQUIRE(rm.left);
    for (std::size_t o = 0; o < rm.left->payload.objects.size(); ++o)
      CHECK(rm.left->payload.at(o) == rm.right->payload.at(o));
  }
}

TEST_CASE("trace") {
  KanEngine<FinSetBase> k{FinSetBase()};
  const auto& b = k.base();
  CHECK(trace(k, unit_distributor(b, poset_chain(1))).value.size == 2);
  std::mt19937_64 rng(7);
  auto e = terminal_category(), d3 = discrete(3);
  auto x = random_distributor(b, e, e, rng, {4});
  CHECK(trace(k, *x).value == x->payload.at(0));
  auto y = random_distributor(b, d3, d3, rng, {3});
  std::size_t diag = 0;
  for (std::size_t j = 0; j < 3; ++j) diag += y->payload.at(y->payload.shape->object_from_coords({j, j})).size;
  CHECK(trace(k, *y).value.size == diag);
}

TEST_CASE("trace is cyclic and monoidal") {
  std::mt19937_64 rng(9);
  auto sh = small_shapes();
  KanEngine<FinSetBase> k{FinSetBase()};
  KanEngine<MatBase> km{MatBase(2)};
  for (int i = 0; i < 10; ++i) {
    auto J = sh[rng() % sh.size()], K = sh[rng() % sh.size()];
    auto x = random_distributor(k.base(), J, K, rng), y = random_distributor(k.base(), K, J, rng);
    auto c = trace_cyclicity(k, *x, *y);
    CHECK_MESSAGE(c.passed, c.witness);
    auto xm = random_distributor(km.base(), J, K, rng), ym = random_distributor(km.base(), K, J, rng);
    auto cm = trace_cyclicity(km, *xm, *ym);
    CHECK_MESSAGE(cm.passed, cm.witness);
    auto z1 = random_distributor(km.base(), J, J, rng), z2 = random_distributor(km.base(), K, K, rng);
    auto mm = trace_monoidality(km, *z1, *z2);
    CHECK_MESSAGE(mm.passed, mm.witness);
    auto f1 = random_distributor(k.base(), J, J, rng), f2 = random_distributor(k.base(), K, K, rng);
    auto mf = trace_monoidality(k, *f1, *f2);
    CHECK_MESSAGE(mf.passed, mf.witness);
  }
}

TEST_CASE("tensor of units is the unit of the product") {
  FinSetBase b;
  auto one = poset_chain(1), span = builtin_shape("span");
  auto t = tensor_dist(b, unit_distributor(b, one), unit_distributor(b, span));
  auto u = unit_distributor(b, pair_shape(one, span));
  CHECK(validate(b, t.payload).empty());
  REQUIRE(same_category(t.payload.shape, u.payload.shape));
  CHECK(t.payload.objects == u.payload.objects);
}

TEST_CASE("weighted colimits and limits") {
  std::mt19937_64 rng(11);
  KanEngine<FinSetBase> k{FinSetBase()};
  KanEngine<MatBase> km{MatBase(2)};
  for (const auto& K : small_shapes()) {
    auto x = random_diagram(k.base(), K, rng);
    auto c = unit_weighted_colimit_comparison(k, *x);
    REQUIRE(c);
    CHECK(k.base().inverse(*c));
    auto l = unit_weighted_limit_comparison(k, *x);
    REQUIRE(l);
    CHECK(k.base().inverse(*l));
    auto xm = random_diagram(km.base(), K, rng);
    auto cm = unit_weighted_colimit_comparison(km, *xm);
    REQUIRE(cm);
    CHECK(km.base().inverse(*cm));
    auto lm = unit_weighted_limit_comparison(km, *xm);
    REQUIRE(lm);
    CHECK(km.base().inverse(*lm));
    for (std::size_t o = 0; o < K->num_objects(); ++o) {
      auto y = coyoneda_comparison(k, *x, o);
      REQUIRE(y);
      CHECK(k.base().inverse(*y));
      auto ym = coyoneda_comparison(km, *xm, o);
      REQUIRE(ym);
      CHECK(km.base().inverse(*ym));
      auto yy = yoneda_comparison(km, *xm, o);
      REQUIRE(yy);
      CHECK(km.base().inverse(*yy));
    }
  }
}

TEST_CASE("weighted (co)limits over a discrete category") {
  std::mt19937_64 rng(13);
  KanEngine<MatBase> km{MatBase(3)};
  auto d3 = discrete(3);
  auto w = random_diagram(km.base(), opposite(d3), rng, {2});
  auto x = random_diagram(km.base(), d3, rng, {2});
  std::size_t sum = 0, prod = 0;
  for (std::size_t o = 0; o < 3; ++o) {
    sum += w->at(o).dim * x->at(o).dim;
    prod += w->at(o).dim * x->at(o).dim;  // dim [W(k), X(k)]
  }
  CHECK(weighted_colimit(km, *w, *x).value.dim == sum);
  Diagram<MatBase> wc{d3, w->objects, w->morphisms};
  CHECK(weighted_limit(km, wc, *x).dim == prod);
}

TEST_CASE("weighted colimit adjunction") {
  std::mt19937_64 rng(17);
  KanEngine<FinSetBase> k{FinSetBase()};
  for (const auto& K : small_shapes()) {
    auto w = random_diagram(k.base(), opposite(K), rng);
    auto x = random_diagram(k.base(), K, rng);
    auto f = weighted_adjunction_failure(k, *w, *x, FinSet{2});
    CHECK_MESSAGE(f.empty(), K->name() << ": " << f);
  }
}
