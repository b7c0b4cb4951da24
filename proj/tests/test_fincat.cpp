#include "doctest.h"

#include <random>

#include "dlab/fincat.hpp"

using namespace dlab;

TEST_CASE("builtin shapes are valid categories") {
  for (const auto& c : default_shape_family()) {
    CHECK_MESSAGE(validate(*c).empty(), c->name());
  }
  CHECK(validate(*builtin_shape("[3]")).empty());
  CHECK(validate(*builtin_shape("pretriang_k")).empty());
  CHECK(default_shape_family().size() == 9);
}

TEST_CASE("chain [1] and square") {
  auto one = poset_chain(1);
  CHECK(one->num_objects() == 2);
  CHECK(one->num_morphisms() == 3);
  auto sq = builtin_shape("square");
  CHECK(sq->num_objects() == 4);
  CHECK(sq->num_morphisms() == 9);
  // the diagonal of the square has two factorizations
  auto p = product(one, one);
  auto& P = *p.category;
  std::size_t a = one->find_morphism("a"), i0 = one->find_morphism("id0"), i1 = one->find_morphism("id1");
  auto h = P.morphism_from_coords({a, i0});
  auto v = P.morphism_from_coords({i1, a});
  auto v2 = P.morphism_from_coords({i0, a});
  auto h2 = P.morphism_from_coords({a, i1});
  CHECK(P.compose(v, h) == P.compose(h2, v2));
  CHECK(P.compose(v, h) == P.morphism_from_coords({a, a}));
}

TEST_CASE("idem is a one-object monoid") {
  auto c = builtin_shape("idem");
  CHECK(c->num_objects() == 1);
  CHECK(c->num_morphisms() == 2);
  auto e = c->find_morphism("e");
  CHECK(c->compose(e, e) == e);
}

TEST_CASE("validation reports a broken table") {
  FinCategory::Builder b("bad");
  b.object("x").identity("x", "id").morphism("e", "x", "x").morphism("f", "x", "x");
  b.compose("e", "e", "f").compose("f", "f", "e").compose("e", "f", "e").compose("f", "e", "e");
  auto c = b.build_unchecked();
  auto vs = validate(c);
  CHECK_FALSE(vs.empty());
  bool assoc = false;
  for (auto& v : vs) assoc |= v.law.find("assoc") != std::string::npos;
  CHECK(assoc);
}

TEST_CASE("missing composite is named") {
  FinCategory::Builder b("holes");
  b.object("0").object("1").object("2");
  b.identity("0", "i0").identity("1", "i1").identity("2", "i2");
  b.morphism("f", "0", "1").morphism("g", "1", "2");
  try {
    b.build();
    FAIL("expected failure");
  } catch (const CategoryError& e) {
    std::string msg = e.what();
    CHECK(msg.find("g") != std::string::npos);
    CHECK(msg.find("f") != std::string::npos);
  }
}

TEST_CASE("opposite is an involution and products commute with it") {
  for (const auto& c : default_shape_family()) {
    auto oo = opposite(opposite(c));
    CHECK(*oo == *c);
    CHECK(validate(*opposite(c)).empty());
  }
  auto one = poset_chain(1);
  auto p = product(std::vector<CatPtr>{one, builtin_shape("span")});
  auto po = opposite(p);
  CHECK(po->is_product());
  CHECK(*po == *product(std::vector<CatPtr>{opposite(one), opposite(builtin_shape("span"))}));
}

TEST_CASE("twisted arrow category of [1]") {
  auto ta = twisted_arrow(poset_chain(1));
  const auto& A = *ta.category;
  CHECK(validate(A).empty());
  CHECK(A.num_objects() == 3);
  CHECK(A.num_morphisms() == 5);
  auto a = A.find_object("a"), id0 = A.find_object("id0"), id1 = A.find_object("id1");
  CHECK(A.hom(a, id0).size() == 1);
  CHECK(A.hom(a, id1).size() == 1);
  CHECK(A.hom(id0, a).empty());
  CHECK(validate(ta.projection).empty());
  CHECK(validate(ta.source).empty());
  CHECK(validate(ta.target).empty());
}

TEST_CASE("twisted arrow categories of the shape family are valid") {
  for (const auto& c : default_shape_family()) {
    auto ta = twisted_arrow(c);
    CHECK_MESSAGE(validate(*ta.category).empty(), c->name());
    CHECK(ta.category->num_objects() == c->num_morphisms());
  }
}

TEST_CASE("twisted arrow interchange is a functor") {
  auto k = poset_chain(1), l = discrete(2);
  auto ak = twisted_arrow(k), al = twisted_arrow(l);
  auto kl = product(std::vector<CatPtr>{k, l});
  auto akl = twisted_arrow(kl);
  auto prod = product(std::vector<CatPtr>{ak.category, al.category});
  auto f = twisted_arrow_interchange(ak, al, akl, prod);
  CHECK(validate(f).empty());
}

TEST_CASE("comma categories") {
  auto one = poset_chain(1);
  auto id = identity_functor(one);
  // (id / 1) has both objects; (id / 0) only 0
  CHECK(comma(id, 1).category->num_objects() == 2);
  CHECK(comma(id, 0).category->num_objects() == 1);
  CHECK(coslice(id, 0).category->num_objects() == 2);
  CHECK(coslice(id, 1).category->num_objects() == 1);
  auto cs = comma(collapse(one), 0);
  CHECK(*cs.category->objects().data() == "(0,id)");
  for (const auto& c : default_shape_family()) {
    auto idc = identity_functor(c);
    for (std::size_t k = 0; k < c->num_objects(); ++k) {
      CHECK(validate(*comma(idc, k).category).empty());
      CHECK(validate(comma(idc, k).projection).empty());
      CHECK(validate(*coslice(idc, k).category).empty());
    }
  }
}

TEST_CASE("natural transformations") {
  auto one = poset_chain(1);
  auto id = identity_functor(one);
  CHECK(enumerate_nat_trans(id, id).size() == 1);
  auto c0 = constant_functor(one, one, 0), c1 = constant_functor(one, one, 1);
  CHECK(enumerate_nat_trans(c0, id).size() == 1);
  CHECK(enumerate_nat_trans(id, c0).empty());
  CHECK(enumerate_nat_trans(id, c1).size() == 1);
  CHECK(enumerate_functors(one, one).size() == 3);
  CHECK(enumerate_functors(builtin_shape("idem"), builtin_shape("idem")).size() == 2);
}

TEST_CASE("coproduct and codiagonal") {
  auto one = poset_chain(1);
  auto cp = coproduct(one, one);
  CHECK(cp.category->num_objects() == 4);
  CHECK(validate(*cp.category).empty());
  auto fold = codiagonal(cp, one);
  CHECK(validate(fold).empty());
  CHECK(compose(fold, cp.first) == identity_functor(one));
  CHECK(compose(fold, cp.second) == identity_functor(one));
}

TEST_CASE("regrouping nested products") {
  auto a = poset_chain(1), b = discrete(2), c = builtin_shape("span");
  auto ab_c = product(std::vector<CatPtr>{product(std::vector<CatPtr>{a, b}), c});
  auto a_bc = product(std::vector<CatPtr>{a, product(std::vector<CatPtr>{b, c})});
  auto f = regroup(ab_c, a_bc);
  auto g = regroup(a_bc, ab_c);
  CHECK(validate(f).empty());
  CHECK(compose(g, f) == identity_functor(ab_c));
  auto ba = product(std::vector<CatPtr>{b, a});
  auto ab = product(std::vector<CatPtr>{a, b});
  auto sw = permute_leaves(ab, ba, {1, 0});
  CHECK(validate(sw).empty());
  CHECK(compose(permute_leaves(ba, ab, {1, 0}), sw) == identity_functor(ab));
}

TEST_CASE("large products compose through their factors") {
  auto two = poset_chain(2), idem = builtin_shape("idem");
  std::vector<CatPtr> fs{two, idem, two, opposite(idem)};
  auto big = product(fs);
  REQUIRE(big->num_morphisms() == 6 * 2 * 6 * 2);
  auto nested = product(product(two, idem).category, product(two, opposite(idem)).category);
  auto flat = regroup(nested.category, big);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    auto g = rng() % big->num_morphisms(), f = rng() % big->num_morphisms();
    auto cg = big->morphism_coords(g), cf = big->morphism_coords(f);
    bool composable = big->target(f) == big->source(g);
    if (!composable) {
      CHECK(big->table_entry(g, f) == -1);
      continue;
    }
    std::vector<std::size_t> h(4);
    for (std::size_t k = 0; k < 4; ++k) h[k] = fs[k]->compose(cg[k], cf[k]);
    CHECK(big->compose(g, f) == big->morphism_from_coords(h));
  }
  // 4 factors of [2] have 6^4 morphisms: no dense table, same answers
  auto huge = product(std::vector<CatPtr>{two, two, two, two});
  auto op = opposite(huge);
  CHECK(same_category(op, product(std::vector<CatPtr>{opposite(two), opposite(two), opposite(two), opposite(two)})));
  for (int i = 0; i < 2000; ++i) {
    auto g = rng() % huge->num_morphisms(), f = rng() % huge->num_morphisms();
    CHECK(op->table_entry(f, g) == huge->table_entry(g, f));
  }
  CHECK(validate(compose(flat, identity_functor(nested.category))).empty());
}
