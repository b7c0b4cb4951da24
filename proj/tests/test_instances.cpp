#include "doctest.h"

#include "dlab/instances.hpp"

using namespace dlab;

namespace {

FinMap fmap(std::size_t s, std::size_t t, std::vector<std::size_t> tab) { return {s, t, std::move(tab)}; }

}  // namespace

TEST_CASE("finset hom enumeration") {
  FinSetBase b;
  CHECK(b.hom({2}, {3}).size() == 9);
  CHECK(b.hom({0}, {0}).size() == 1);
  CHECK(b.hom({2}, {0}).empty());
  CHECK(b.hom({2}, {2})[1] == fmap(2, 2, {0, 1}));
}

TEST_CASE("finset coequalizer and pushout") {
  FinSetBase b;
  auto span = builtin_shape("span");
  // 1 <- 1 -> 1 pushout is a point
  std::vector<FinSet> objs{{1}, {2}, {2}};
  std::vector<FinMap> mors(span->num_morphisms());
  for (std::size_t m = 0; m < span->num_morphisms(); ++m) {
    auto s = span->source(m), t = span->target(m);
    if (span->is_identity(m)) mors[m] = b.identity(objs[s]);
    else mors[m] = fmap(objs[s].size, objs[t].size, {0});
  }
  auto c = b.colimit(*span, objs, mors);
  CHECK(c.apex.size == 3);
  auto l = b.limit(*span, objs, mors);
  CHECK(l.apex.size == 1);
  // factoring the identity cocone of the colimit through itself
  auto u = b.factor_cocone(c, c.apex, c.legs);
  REQUIRE(u);
  CHECK(*u == b.identity(c.apex));
  // a non-cocone fails
  auto bad = c.legs;
  bad[1] = fmap(2, 3, {1, 1});
  CHECK_FALSE(b.factor_cocone(c, c.apex, bad));
}

TEST_CASE("finset limit of idempotent is fixed points") {
  FinSetBase b;
  auto idem = builtin_shape("idem");
  std::vector<FinSet> objs{{3}};
  std::vector<FinMap> mors(2);
  mors[idem->find_morphism("id")] = b.identity({3});
  mors[idem->find_morphism("e")] = fmap(3, 3, {0, 0, 2});
  CHECK(b.limit(*idem, objs, mors).apex.size == 2);
  CHECK(b.colimit(*idem, objs, mors).apex.size == 2);
}

TEST_CASE("finset closed structure") {
  FinSetBase b;
  for (std::size_t x = 0; x <= 2; ++x)
    for (std::size_t y = 0; y <= 2; ++y)
      for (std::size_t z = 0; z <= 2; ++z) {
        for (const auto& f : b.hom({x * y}, {z})) {
          auto c = b.curry({x}, {y}, f);
          auto back = b.compose(b.evaluation({x}, {z}), b.tensor(b.identity({x}), c));
          CHECK(back == f);
        }
      }
  CHECK(b.internal_hom({0}, {0}).size == 1);
  CHECK(b.internal_hom({2}, {3}).size == 9);
}

TEST_CASE("matrix colimits and limits") {
  MatBase b(2);
  auto one = poset_chain(1);
  // coequalizer-free: colimit of [1]-diagram is the target, limit is the source
  std::vector<MatObj> objs{{2}, {3}};
  Matrix f(3, 2, 2, {1, 0, 0, 1, 1, 1});
  std::vector<Matrix> mors(3);
  mors[one->find_morphism("id0")] = b.identity({2});
  mors[one->find_morphism("id1")] = b.identity({3});
  mors[one->find_morphism("a")] = f;
  auto c = b.colimit(*one, objs, mors);
  CHECK(c.apex.dim == 3);
  CHECK(b.compose(c.legs[1], f) == c.legs[0]);
  CHECK(b.inverse(c.legs[1]));
  auto l = b.limit(*one, objs, mors);
  CHECK(l.apex.dim == 2);
  CHECK(b.compose(f, l.legs[0]) == l.legs[1]);
  auto u = b.factor_cone(l, {2}, {b.identity({2}), f});
  REQUIRE(u);
  CHECK(b.compose(l.legs[0], *u) == b.identity({2}));
  CHECK_FALSE(b.factor_cone(l, {2}, {b.identity({2}), b.zero({2}, {3})}));
}

TEST_CASE("matrix coequalizer dimension") {
  MatBase b(3);
  auto idem = builtin_shape("idem");
  Matrix e(2, 2, 3, {1, 0, 0, 0});
  std::vector<Matrix> mors(2);
  mors[idem->find_morphism("id")] = b.identity({2});
  mors[idem->find_morphism("e")] = e;
  CHECK(b.colimit(*idem, {{2}}, mors).apex.dim == 1);
  CHECK(b.limit(*idem, {{2}}, mors).apex.dim == 1);
}

TEST_CASE("matrix closed structure and symmetry") {
  for (Scalar p : {2u, 3u}) {
    MatBase b(p);
    for (std::size_t x = 0; x <= 2; ++x)
      for (std::size_t y = 0; y <= 1; ++y)
        for (std::size_t z = 0; z <= 2; ++z)
          for (const auto& f : b.hom({x * y}, {z})) {
            auto c = b.curry({x}, {y}, f);
            CHECK(b.compose(b.evaluation({x}, {z}), b.tensor(b.identity({x}), c)) == f);
          }
    Matrix u(2, 1, p, {1, 0}), v(3, 1, p, {0, 1, 1});
    CHECK(b.compose(b.symmetry({2}, {3}), b.tensor(u, v)) == b.tensor(v, u));
  }
  CHECK_THROWS(MatBase(4));
}

TEST_CASE("product base is componentwise") {
  ProductBase<MatBase, MatBase> b(MatBase(2), MatBase(3));
  auto one = poset_chain(1);
  using O = ProductBase<MatBase, MatBase>::Object;
  std::vector<O> objs{{{1}, {1}}, {{1}, {1}}};
  std::vector<ProductBase<MatBase, MatBase>::Morphism> mors(3);
  for (std::size_t m = 0; m < 3; ++m) mors[m] = b.identity(objs[0]);
  auto c = b.colimit(*one, objs, mors);
  CHECK(c.apex.first.dim == 1);
  CHECK(c.apex.second.dim == 1);
  CHECK(b.hom({{1}, {1}}, {{1}, {1}}).size() == 6);
}
