#include "doctest.h"

#include <numeric>

#include "dlab/coend.hpp"

using namespace dlab;

namespace {

// Endomorphisms of K modulo f∘g ~ g∘f, counted directly.
std::size_t trace_classes(const FinCategory& K) {
  std::vector<std::size_t> parent(K.num_morphisms());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a];
    return a;
  };
  for (std::size_t f = 0; f < K.num_morphisms(); ++f)
    for (std::size_t g = 0; g < K.num_morphisms(); ++g)
      if (K.target(f) == K.source(g) && K.target(g) == K.source(f)) {
        auto a = find(K.compose(g, f)), b = find(K.compose(f, g));
        if (a != b) parent[a] = b;
      }
  std::size_t n = 0;
  for (std::size_t f = 0; f < K.num_morphisms(); ++f)
    if (K.source(f) == K.target(f) && find(f) == f) ++n;
  return n;
}

}  // namespace

TEST_CASE("coend and end of hom over [1]") {
  KanEngine<FinSetBase> k{FinSetBase()};
  auto one = poset_chain(1);
  auto e = terminal_category();
  auto h = hom_diagram(one);
  CHECK(validate(k.base(), h).empty());
  CHECK(coend(k, e, one, e, h).value().at(0).size == 2);
  CHECK(end(k, e, one, e, h).value().at(0).size == 1);
}

TEST_CASE("coend and end of hom against oracles") {
  KanEngine<FinSetBase> k{FinSetBase()};
  auto e = terminal_category();
  for (const auto& K : default_shape_family()) {
    auto h = hom_diagram(K);
    REQUIRE(validate(k.base(), h).empty());
    auto nat = enumerate_nat_trans(identity_functor(K), identity_functor(K)).size();
    CHECK_MESSAGE(end(k, e, K, e, h).value().at(0).size == nat, K->name());
    CHECK_MESSAGE(coend(k, e, K, e, h).value().at(0).size == trace_classes(*K), K->name());
  }
}

TEST_CASE("coend over a discrete category is a sum of diagonal entries") {
  KanEngine<MatBase> k{MatBase(2)};
  auto d2 = discrete(2);
  auto e = terminal_category();
  std::mt19937_64 rng(5);
  for (int i = 0; i < 10; ++i) {
    auto x = random_diagram(k.base(), two_sided_shape(e, d2, e), rng, {3});
    REQUIRE(x);
    const auto& S = *x->shape;
    std::size_t diag = 0, prod = 1;
    for (std::size_t o = 0; o < S.num_objects(); ++o) {
      auto c = S.object_coords(o);
      if (c[1] == c[2]) {
        diag += x->at(o).dim;
        prod *= 1;
      }
    }
    CHECK(coend(k, e, d2, e, *x).value().at(0).dim == diag);
    // the end is the product (= direct sum) too
    CHECK(end(k, e, d2, e, *x).value().at(0).dim == diag);
  }
}

TEST_CASE("coend over e returns the diagram") {
  KanEngine<FinSetBase> k{FinSetBase()};
  auto e = terminal_category();
  auto one = poset_chain(1);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 10; ++i) {
    auto x = random_diagram(k.base(), two_sided_shape(one, e, one), rng, {3});
    REQUIRE(x);
    auto c = coend(k, one, e, one, *x);
    // J × e^op × e × L and J × L have the same objects in the same order
    for (std::size_t o = 0; o < x->objects.size(); ++o) CHECK(c.value().at(o) == x->at(o));
  }
}

TEST_CASE("coends are computed pointwise") {
  KanEngine<FinSetBase> k{FinSetBase()};
  auto one = poset_chain(1);
  auto span = builtin_shape("span");
  std::mt19937_64 rng(13);
  for (int i = 0; i < 10; ++i) {
    auto x = random_diagram(k.base(), two_sided_shape(one, one, discrete(2)), rng, {2});
    REQUIRE(x);
    auto c = coend(k, one, one, discrete(2), *x);
    CHECK(pointwise_coend_failure(k, c) == npos);
  }
  KanEngine<MatBase> km{MatBase(3)};
  for (int i = 0; i < 5; ++i) {
    auto x = random_diagram(km.base(), two_sided_shape(one, span, terminal_category()), rng, {2});
    REQUIRE(x);
    auto c = coend(km, one, span, terminal_category(), *x);
    CHECK(pointwise_coend_failure(km, c) == npos);
  }
}

TEST_CASE("Fubini") {
  auto e = terminal_category();
  auto one = poset_chain(1);
  auto d2 = discrete(2);
  std::mt19937_64 rng(17);
  KanEngine<FinSetBase> k{FinSetBase()};
  for (const auto& [K, L] : std::vector<std::pair<CatPtr, CatPtr>>{{one, one}, {one, d2}, {d2, one}, {e, one}}) {
    auto fs = fubini_shapes(e, K, L, e);
    for (int i = 0; i < 5; ++i) {
      auto x = random_diagram(k.base(), fs.single.full, rng, {2});
      REQUIRE(x);
      auto r = fubini_check(k, fs, *x);
      CHECK_MESSAGE(r.passed, r.witness);
      CHECK(r.single->at(0) == r.kl->at(0));
    }
  }
  KanEngine<MatBase> km{MatBase(2)};
  auto fs = fubini_shapes(one, d2, d2, e);
  for (int i = 0; i < 3; ++i) {
    auto x = random_diagram(km.base(), fs.single.full, rng, {2});
    REQUIRE(x);
    auto r = fubini_check(km, fs, *x);
    CHECK_MESSAGE(r.passed, r.witness);
  }
}

TEST_CASE("coend, end and Fubini reports") {
  std::vector<CatPtr> small;
  for (const auto& s : default_shape_family())
    if (s->num_objects() <= 3) small.push_back(s);
  CoendOptions opt;
  opt.pointwise_samples = opt.fubini_samples = 10;
  KanEngine<FinSetBase> f{FinSetBase()};
  KanEngine<MatBase> m{MatBase(3)};
  auto c = coend_report(f, small, opt);
  CHECK(c.passed());
  CHECK(c.checks[0].name == "oracle");
  CHECK(coend_report(m, small, opt).passed());
  CHECK(end_report(f, default_shape_family(), opt).passed());
  CHECK(end_report(m, small, opt).passed());
  auto fr = fubini_report(f, {poset_chain(1), discrete(2)}, opt);
  CHECK(fr.passed());
  CHECK(fr.checks.size() == 4);
  CHECK(c.to_json().dump() == coend_report(f, small, opt).to_json().dump());
}
