#include "doctest.h"

#include "dlab/additive.hpp"

using namespace dlab;

namespace {

std::vector<CatPtr> small_shapes() {
  std::vector<CatPtr> out;
  for (const auto& s : default_shape_family())
    if (s->num_objects() <= 3) out.push_back(s);
  return out;
}

// Independent count: End(id) on Vect_p restricted to dims 0..2 must be
// scalar, so brute-force the pairs (τ_1, τ_2) commuting with all maps.
std::size_t brute_center_count(Scalar p) {
  std::size_t count = 0;
  std::vector<Matrix> ones, twos;
  for (Scalar a = 0; a < p; ++a) ones.push_back(Matrix(1, 1, p, {a}));
  for (Scalar a = 0; a < p; ++a)
    for (Scalar b = 0; b < p; ++b)
      for (Scalar c = 0; c < p; ++c)
        for (Scalar d = 0; d < p; ++d) twos.push_back(Matrix(2, 2, p, {a, b, c, d}));
  for (const auto& t1 : ones)
    for (const auto& t2 : twos) {
      bool ok = true;
      for (const auto& m : twos) ok = ok && t2 * m == m * t2;
      for (Scalar a = 0; a < p && ok; ++a)
        for (Scalar b = 0; b < p && ok; ++b) {
          Matrix col(2, 1, p, {a, b}), row(1, 2, p, {a, b});
          ok = t2 * col == col * t1 && t1 * row == row * t2;
        }
      for (const auto& m : ones) ok = ok && t1 * m == m * t1;
      count += ok;
    }
  return count;
}

}  // namespace

TEST_CASE("zero object and biproducts in the base") {
  MatBase m(3);
  auto z = zero_data(m);
  REQUIRE(z.pointed());
  CHECK(z.initial.apex.dim == 0);
  auto bp = biproduct(m, z, MatObj{2}, MatObj{1});
  REQUIRE(bp.inverse);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    auto f = m.random_morphism(MatObj{2}, MatObj{3}, rng), g = m.random_morphism(MatObj{2}, MatObj{3}, rng);
    REQUIRE(f);
    REQUIRE(g);
    CHECK(sum(m, z, *f, *g) == *f + *g);
  }
  CHECK(is_additive_category(m).passed);
  CHECK(is_additive_category(ZeroBase()).passed);

  FinSetBase s;
  auto zs = zero_data(s);
  CHECK_FALSE(zs.pointed());
  auto v = is_additive_category(s);
  CHECK_FALSE(v.passed);
  CHECK(v.witness.find("not pointed") != std::string::npos);
}

TEST_CASE("diagram-level biproducts and shear over F2") {
  KanEngine<MatBase> k{MatBase(2)};
  const auto& b = k.base();
  auto z = zero_data(b);
  std::mt19937_64 rng(3);
  for (const auto& J : small_shapes()) {
    auto zc = diagram_zero_comparison(k, J);
    REQUIRE(zc);
    CHECK(first_non_iso(b, *zc) == npos);
    auto x = random_diagram(b, J, rng), y = random_diagram(b, J, rng);
    REQUIRE(x);
    REQUIRE(y);
    auto c = diagram_coproduct(k, *x, *y);
    for (std::size_t j = 0; j < J->num_objects(); ++j)
      CHECK(c.lan.value.at(j).dim == x->at(j).dim + y->at(j).dim);
    auto cmp = diagram_biproduct_comparison(k, z, *x, *y);
    REQUIRE(cmp);
    CHECK(validate(b, *cmp).empty());
    CHECK(first_non_iso(b, *cmp) == npos);
    auto sh = diagram_shear(k, z, *x);
    REQUIRE(sh);
    CHECK(first_non_iso(b, *sh) == npos);
  }
}

TEST_CASE("additivity reports") {
  auto shapes = small_shapes();
  AdditiveOptions opt;
  opt.functor_samples = 10;
  CHECK(additivity_report(KanEngine<MatBase>{MatBase(2)}, shapes, opt).passed());
  CHECK(additivity_report(KanEngine<MatBase>{MatBase(3)}, shapes, opt).passed());
  CHECK(additivity_report(KanEngine<ZeroBase>{ZeroBase()}, shapes, opt).passed());
  auto fs = additivity_report(KanEngine<FinSetBase>{FinSetBase()}, shapes, opt);
  CHECK_FALSE(fs.passed());
  REQUIRE(!fs.checks.empty());
  CHECK(fs.checks[0].name == "pointed");
  CHECK(fs.to_text().find("C^e is not pointed") != std::string::npos);
  CHECK(!fs.notes.empty());
}

TEST_CASE("center of Mat and FinSet") {
  for (Scalar p : {2u, 3u}) {
    MatBase m(p);
    auto basis = mat_center_basis(m, 3);
    REQUIRE(basis.size() == 1);
    CHECK(natural_endo_families(m, m.sample_objects(2)).size() == brute_center_count(p));
    CHECK(brute_center_count(p) == p);
    auto d = center(m);
    CHECK(d.ring == "F_" + std::to_string(p));
    CHECK(d.elements.size() == p);
    CHECK(center_report(KanEngine<MatBase>{m}, small_shapes(), {}).passed());
  }
  FinSetBase s;
  CHECK(natural_endo_families(s, s.sample_objects(3)).size() == 1);
  CHECK(center_report(KanEngine<FinSetBase>{s}, small_shapes(), {}).passed());
}

TEST_CASE("sigma from End(S) is a ring map, and Kan extensions are linear") {
  for (Scalar p : {2u, 3u}) {
    MatBase m(p);
    auto ls = sigma_from_unit(m);
    CHECK(ls.scalars.size() == p);
    auto laws = make_check("laws"), inj = make_check("inj");
    certify_sigma(m, ls, 3, laws, inj);
    CHECK(laws.passed);
    CHECK(inj.passed);
    for (const auto& s : ls.scalars) CHECK(sigma(m, s).at(MatObj{2}) == Matrix::identity(2, p).scaled(s(0, 0)));
    CHECK(linearity_report(KanEngine<MatBase>{m}, small_shapes(), {}).passed());
  }
  CHECK_THROWS_AS(sigma_from_unit(FinSetBase()), CategoryError);
}

TEST_CASE("product of additive bases") {
  using P = ProductBase<MatBase, MatBase>;
  P b(MatBase(2), MatBase(3));
  CHECK(additivity_report(KanEngine<P>{b}, small_shapes(), {}).passed());
  auto ls = sigma_from_unit(b);
  CHECK(ls.scalars.size() == 6);
  auto laws = make_check("laws"), inj = make_check("inj");
  certify_sigma(b, ls, 1, laws, inj);
  CHECK(laws.passed);
  CHECK(inj.passed);
  CHECK(linearity_report(KanEngine<P>{b}, small_shapes(), {}).passed());
}
