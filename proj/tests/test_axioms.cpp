#include "doctest.h"

#include <chrono>

#include "dlab/axioms.hpp"

using namespace dlab;

namespace {

const CheckResult* find(const Report& r, const std::string& prefix) {
  for (const auto& c : r.checks)
    if (c.name.rfind(prefix, 0) == 0) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("glue inverts restriction to the summands") {
  FinSetBase b;
  auto fam = default_shape_family();
  auto cp = coproduct(fam[1], fam[2]);
  std::mt19937_64 rng(2);
  auto x = random_diagram(b, cp.category, rng);
  REQUIRE(x);
  CHECK(glue(cp, restrict(cp.first, *x), restrict(cp.second, *x)) == *x);
}

TEST_CASE("finite sets satisfy the axioms") {
  KanEngine<FinSetBase> k{FinSetBase()};
  auto t0 = std::chrono::steady_clock::now();
  auto r = axioms_report(k, default_shape_family(), {.seed = 1});
  MESSAGE("finset axioms: "
          << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << "s");
  for (const auto& c : r.checks) {
    CHECK_MESSAGE(c.passed, c.name << ": " << (c.witnesses.empty() ? "" : c.witnesses[0]));
    CHECK(c.cases > 0);
  }
  CHECK(r.passed());
}

TEST_CASE("matrices over F2 satisfy the axioms") {
  KanEngine<MatBase> k{MatBase(2)};
  auto r = axioms_report(k, default_shape_family(), {.seed = 4});
  for (const auto& c : r.checks) CHECK_MESSAGE(c.passed, c.name << ": " << (c.witnesses.empty() ? "" : c.witnesses[0]));
}

TEST_CASE("the lan-from-ran engine fails base change") {
  KanEngine<FinSetBase> k{FinSetBase(), KanWiring::LanFromRan};
  auto r = axioms_report(k, default_shape_family(), {.seed = 1});
  CHECK_FALSE(r.passed());
  auto d4 = find(r, "Der4");
  REQUIRE(d4);
  CHECK_FALSE(d4->passed);
  REQUIRE_FALSE(d4->witnesses.empty());
  CHECK(d4->witnesses[0].find("u=") != std::string::npos);
}

TEST_CASE("reports are reproducible") {
  KanEngine<MatBase> k{MatBase(3)};
  auto fam = default_shape_family();
  std::vector<CatPtr> few{fam[0], fam[1], fam[2]};
  auto a = axioms_report(k, few, {.seed = 9}).to_json().dump();
  auto b = axioms_report(k, few, {.seed = 9}).to_json().dump();
  CHECK(a == b);
}
