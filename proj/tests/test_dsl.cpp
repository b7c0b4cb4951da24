#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "dlab/dsl.hpp"

using namespace dlab;

namespace {

const char* kArrow =
    "category arrow\n"
    "object 0\n"
    "object 1\n"
    "identity 0 = id0\n"
    "identity 1 = id1\n"
    "morphism a: 0 -> 1\n";

template <typename F>
std::string error_of(F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("arrow category from six lines") {
  auto c = parse_category(kArrow);
  CHECK(c->num_objects() == 2);
  CHECK(c->num_morphisms() == 3);
  CHECK(same_category(c, poset_chain(1)));
  CHECK(serialize(*c) == kArrow);
  CHECK(same_category(parse_category(serialize(*c)), c));
}

TEST_CASE("builtins and serialization of every shape") {
  auto sq = parse_category("# the commutative square\nbuiltin square\n");
  CHECK(same_category(sq, product(poset_chain(1), poset_chain(1)).category));
  CHECK(serialize(*sq) == "builtin square\n");
  for (const auto& s : default_shape_family()) {
    CHECK(same_category(parse_category(serialize(*s)), s));
    // the explicit table also round-trips
    auto copy = std::make_shared<FinCategory>(*s);
    copy->set_name("copy");
    auto text = serialize(*copy);
    CHECK(text.rfind("category copy\n", 0) == 0);
    auto back = parse_category(text);
    CHECK(same_category(back, s));
    CHECK(serialize(*back) == text);
  }
}

TEST_CASE("category errors") {
  auto missing = error_of([] {
    parse_category(
        "object 0\nobject 1\nobject 2\nidentity 0 = i0\nidentity 1 = i1\nidentity 2 = i2\n"
        "morphism f: 0 -> 1\nmorphism g: 1 -> 2\n");
  });
  CHECK(missing.find("g . f") != std::string::npos);

  try {
    parse_category("object 0\nmorphism f: 0 -> 9\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 18);
    CHECK(std::string(e.what()).find("unresolved object '9'") != std::string::npos);
  }
  try {
    parse_category("object 0\n  objekt 1\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_category("object 0\nmorphism f 0 -> 0\n"), ParseError);
  CHECK_THROWS_AS(parse_category("builtin nonsense\n"), ParseError);
  CHECK_THROWS_AS(parse_category("builtin e\nobject 0\n"), ParseError);
}

TEST_CASE("finite-set diagrams") {
  FinSetBase b;
  const char* text =
      "shape [1]\n"
      "base finset\n"
      "set 0 = {x,y}\n"
      "set 1 = {*}\n"
      "map a = x->*, y->*\n";
  auto d = parse_diagram(text, b);
  CHECK(d.at(0).size == 2);
  CHECK(d.at(1).size == 1);
  CHECK(d.map(2).table == std::vector<std::size_t>{0, 0});
  auto canon = serialize(b, d);
  CHECK(canon == "shape [1]\nbase finset\nset 0 = {0,1}\nset 1 = {0}\nmap a = 0->0, 1->0\n");
  CHECK(parse_diagram(canon, b) == d);

  auto none = parse_diagram("shape empty\nbase finset\n", b);
  CHECK(none.objects.empty());
  CHECK(serialize(b, none) == "shape empty\nbase finset\n");

  auto law = error_of([&] {
    parse_diagram(
        "shape [2]\nbase finset\nset 0 = {a}\nset 1 = {a,b}\nset 2 = {a,b}\n"
        "map 01 = a->a\nmap 12 = a->b, b->a\nmap 02 = a->a\n",
        b);
  });
  CHECK(law.find("functor-law") != std::string::npos);
  CHECK(law.find("12") != std::string::npos);
  CHECK(error_of([&] { parse_diagram("shape [1]\nbase finset\nset 0 = {}\nset 1 = {}\nset 2 = {}\n", b); })
            .find("no object '2'") != std::string::npos);
  CHECK(error_of([&] { parse_diagram("shape [1]\nbase finset\nset 0 = {}\nset 1 = {}\n", b); })
            .find("morphism 'a'") != std::string::npos);
  CHECK(error_of([&] { parse_diagram("shape [1]\nbase finset\nset 0 = {p}\nset 1 = {}\nmap a =\n", b); })
            .find("not total") != std::string::npos);
}

TEST_CASE("matrix diagrams") {
  MatBase b(3);
  const char* text =
      "shape span\n"
      "base mat 3\n"
      "dim 0 = 2\n"
      "dim 1 = 1\n"
      "dim 2 = 0\n"
      "mat a = [[1,2]] (mod 3)\n"
      "mat b = [] (mod 3)\n";
  auto d = parse_diagram(text, b);
  CHECK(d.map(d.shape->find_morphism("a")) == Matrix(1, 2, 3, {1, 2}));
  CHECK(serialize(b, d) == text);
  auto bad = error_of([&] {
    parse_diagram("shape span\nbase mat 3\ndim 0 = 2\ndim 1 = 1\ndim 2 = 0\nmat a = [[1],[2]] (mod 3)\nmat b = [] (mod 3)\n",
                  b);
  });
  CHECK(bad.find("shape mismatch") != std::string::npos);
  CHECK(bad.find("'a'") != std::string::npos);
  CHECK_THROWS(parse_diagram(text, MatBase(2)));
  CHECK_THROWS(parse_diagram(text, FinSetBase()));

  std::mt19937_64 rng(9);
  for (const auto& s : default_shape_family())
    for (int i = 0; i < 5; ++i) {
      auto x = random_diagram(b, s, rng);
      REQUIRE(x);
      auto t = serialize(b, *x);
      CHECK(parse_diagram(t, b) == *x);
      CHECK(serialize(b, parse_diagram(t, b)) == t);
    }
}

TEST_CASE("distributor headers and the shape directory") {
  FinSetBase b;
  auto hdr = read_diag_header("shape [1] x discrete_2^op\nbase finset\n");
  CHECK(same_category(hdr.shape, product(std::vector<CatPtr>{poset_chain(1), opposite(discrete(2))})));
  std::mt19937_64 rng(2);
  auto x = random_diagram(b, hdr.shape, rng);
  REQUIRE(x);
  CHECK(serialize(b, *x).rfind("shape [1] x discrete_2^op\n", 0) == 0);
  CHECK(parse_diagram(serialize(b, *x), b) == *x);

  auto dir = std::filesystem::temp_directory_path() / "dlab_shapes_test";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "loop.fincat") << "object o\nidentity o = 1\nmorphism t: o -> o\ncompose t . t = 1\n";
  ::setenv("DERIVATOR_LAB_SHAPEDIR", dir.c_str(), 1);
  auto loop = resolve_shape("loop");
  REQUIRE(loop);
  CHECK(loop->name() == "loop");
  CHECK(loop->num_morphisms() == 2);
  auto y = parse_diagram("shape loop^op\nbase finset\nset o = {p,q}\nmap t = p->q, q->p\n", b);
  CHECK(y.map(1).table == std::vector<std::size_t>{1, 0});
  ::unsetenv("DERIVATOR_LAB_SHAPEDIR");
  CHECK_FALSE(resolve_shape("loop"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("functors from object assignments") {
  auto one = poset_chain(1), e = terminal_category(), idem = builtin_shape("idem");
  auto u = parse_functor("0->*, 1->*", one, e);
  CHECK(u.obj(1) == 0);
  auto v = parse_functor("*->1", e, one);
  CHECK(v.obj(0) == 1);
  CHECK_THROWS_WITH_AS(parse_functor("*->7", e, one).obj(0), doctest::Contains("no object"), CategoryError);
  CHECK_THROWS_WITH_AS(parse_functor("*->*", idem, idem), doctest::Contains("give the morphism"), CategoryError);
  auto w = parse_functor("*->*; e->id", idem, idem);
  CHECK(w.mor(1) == 0);
}
