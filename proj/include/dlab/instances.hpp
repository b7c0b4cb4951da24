#pragma once

// Concrete bicomplete, closed symmetric monoidal categories that diagrams take
// values in: finite sets (cartesian) and finite-dimensional vector spaces over
// F_p (Kronecker tensor). Both provide finite (co)limit engines with their
// universal factorizations.

#include <concepts>
#include <cstdint>
#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dlab/fincat.hpp"
#include "dlab/finite_field.hpp"

namespace dlab {

/// A colimit (or limit) object with its legs, one per shape object.
template <class O, class M>
struct Cocone {
  O apex;
  std::vector<M> legs;
};
template <class O, class M>
struct Cone {
  O apex;
  std::vector<M> legs;
};

/// The operations every computation target provides.
///
/// Composition is `compose(g, f)` = g ∘ f. (Co)limits take a diagram as the
/// shape plus one value per object and per morphism. `factor_cocone` returns
/// the unique map out of a computed colimit restricting to the given legs, or
/// nullopt when the legs do not form a cocone (dually for `factor_cone`).
template <class B>
concept InstanceCategory = requires(const B& b, const typename B::Object& x, const typename B::Morphism& f,
                                    const FinCategory& shape, const std::vector<typename B::Object>& os,
                                    const std::vector<typename B::Morphism>& ms, const typename B::ColimitT& cc,
                                    const typename B::LimitT& cn, std::mt19937_64& rng) {
  { b.name() } -> std::convertible_to<std::string>;
  { b.identity(x) } -> std::same_as<typename B::Morphism>;
  { b.compose(f, f) } -> std::same_as<typename B::Morphism>;
  { b.source(f) } -> std::same_as<typename B::Object>;
  { b.target(f) } -> std::same_as<typename B::Object>;
  { b.hom(x, x) } -> std::same_as<std::vector<typename B::Morphism>>;
  { b.hom_size(x, x) } -> std::same_as<std::size_t>;
  { b.colimit(shape, os, ms) } -> std::same_as<typename B::ColimitT>;
  { b.limit(shape, os, ms) } -> std::same_as<typename B::LimitT>;
  { b.factor_cocone(cc, x, ms) } -> std::same_as<std::optional<typename B::Morphism>>;
  { b.factor_cone(cn, x, ms) } -> std::same_as<std::optional<typename B::Morphism>>;
  { b.inverse(f) } -> std::same_as<std::optional<typename B::Morphism>>;
  { b.tensor(x, x) } -> std::same_as<typename B::Object>;
  { b.tensor(f, f) } -> std::same_as<typename B::Morphism>;
  { b.unit() } -> std::same_as<typename B::Object>;
  { b.symmetry(x, x) } -> std::same_as<typename B::Morphism>;
  { b.left_unitor(x) } -> std::same_as<typename B::Morphism>;
  { b.right_unitor(x) } -> std::same_as<typename B::Morphism>;
  { b.associator(x, x, x) } -> std::same_as<typename B::Morphism>;
  { b.internal_hom(x, x) } -> std::same_as<typename B::Object>;
  { b.evaluation(x, x) } -> std::same_as<typename B::Morphism>;
  { b.curry(x, x, f) } -> std::same_as<typename B::Morphism>;
  { b.random_morphism(x, x, rng) } -> std::same_as<std::optional<typename B::Morphism>>;
  { b.sample_objects(std::size_t{}) } -> std::same_as<std::vector<typename B::Object>>;
  { b.describe(x) } -> std::convertible_to<std::string>;
  { b.describe(f) } -> std::convertible_to<std::string>;
  { x == x } -> std::convertible_to<bool>;
  { f == f } -> std::convertible_to<bool>;
};

// ---------------------------------------------------------------------------
// Finite sets

struct FinSet {
  std::size_t size = 0;
  bool operator==(const FinSet&) const = default;
};

/// A total function between finite sets {0..n-1} → {0..m-1}.
struct FinMap {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> table;
  bool operator==(const FinMap&) const = default;
};

class FinSetBase {
public:
  using Object = FinSet;
  using Morphism = FinMap;
  using ColimitT = Cocone<FinSet, FinMap>;
  using LimitT = Cone<FinSet, FinMap>;

  std::string name() const { return "finset"; }
  FinMap identity(FinSet x) const;
  FinMap compose(const FinMap& g, const FinMap& f) const;
  FinSet source(const FinMap& f) const { return {f.source}; }
  FinSet target(const FinMap& f) const { return {f.target}; }
  /// All maps x → y, lexicographic in the table (first entry most significant).
  std::vector<FinMap> hom(FinSet x, FinSet y) const;
  /// |hom(x, y)|, saturating at SIZE_MAX.
  std::size_t hom_size(FinSet x, FinSet y) const;

  /// Quotient of the disjoint union by the generated relation; classes are
  /// numbered in order of their smallest element.
  ColimitT colimit(const FinCategory& shape, const std::vector<FinSet>& objs, const std::vector<FinMap>& mors) const;
  /// Compatible families in the product, in lexicographic order.
  LimitT limit(const FinCategory& shape, const std::vector<FinSet>& objs, const std::vector<FinMap>& mors) const;
  std::optional<FinMap> factor_cocone(const ColimitT& c, FinSet target, const std::vector<FinMap>& legs) const;
  std::optional<FinMap> factor_cone(const LimitT& c, FinSet source, const std::vector<FinMap>& legs) const;
  std::optional<FinMap> inverse(const FinMap& f) const;

  FinSet tensor(FinSet x, FinSet y) const { return {x.size * y.size}; }
  FinMap tensor(const FinMap& f, const FinMap& g) const;
  FinSet unit() const { return {1}; }
  FinMap symmetry(FinSet x, FinSet y) const;
  FinMap left_unitor(FinSet x) const { return identity(x); }
  FinMap right_unitor(FinSet x) const { return identity(x); }
  FinMap associator(FinSet x, FinSet y, FinSet z) const { return identity({x.size * y.size * z.size}); }
  /// The set of functions x → z, encoded lexicographically.
  FinSet internal_hom(FinSet x, FinSet z) const;
  FinMap evaluation(FinSet x, FinSet z) const;
  /// f: x ⊗ y → z to its transpose y → [x, z].
  FinMap curry(FinSet x, FinSet y, const FinMap& f) const;

  /// Uniform over hom(x, y); nullopt if it is empty.
  std::optional<FinMap> random_morphism(FinSet x, FinSet y, std::mt19937_64& rng) const;
  std::vector<FinSet> sample_objects(std::size_t max_size) const;
  std::string describe(FinSet x) const;
  std::string describe(const FinMap& f) const;
};

// ---------------------------------------------------------------------------
// Finite-dimensional vector spaces over F_p

struct MatObj {
  std::size_t dim = 0;
  bool operator==(const MatObj&) const = default;
};

class MatBase {
public:
  using Object = MatObj;
  using Morphism = Matrix;
  using ColimitT = Cocone<MatObj, Matrix>;
  using LimitT = Cone<MatObj, Matrix>;

  /// Throws std::invalid_argument unless p is prime.
  explicit MatBase(Scalar p = 2);

  Scalar prime() const { return p_; }
  std::string name() const { return "mat" + std::to_string(p_); }
  Matrix identity(MatObj x) const { return Matrix::identity(x.dim, p_); }
  Matrix compose(const Matrix& g, const Matrix& f) const { return g * f; }
  MatObj source(const Matrix& f) const { return {f.cols()}; }
  MatObj target(const Matrix& f) const { return {f.rows()}; }
  Matrix zero(MatObj x, MatObj y) const { return Matrix(y.dim, x.dim, p_); }
  /// All p^(dim x · dim y) matrices, lexicographic in row-major entries.
  std::vector<Matrix> hom(MatObj x, MatObj y) const;
  std::size_t hom_size(MatObj x, MatObj y) const;

  /// Cokernel of the difference map ⊕_{f: i→j} D(i) → ⊕_j D(j).
  ColimitT colimit(const FinCategory& shape, const std::vector<MatObj>& objs, const std::vector<Matrix>& mors) const;
  /// Kernel of the difference map ⊕_j D(j) → ⊕_{f: i→j} D(j).
  LimitT limit(const FinCategory& shape, const std::vector<MatObj>& objs, const std::vector<Matrix>& mors) const;
  std::optional<Matrix> factor_cocone(const ColimitT& c, MatObj target, const std::vector<Matrix>& legs) const;
  std::optional<Matrix> factor_cone(const LimitT& c, MatObj source, const std::vector<Matrix>& legs) const;
  std::optional<Matrix> inverse(const Matrix& f) const { return dlab::inverse(f); }

  MatObj tensor(MatObj x, MatObj y) const { return {x.dim * y.dim}; }
  Matrix tensor(const Matrix& f, const Matrix& g) const { return f.kron(g); }
  MatObj unit() const { return {1}; }
  Matrix symmetry(MatObj x, MatObj y) const;
  Matrix left_unitor(MatObj x) const { return identity(x); }
  Matrix right_unitor(MatObj x) const { return identity(x); }
  Matrix associator(MatObj x, MatObj y, MatObj z) const { return identity({x.dim * y.dim * z.dim}); }
  /// dim(x)·dim(z); entry (r, c) of a z × x matrix has coordinate r·dim(x) + c.
  MatObj internal_hom(MatObj x, MatObj z) const { return {x.dim * z.dim}; }
  Matrix evaluation(MatObj x, MatObj z) const;
  Matrix curry(MatObj x, MatObj y, const Matrix& f) const;

  std::optional<Matrix> random_morphism(MatObj x, MatObj y, std::mt19937_64& rng) const;
  std::vector<MatObj> sample_objects(std::size_t max_size) const;
  std::string describe(MatObj x) const;
  std::string describe(const Matrix& f) const;

private:
  Scalar p_;
};

// ---------------------------------------------------------------------------
// The category with one object and one morphism.

struct Point {
  bool operator==(const Point&) const = default;
};

class ZeroBase {
public:
  using Object = Point;
  using Morphism = Point;
  using ColimitT = Cocone<Point, Point>;
  using LimitT = Cone<Point, Point>;

  std::string name() const { return "zero"; }
  Point identity(Point) const { return {}; }
  Point compose(Point, Point) const { return {}; }
  Point source(Point) const { return {}; }
  Point target(Point) const { return {}; }
  std::vector<Point> hom(Point, Point) const { return {Point{}}; }
  std::size_t hom_size(Point, Point) const { return 1; }
  ColimitT colimit(const FinCategory& s, const std::vector<Point>&, const std::vector<Point>&) const {
    return {{}, std::vector<Point>(s.num_objects())};
  }
  LimitT limit(const FinCategory& s, const std::vector<Point>&, const std::vector<Point>&) const {
    return {{}, std::vector<Point>(s.num_objects())};
  }
  std::optional<Point> factor_cocone(const ColimitT&, Point, const std::vector<Point>&) const { return Point{}; }
  std::optional<Point> factor_cone(const LimitT&, Point, const std::vector<Point>&) const { return Point{}; }
  std::optional<Point> inverse(Point) const { return Point{}; }
  Point tensor(Point, Point) const { return {}; }
  Point unit() const { return {}; }
  Point symmetry(Point, Point) const { return {}; }
  Point left_unitor(Point) const { return {}; }
  Point right_unitor(Point) const { return {}; }
  Point associator(Point, Point, Point) const { return {}; }
  Point internal_hom(Point, Point) const { return {}; }
  Point evaluation(Point, Point) const { return {}; }
  Point curry(Point, Point, Point) const { return {}; }
  std::optional<Point> random_morphism(Point, Point, std::mt19937_64&) const { return Point{}; }
  std::vector<Point> sample_objects(std::size_t) const { return {Point{}}; }
  std::string describe(Point) const { return "0"; }
};

// ---------------------------------------------------------------------------
// Product of two targets; (co)limits and monoidal structure componentwise.
// Diagrams in A × B are pairs of diagrams, so y(A × B) = y(A) × y(B).

template <InstanceCategory A, InstanceCategory B>
class ProductBase {
public:
  using Object = std::pair<typename A::Object, typename B::Object>;
  using Morphism = std::pair<typename A::Morphism, typename B::Morphism>;
  using ColimitT = Cocone<Object, Morphism>;
  using LimitT = Cone<Object, Morphism>;

  ProductBase(A a, B b) : a_(std::move(a)), b_(std::move(b)) {}
  const A& first() const { return a_; }
  const B& second() const { return b_; }

  std::string name() const { return a_.name() + "x" + b_.name(); }
  Morphism identity(const Object& x) const { return {a_.identity(x.first), b_.identity(x.second)}; }
  Morphism compose(const Morphism& g, const Morphism& f) const {
    return {a_.compose(g.first, f.first), b_.compose(g.second, f.second)};
  }
  Object source(const Morphism& f) const { return {a_.source(f.first), b_.source(f.second)}; }
  Object target(const Morphism& f) const { return {a_.target(f.first), b_.target(f.second)}; }
  std::vector<Morphism> hom(const Object& x, const Object& y) const {
    std::vector<Morphism> out;
    for (auto& f : a_.hom(x.first, y.first))
      for (auto& g : b_.hom(x.second, y.second)) out.emplace_back(f, g);
    return out;
  }

  std::size_t hom_size(const Object& x, const Object& y) const {
    auto a = a_.hom_size(x.first, y.first), c = b_.hom_size(x.second, y.second);
    if (a != 0 && c > SIZE_MAX / a) return SIZE_MAX;
    return a * c;
  }

  ColimitT colimit(const FinCategory& s, const std::vector<Object>& os, const std::vector<Morphism>& ms) const {
    auto [oa, ob] = split(os);
    auto [ma, mb] = split(ms);
    return join<ColimitT>(a_.colimit(s, oa, ma), b_.colimit(s, ob, mb));
  }
  LimitT limit(const FinCategory& s, const std::vector<Object>& os, const std::vector<Morphism>& ms) const {
    auto [oa, ob] = split(os);
    auto [ma, mb] = split(ms);
    return join<LimitT>(a_.limit(s, oa, ma), b_.limit(s, ob, mb));
  }
  std::optional<Morphism> factor_cocone(const ColimitT& c, const Object& t, const std::vector<Morphism>& legs) const {
    auto [ca, cb] = unjoin<typename A::ColimitT, typename B::ColimitT>(c);
    auto [la, lb] = split(legs);
    auto fa = a_.factor_cocone(ca, t.first, la);
    auto fb = b_.factor_cocone(cb, t.second, lb);
    if (!fa || !fb) return std::nullopt;
    return Morphism{*fa, *fb};
  }
  std::optional<Morphism> factor_cone(const LimitT& c, const Object& s, const std::vector<Morphism>& legs) const {
    auto [ca, cb] = unjoin<typename A::LimitT, typename B::LimitT>(c);
    auto [la, lb] = split(legs);
    auto fa = a_.factor_cone(ca, s.first, la);
    auto fb = b_.factor_cone(cb, s.second, lb);
    if (!fa || !fb) return std::nullopt;
    return Morphism{*fa, *fb};
  }
  std::optional<Morphism> inverse(const Morphism& f) const {
    auto fa = a_.inverse(f.first);
    auto fb = b_.inverse(f.second);
    if (!fa || !fb) return std::nullopt;
    return Morphism{*fa, *fb};
  }

  Object tensor(const Object& x, const Object& y) const {
    return {a_.tensor(x.first, y.first), b_.tensor(x.second, y.second)};
  }
  Morphism tensor(const Morphism& f, const Morphism& g) const {
    return {a_.tensor(f.first, g.first), b_.tensor(f.second, g.second)};
  }
  Object unit() const { return {a_.unit(), b_.unit()}; }
  Morphism symmetry(const Object& x, const Object& y) const {
    return {a_.symmetry(x.first, y.first), b_.symmetry(x.second, y.second)};
  }
  Morphism left_unitor(const Object& x) const { return {a_.left_unitor(x.first), b_.left_unitor(x.second)}; }
  Morphism right_unitor(const Object& x) const { return {a_.right_unitor(x.first), b_.right_unitor(x.second)}; }
  Morphism associator(const Object& x, const Object& y, const Object& z) const {
    return {a_.associator(x.first, y.first, z.first), b_.associator(x.second, y.second, z.second)};
  }
  Object internal_hom(const Object& x, const Object& z) const {
    return {a_.internal_hom(x.first, z.first), b_.internal_hom(x.second, z.second)};
  }
  Morphism evaluation(const Object& x, const Object& z) const {
    return {a_.evaluation(x.first, z.first), b_.evaluation(x.second, z.second)};
  }
  Morphism curry(const Object& x, const Object& y, const Morphism& f) const {
    return {a_.curry(x.first, y.first, f.first), b_.curry(x.second, y.second, f.second)};
  }
  std::optional<Morphism> random_morphism(const Object& x, const Object& y, std::mt19937_64& rng) const {
    auto f = a_.random_morphism(x.first, y.first, rng);
    auto g = b_.random_morphism(x.second, y.second, rng);
    if (!f || !g) return std::nullopt;
    return Morphism{*f, *g};
  }
  std::vector<Object> sample_objects(std::size_t n) const {
    std::vector<Object> out;
    for (auto& x : a_.sample_objects(n))
      for (auto& y : b_.sample_objects(n)) out.emplace_back(x, y);
    return out;
  }
  std::string describe(const Object& x) const { return "(" + a_.describe(x.first) + "," + b_.describe(x.second) + ")"; }
  std::string describe(const Morphism& f) const {
    return "(" + a_.describe(f.first) + "," + b_.describe(f.second) + ")";
  }

private:
  static std::pair<std::vector<typename A::Object>, std::vector<typename B::Object>> split(
      const std::vector<Object>& v) {
    std::pair<std::vector<typename A::Object>, std::vector<typename B::Object>> out;
    for (const auto& [x, y] : v) {
      out.first.push_back(x);
      out.second.push_back(y);
    }
    return out;
  }
  static std::pair<std::vector<typename A::Morphism>, std::vector<typename B::Morphism>> split(
      const std::vector<Morphism>& v) {
    std::pair<std::vector<typename A::Morphism>, std::vector<typename B::Morphism>> out;
    for (const auto& [x, y] : v) {
      out.first.push_back(x);
      out.second.push_back(y);
    }
    return out;
  }
  template <class R, class CA, class CB>
  static R join(const CA& a, const CB& b) {
    R r{{a.apex, b.apex}, {}};
    for (std::size_t i = 0; i < a.legs.size(); ++i) r.legs.emplace_back(a.legs[i], b.legs[i]);
    return r;
  }
  template <class CA, class CB, class C>
  static std::pair<CA, CB> unjoin(const C& c) {
    std::pair<CA, CB> out{{c.apex.first, {}}, {c.apex.second, {}}};
    for (const auto& [x, y] : c.legs) {
      out.first.legs.push_back(x);
      out.second.legs.push_back(y);
    }
    return out;
  }

  A a_;
  B b_;
};

static_assert(InstanceCategory<FinSetBase>);
static_assert(InstanceCategory<MatBase>);

}  // namespace dlab
