#pragma once

// Finite categories given by explicit total composition tables, together with
// the shape constructions used throughout the engine.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace dlab {

class FinCategory;
using CatPtr = std::shared_ptr<const FinCategory>;

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

/// Raised for malformed categories and functors and for shape mismatches.
class CategoryError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct MorphismDecl {
  std::string id;
  std::size_t source = 0;
  std::size_t target = 0;
};

/// One violated law, with the morphisms that witness it.
struct Violation {
  std::string law;
  std::vector<std::string> witnesses;
  std::string message;
};

/// A finite category. Objects and morphisms are indexed in declaration order;
/// composition is a dense table over morphism indices, except for large
/// products, which compose coordinatewise through their factors.
///
/// Products carry their factor list so that projections, pairings and the
/// regrouping isomorphisms between nested and flat products can be computed.
/// The opposite of a product is again a product (of the opposite factors).
class FinCategory {
public:
  /// Builder-style construction from ids. Composites involving identities are
  /// filled in automatically; all other composable pairs must be given.
  class Builder {
  public:
    explicit Builder(std::string name = {}) : name_(std::move(name)) {}
    Builder& object(const std::string& id);
    Builder& morphism(const std::string& id, const std::string& src, const std::string& dst);
    Builder& identity(const std::string& obj, const std::string& mor);
    Builder& compose(const std::string& g, const std::string& f, const std::string& h);
    /// Builds without validating; missing composites are left undefined.
    FinCategory build_unchecked() const;
    /// Builds and throws CategoryError listing the violations if invalid.
    CatPtr build() const;

  private:
    std::string name_;
    std::vector<std::string> objects_;
    std::vector<std::tuple<std::string, std::string, std::string>> morphisms_;
    std::vector<std::pair<std::string, std::string>> identities_;
    std::vector<std::tuple<std::string, std::string, std::string>> composites_;
  };

  FinCategory() = default;
  FinCategory(std::string name, std::vector<std::string> objects, std::vector<MorphismDecl> morphisms,
              std::vector<std::size_t> identities, std::vector<std::int32_t> table);

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  std::size_t num_objects() const { return objects_.size(); }
  std::size_t num_morphisms() const { return morphisms_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<MorphismDecl>& morphisms() const { return morphisms_; }
  const std::string& object_id(std::size_t i) const { return objects_.at(i); }
  const std::string& morphism_id(std::size_t m) const { return morphisms_.at(m).id; }
  std::size_t source(std::size_t m) const { return morphisms_[m].source; }
  std::size_t target(std::size_t m) const { return morphisms_[m].target; }
  std::size_t identity(std::size_t obj) const { return identities_[obj]; }
  bool is_identity(std::size_t m) const { return identities_[morphisms_[m].source] == m; }

  /// g ∘ f; throws if the pair is not composable or the table has a hole.
  std::size_t compose(std::size_t g, std::size_t f) const;
  /// Raw table entry (-1 if undefined).
  std::int32_t table_entry(std::size_t g, std::size_t f) const {
    return table_.empty() ? factor_entry(g, f) : table_[g * morphisms_.size() + f];
  }
  const std::vector<std::size_t>& hom(std::size_t a, std::size_t b) const { return homs_[a * objects_.size() + b]; }

  std::size_t find_object(const std::string& id) const;
  std::size_t find_morphism(const std::string& id) const;

  /// Product factors; empty for a non-product category.
  const std::vector<CatPtr>& factors() const { return factors_; }
  bool is_product() const { return !factors_.empty(); }
  /// Coordinates of an object (resp. morphism) in a product category.
  std::vector<std::size_t> object_coords(std::size_t obj) const;
  std::vector<std::size_t> morphism_coords(std::size_t mor) const;
  std::size_t object_from_coords(const std::vector<std::size_t>& c) const;
  std::size_t morphism_from_coords(const std::vector<std::size_t>& c) const;

  friend bool operator==(const FinCategory& a, const FinCategory& b);

private:
  friend CatPtr product(const std::vector<CatPtr>& fs);
  friend CatPtr opposite(const CatPtr& c);
  void index_homs();
  std::int32_t factor_entry(std::size_t g, std::size_t f) const;

  std::string name_;
  std::vector<std::string> objects_;
  std::vector<MorphismDecl> morphisms_;
  std::vector<std::size_t> identities_;
  std::vector<std::int32_t> table_;
  std::vector<std::vector<std::size_t>> homs_;
  std::vector<CatPtr> factors_;
};

bool same_category(const CatPtr& a, const CatPtr& b);

/// Every violated category law; empty iff the table describes a category.
std::vector<Violation> validate(const FinCategory& c);

/// A functor between finite categories, stored as index maps.
struct Functor {
  CatPtr source;
  CatPtr target;
  std::vector<std::size_t> on_objects;
  std::vector<std::size_t> on_morphisms;

  std::size_t obj(std::size_t o) const { return on_objects[o]; }
  std::size_t mor(std::size_t m) const { return on_morphisms[m]; }
};

std::vector<Violation> validate(const Functor& f);
/// "J->K{o↦u(o), ...; m↦u(m), ...}" listing non-identity morphisms only.
std::string describe(const Functor& f);
Functor identity_functor(const CatPtr& c);
/// g ∘ f.
Functor compose(const Functor& g, const Functor& f);
bool operator==(const Functor& a, const Functor& b);
/// The functor e → C picking out an object.
Functor point(const CatPtr& c, std::size_t obj);
/// The unique functor C → e.
Functor collapse(const CatPtr& c);
/// Constant functor at an object.
Functor constant_functor(const CatPtr& src, const CatPtr& tgt, std::size_t obj);
Functor opposite(const Functor& f);

/// A natural transformation between parallel functors.
struct NatTrans {
  Functor source;
  Functor target;
  std::vector<std::size_t> components;
};

std::vector<Violation> validate(const NatTrans& t);
/// All natural transformations F → G in deterministic (lexicographic) order.
std::vector<NatTrans> enumerate_nat_trans(const Functor& f, const Functor& g);
/// All functors C → D in deterministic order.
std::vector<Functor> enumerate_functors(const CatPtr& c, const CatPtr& d);

// ---------------------------------------------------------------------------
// Constructions

CatPtr terminal_category();
CatPtr empty_category();

/// n-ary product with flat tuple ids; objects and morphisms are ordered
/// lexicographically in the factor indices.
CatPtr product(const std::vector<CatPtr>& factors);
/// Projection onto factor i of a product category.
Functor projection(const CatPtr& prod, std::size_t i);
/// The functor into a product determined by its components.
Functor pairing(const CatPtr& prod, const CatPtr& src, const std::vector<Functor>& components);
/// u₁ × … × uₙ between products.
Functor product_functor(const CatPtr& src, const CatPtr& tgt, const std::vector<Functor>& components);

struct BinaryProduct {
  CatPtr category;
  Functor first;
  Functor second;
};
BinaryProduct product(const CatPtr& c, const CatPtr& d);

/// Diagonal J → J × J.
Functor diagonal(const CatPtr& c);

CatPtr opposite(const CatPtr& c);

struct Coproduct {
  CatPtr category;
  Functor first;
  Functor second;
};
/// Disjoint union; objects of the first summand precede those of the second.
Coproduct coproduct(const CatPtr& c, const CatPtr& d);
/// The fold functor J ⊔ J → J.
Functor codiagonal(const Coproduct& cp, const CatPtr& c);

/// The leaves of the product tree of c (c itself if it is not a product).
std::vector<CatPtr> leaves(const CatPtr& c);
/// The isomorphism src → dst between two products with equal leaf sequences,
/// regrouping the nesting. Throws if the leaves differ.
Functor regroup(const CatPtr& src, const CatPtr& dst);
/// The isomorphism src → dst sending leaf perm[i] of src to leaf i of dst.
Functor permute_leaves(const CatPtr& src, const CatPtr& dst, const std::vector<std::size_t>& perm);

/// Comma category (u ↓ k): objects (j, f: u(j) → k).
struct CommaCategory {
  CatPtr category;
  Functor projection;
  std::vector<std::pair<std::size_t, std::size_t>> entries;  // (j, f)
  std::vector<std::int64_t> lookup;                           // j * |Mor K| + f → object

  std::size_t find(std::size_t j, std::size_t f, std::size_t k_morphisms) const {
    auto v = lookup[j * k_morphisms + f];
    return v < 0 ? npos : static_cast<std::size_t>(v);
  }
};
CommaCategory comma(const Functor& u, std::size_t k);
/// Coslice (k ↓ u): objects (j, f: k → u(j)).
CommaCategory coslice(const Functor& u, std::size_t k);

/// Twisted arrow category: objects are morphisms f: k0 → k1 of K; a morphism
/// f → f' is a pair (a: k0 → k0', b: k1' → k1) with f = b ∘ f' ∘ a.
struct TwistedArrow {
  CatPtr category;
  Functor target;      // Ar(K) → K^op, f ↦ k1
  Functor source;      // Ar(K) → K,    f ↦ k0
  Functor projection;  // (t, s): Ar(K) → K^op × K
  CatPtr opposite_k;
  CatPtr base;
  /// For each Ar-morphism, the K-morphisms (a, b).
  std::vector<std::pair<std::size_t, std::size_t>> legs;
};
TwistedArrow twisted_arrow(const CatPtr& k);

/// The canonical isomorphism Ar(K)^tw × Ar(L)^tw → Ar(K × L)^tw.
Functor twisted_arrow_interchange(const TwistedArrow& ak, const TwistedArrow& al, const TwistedArrow& akl,
                                  const CatPtr& ak_x_al);

// ---------------------------------------------------------------------------
// Built-in shapes

CatPtr builtin_shape(const std::string& name);
std::vector<std::string> builtin_shape_names();
/// e, [1], [2], square, span, cospan, discrete_2, discrete_3, idem.
std::vector<CatPtr> default_shape_family();
CatPtr poset_chain(std::size_t n);  // [n]
CatPtr discrete(std::size_t n);

std::string to_string(const std::vector<Violation>& vs);

}  // namespace dlab
