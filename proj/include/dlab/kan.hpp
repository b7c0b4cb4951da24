#pragma once

// Pointwise Kan extensions for represented derivators y(C): the value of
// u_!X at k is the colimit of X over the comma category (u/k), and u_*X at k
// is the limit over (k/u). Results keep the comma categories and (co)limit
// data so that units, transposes and mates can be formed.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dlab/diagram.hpp"

namespace dlab {

template <InstanceCategory B>
struct LanData {
  Functor u;
  Diagram<B> input;
  Diagram<B> value;
  /// η: X → u*(u_!X); absent if the engine could not produce one.
  std::optional<DiagramMap<B>> unit;
  std::vector<CommaCategory> commas;
  std::vector<typename B::ColimitT> colimits;
};

template <InstanceCategory B>
struct RanData {
  Functor u;
  Diagram<B> input;
  Diagram<B> value;
  /// ε: u*(u_*X) → X.
  std::optional<DiagramMap<B>> counit;
  std::vector<CommaCategory> commas;
  std::vector<typename B::LimitT> limits;
};

/// A square of functors
///
///   D --v--> A
///   |p       |q
///   B --u--> C
///
/// with a 2-cell. For left mates α: q∘v ⇒ u∘p; for right mates α: u∘p ⇒ q∘v.
struct Square {
  Functor p, v, q, u;
  NatTrans alpha;
  std::string label;
};

/// (u/k) → J, e → K with α_(j,f) = f: u(j) → k.
Square comma_square(const Functor& u, std::size_t k);
/// (k/u) → J, e → K with α_(j,f) = f: k → u(j).
Square coslice_square(const Functor& u, std::size_t k);
/// Throws CategoryError if the boundary does not fit together.
void check_square(const Square& s, bool left);

/// How lan is wired. LanFromRan is a deliberately broken engine whose left
/// Kan extension returns the right Kan extension's values.
enum class KanWiring { Correct, LanFromRan };

template <InstanceCategory B>
class KanEngine {
public:
  using Object = typename B::Object;
  using Morphism = typename B::Morphism;
  using Component = std::function<Morphism(std::size_t)>;

  explicit KanEngine(B base, KanWiring wiring = KanWiring::Correct) : b_(std::move(base)), wiring_(wiring) {}

  const B& base() const { return b_; }
  KanWiring wiring() const { return wiring_; }

  LanData<B> lan(const Functor& u, const Diagram<B>& x) const {
    if (wiring_ == KanWiring::LanFromRan) return broken_lan(u, x);
    check_input(u, x);
    const auto& K = *u.target;
    LanData<B> r{u, x, {u.target, {}, {}}, std::nullopt, {}, {}};
    for (std::size_t k = 0; k < K.num_objects(); ++k) {
      r.commas.push_back(comma(u, k));
      auto d = restrict(r.commas.back().projection, x);
      r.colimits.push_back(b_.colimit(*d.shape, d.objects, d.morphisms));
      r.value.objects.push_back(r.colimits.back().apex);
    }
    for (std::size_t m = 0; m < K.num_morphisms(); ++m) {
      auto s = K.source(m), t = K.target(m);
      const auto& cs = r.commas[s];
      std::vector<Morphism> legs;
      for (const auto& [j, f] : cs.entries)
        legs.push_back(r.colimits[t].legs[r.commas[t].find(j, K.compose(m, f), K.num_morphisms())]);
      auto h = b_.factor_cocone(r.colimits[s], r.value.objects[t], legs);
      if (!h) throw std::logic_error("lan: pushed-forward legs do not form a cocone");
      r.value.morphisms.push_back(*h);
    }
    DiagramMap<B> eta{x, restrict(u, r.value), {}};
    const auto& J = *u.source;
    for (std::size_t j = 0; j < J.num_objects(); ++j) {
      auto k = u.obj(j);
      eta.components.push_back(r.colimits[k].legs[r.commas[k].find(j, K.identity(k), K.num_morphisms())]);
    }
    r.unit = std::move(eta);
    return r;
  }

  RanData<B> ran(const Functor& u, const Diagram<B>& x) const {
    check_input(u, x);
    const auto& K = *u.target;
    RanData<B> r{u, x, {u.target, {}, {}}, std::nullopt, {}, {}};
    for (std::size_t k = 0; k < K.num_objects(); ++k) {
      r.commas.push_back(coslice(u, k));
      auto d = restrict(r.commas.back().projection, x);
      r.limits.push_back(b_.limit(*d.shape, d.objects, d.morphisms));
      r.value.objects.push_back(r.limits.back().apex);
    }
    for (std::size_t m = 0; m < K.num_morphisms(); ++m) {
      auto s = K.source(m), t = K.target(m);
      const auto& ct = r.commas[t];
      std::vector<Morphism> legs;
      for (const auto& [j, f] : ct.entries)
        legs.push_back(r.limits[s].legs[r.commas[s].find(j, K.compose(f, m), K.num_morphisms())]);
      auto h = b_.factor_cone(r.limits[t], r.value.objects[s], legs);
      if (!h) throw std::logic_error("ran: pulled-back legs do not form a cone");
      r.value.morphisms.push_back(*h);
    }
    DiagramMap<B> eps{restrict(u, r.value), x, {}};
    const auto& J = *u.source;
    for (std::size_t j = 0; j < J.num_objects(); ++j) {
      auto k = u.obj(j);
      eps.components.push_back(r.limits[k].legs[r.commas[k].find(j, K.identity(k), K.num_morphisms())]);
    }
    r.counit = std::move(eps);
    return r;
  }

  /// The map u_!X → Y corresponding to g: X → u*Y, given componentwise.
  /// nullopt if g is not natural (the legs fail to form cocones).
  std::optional<DiagramMap<B>> lan_transpose(const LanData<B>& l, const Diagram<B>& y, const Component& g) const {
    if (wiring_ == KanWiring::LanFromRan) return std::nullopt;
    const auto& K = *l.u.target;
    DiagramMap<B> out{l.value, y, {}};
    for (std::size_t k = 0; k < K.num_objects(); ++k) {
      std::vector<Morphism> legs;
      for (const auto& [j, f] : l.commas[k].entries) legs.push_back(b_.compose(y.map(f), g(j)));
      auto h = b_.factor_cocone(l.colimits[k], y.at(k), legs);
      if (!h) return std::nullopt;
      out.components.push_back(*h);
    }
    return out;
  }
  std::optional<DiagramMap<B>> lan_transpose(const LanData<B>& l, const Diagram<B>& y, const DiagramMap<B>& g) const {
    return lan_transpose(l, y, [&](std::size_t j) { return g.at(j); });
  }

  /// The map Y → u_*X corresponding to g: u*Y → X.
  std::optional<DiagramMap<B>> ran_transpose(const RanData<B>& r, const Diagram<B>& y, const Component& g) const {
    const auto& K = *r.u.target;
    DiagramMap<B> out{y, r.value, {}};
    for (std::size_t k = 0; k < K.num_objects(); ++k) {
      std::vector<Morphism> legs;
      for (const auto& [j, f] : r.commas[k].entries) legs.push_back(b_.compose(g(j), y.map(f)));
      auto h = b_.factor_cone(r.limits[k], y.at(k), legs);
      if (!h) return std::nullopt;
      out.components.push_back(*h);
    }
    return out;
  }
  std::optional<DiagramMap<B>> ran_transpose(const RanData<B>& r, const Diagram<B>& y, const DiagramMap<B>& g) const {
    return ran_transpose(r, y, [&](std::size_t j) { return g.at(j); });
  }

  /// u_!(f) for f: X → X', transposing η' ∘ f.
  std::optional<DiagramMap<B>> lan_map(const LanData<B>& lx, const LanData<B>& ly, const DiagramMap<B>& f) const {
    if (!ly.unit) return std::nullopt;
    return lan_transpose(lx, ly.value, [&](std::size_t j) { return b_.compose(ly.unit->at(j), f.at(j)); });
  }
  /// u_*(f) for f: X → X', transposing f ∘ ε.
  std::optional<DiagramMap<B>> ran_map(const RanData<B>& rx, const RanData<B>& ry, const DiagramMap<B>& f) const {
    if (!rx.counit) return std::nullopt;
    return ran_transpose(ry, rx.value, [&](std::size_t j) { return b_.compose(f.at(j), rx.counit->at(j)); });
  }

  /// ε: u_!u*Y → Y, given the extension of u*Y.
  std::optional<DiagramMap<B>> lan_counit(const LanData<B>& l, const Diagram<B>& y) const {
    return lan_transpose(l, y, [&](std::size_t j) { return b_.identity(y.at(l.u.obj(j))); });
  }
  /// η: Y → u_*u*Y, given the extension of u*Y.
  std::optional<DiagramMap<B>> ran_unit(const RanData<B>& r, const Diagram<B>& y) const {
    return ran_transpose(r, y, [&](std::size_t j) { return b_.identity(y.at(r.u.obj(j))); });
  }

  /// The left mate p_!v*X → u*q_!X of a square with α: q∘v ⇒ u∘p, pasted
  /// from η^q, α* and the transposition along p.
  std::optional<DiagramMap<B>> left_mate(const Square& s, const LanData<B>& lq) const {
    if (!lq.unit) return std::nullopt;
    const auto& y = lq.value;
    auto vx = restrict(s.v, lq.input);
    auto lp = lan(s.p, vx);
    auto uy = restrict(s.u, y);
    return lan_transpose(lp, uy, [&](std::size_t d) {
      return b_.compose(y.map(s.alpha.components[d]), lq.unit->at(s.v.obj(d)));
    });
  }
  std::optional<DiagramMap<B>> left_mate(const Square& s, const Diagram<B>& x) const {
    return left_mate(s, lan(s.q, x));
  }

  /// The right mate u*q_*X → p_*v*X of a square with α: u∘p ⇒ q∘v.
  std::optional<DiagramMap<B>> right_mate(const Square& s, const RanData<B>& rq) const {
    if (!rq.counit) return std::nullopt;
    const auto& y = rq.value;
    auto vx = restrict(s.v, rq.input);
    auto rp = ran(s.p, vx);
    auto uy = restrict(s.u, y);
    return ran_transpose(rp, uy, [&](std::size_t d) {
      return b_.compose(rq.counit->at(s.v.obj(d)), y.map(s.alpha.components[d]));
    });
  }
  std::optional<DiagramMap<B>> right_mate(const Square& s, const Diagram<B>& x) const {
    return right_mate(s, ran(s.q, x));
  }

private:
  void check_input(const Functor& u, const Diagram<B>& x) const {
    if (!same_category(u.source, x.shape))
      throw CategoryError("Kan extension along a functor from '" + u.source->name() + "' of a diagram of shape '" +
                          x.shape->name() + "'");
  }

  LanData<B> broken_lan(const Functor& u, const Diagram<B>& x) const {
    auto r = ran(u, x);
    LanData<B> l{u, x, r.value, std::nullopt, {}, {}};
    DiagramMap<B> eta{x, restrict(u, r.value), {}};
    for (std::size_t j = 0; j < u.source->num_objects(); ++j) {
      auto h = b_.hom(x.at(j), r.value.at(u.obj(j)));
      if (h.empty()) return l;
      eta.components.push_back(h.front());
    }
    l.unit = std::move(eta);
    return l;
  }

  B b_;
  KanWiring wiring_;
};

}  // namespace dlab
