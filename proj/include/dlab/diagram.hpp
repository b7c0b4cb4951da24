#pragma once

// Diagrams J → C in a value category C and the maps between them, i.e. the
// categories C^J that make up the represented prederivator y(C).

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dlab/fincat.hpp"
#include "dlab/instances.hpp"

namespace dlab {

template <InstanceCategory B>
struct Diagram {
  using Object = typename B::Object;
  using Morphism = typename B::Morphism;

  CatPtr shape;
  std::vector<Object> objects;
  std::vector<Morphism> morphisms;

  const Object& at(std::size_t j) const { return objects[j]; }
  const Morphism& map(std::size_t m) const { return morphisms[m]; }
  bool operator==(const Diagram& o) const {
    return same_category(shape, o.shape) && objects == o.objects && morphisms == o.morphisms;
  }
};

/// A natural transformation between diagrams of the same shape.
template <InstanceCategory B>
struct DiagramMap {
  Diagram<B> source;
  Diagram<B> target;
  std::vector<typename B::Morphism> components;

  const typename B::Morphism& at(std::size_t j) const { return components[j]; }
};

template <InstanceCategory B>
std::vector<Violation> validate(const B& b, const Diagram<B>& x) {
  std::vector<Violation> out;
  const auto& J = *x.shape;
  if (x.objects.size() != J.num_objects() || x.morphisms.size() != J.num_morphisms()) {
    out.push_back({"shape", {J.name()}, "diagram has the wrong number of objects or morphisms"});
    return out;
  }
  for (std::size_t m = 0; m < J.num_morphisms(); ++m) {
    if (!(b.source(x.map(m)) == x.at(J.source(m))) || !(b.target(x.map(m)) == x.at(J.target(m))))
      out.push_back({"endpoints", {J.morphism_id(m)},
                     "value " + b.describe(x.map(m)) + " does not go " + b.describe(x.at(J.source(m))) + " -> " +
                         b.describe(x.at(J.target(m)))});
  }
  if (!out.empty()) return out;
  for (std::size_t o = 0; o < J.num_objects(); ++o)
    if (!(x.map(J.identity(o)) == b.identity(x.at(o))))
      out.push_back({"identity", {J.morphism_id(J.identity(o))}, "identity not sent to an identity"});
  for (std::size_t g = 0; g < J.num_morphisms(); ++g)
    for (std::size_t f = 0; f < J.num_morphisms(); ++f) {
      if (J.target(f) != J.source(g)) continue;
      auto h = J.compose(g, f);
      if (!(b.compose(x.map(g), x.map(f)) == x.map(h)))
        out.push_back({"composition",
                       {J.morphism_id(g), J.morphism_id(f), J.morphism_id(h)},
                       "X(" + J.morphism_id(g) + ") . X(" + J.morphism_id(f) + ") != X(" + J.morphism_id(h) + ")"});
    }
  return out;
}

template <InstanceCategory B>
std::vector<Violation> validate(const B& b, const DiagramMap<B>& f) {
  std::vector<Violation> out;
  const auto& J = *f.source.shape;
  if (!same_category(f.source.shape, f.target.shape) || f.components.size() != J.num_objects()) {
    out.push_back({"shape", {J.name()}, "map between diagrams of different shapes"});
    return out;
  }
  for (std::size_t o = 0; o < J.num_objects(); ++o)
    if (!(b.source(f.at(o)) == f.source.at(o)) || !(b.target(f.at(o)) == f.target.at(o)))
      out.push_back({"endpoints", {J.object_id(o)}, "component has the wrong endpoints"});
  if (!out.empty()) return out;
  for (std::size_t m = 0; m < J.num_morphisms(); ++m) {
    auto s = J.source(m), t = J.target(m);
    if (!(b.compose(f.at(t), f.source.map(m)) == b.compose(f.target.map(m), f.at(s))))
      out.push_back({"naturality", {J.morphism_id(m)}, "naturality square at " + J.morphism_id(m) + " fails"});
  }
  return out;
}

template <InstanceCategory B>
Diagram<B> constant_diagram(const B& b, const CatPtr& shape, const typename B::Object& x) {
  Diagram<B> d{shape, std::vector<typename B::Object>(shape->num_objects(), x), {}};
  d.morphisms.assign(shape->num_morphisms(), b.identity(x));
  return d;
}

/// u*X = X ∘ u.
template <InstanceCategory B>
Diagram<B> restrict(const Functor& u, const Diagram<B>& x) {
  if (!same_category(u.target, x.shape))
    throw CategoryError("restrict: functor lands in '" + u.target->name() + "' but the diagram has shape '" +
                        x.shape->name() + "'");
  Diagram<B> d{u.source, {}, {}};
  for (auto o : u.on_objects) d.objects.push_back(x.at(o));
  for (auto m : u.on_morphisms) d.morphisms.push_back(x.map(m));
  return d;
}

template <InstanceCategory B>
DiagramMap<B> restrict(const Functor& u, const DiagramMap<B>& f) {
  DiagramMap<B> r{restrict(u, f.source), restrict(u, f.target), {}};
  for (auto o : u.on_objects) r.components.push_back(f.at(o));
  return r;
}

/// α*: u*X → v*X for α: u ⇒ v.
template <InstanceCategory B>
DiagramMap<B> restrict(const NatTrans& a, const Diagram<B>& x) {
  DiagramMap<B> r{restrict(a.source, x), restrict(a.target, x), {}};
  for (auto c : a.components) r.components.push_back(x.map(c));
  return r;
}

template <InstanceCategory B>
DiagramMap<B> identity_map(const B& b, const Diagram<B>& x) {
  DiagramMap<B> r{x, x, {}};
  for (const auto& o : x.objects) r.components.push_back(b.identity(o));
  return r;
}

/// g ∘ f.
template <InstanceCategory B>
DiagramMap<B> compose(const B& b, const DiagramMap<B>& g, const DiagramMap<B>& f) {
  DiagramMap<B> r{f.source, g.target, {}};
  for (std::size_t o = 0; o < f.components.size(); ++o) r.components.push_back(b.compose(g.at(o), f.at(o)));
  return r;
}

template <InstanceCategory B>
bool equal_maps(const DiagramMap<B>& f, const DiagramMap<B>& g) {
  return f.components == g.components;
}

template <InstanceCategory B>
bool iso_check(const B& b, const typename B::Morphism& f) {
  return b.inverse(f).has_value();
}

/// Objects of the value categories are determined by their size, so they are
/// isomorphic iff equal; the witness is the identity.
template <InstanceCategory B>
std::optional<typename B::Morphism> iso_exists(const B& b, const typename B::Object& x, const typename B::Object& y) {
  if (x == y) return b.identity(x);
  return std::nullopt;
}

/// Componentwise inverse, or nullopt naming nothing if some component is not
/// invertible. The result is natural whenever f is.
template <InstanceCategory B>
std::optional<DiagramMap<B>> inverse(const B& b, const DiagramMap<B>& f) {
  DiagramMap<B> r{f.target, f.source, {}};
  for (const auto& c : f.components) {
    auto i = b.inverse(c);
    if (!i) return std::nullopt;
    r.components.push_back(*i);
  }
  return r;
}

/// Index of the first component that is not invertible, or npos.
template <InstanceCategory B>
std::size_t first_non_iso(const B& b, const DiagramMap<B>& f) {
  for (std::size_t o = 0; o < f.components.size(); ++o)
    if (!b.inverse(f.at(o))) return o;
  return npos;
}

/// All natural transformations X → Y, in lexicographic order of components.
/// Stops after `limit` results.
template <InstanceCategory B>
std::vector<DiagramMap<B>> enumerate_maps(const B& b, const Diagram<B>& x, const Diagram<B>& y,
                                          std::size_t limit = npos) {
  const auto& J = *x.shape;
  const auto n = J.num_objects();
  std::vector<std::vector<std::size_t>> checks(n);
  for (std::size_t m = 0; m < J.num_morphisms(); ++m)
    if (!J.is_identity(m)) checks[std::max(J.source(m), J.target(m))].push_back(m);
  std::vector<std::vector<typename B::Morphism>> homs;
  for (std::size_t o = 0; o < n; ++o) homs.push_back(b.hom(x.at(o), y.at(o)));
  std::vector<DiagramMap<B>> out;
  std::vector<std::size_t> pick(n, 0);
  auto ok = [&](std::size_t j) {
    for (auto m : checks[j]) {
      const auto& fs = homs[J.source(m)][pick[J.source(m)]];
      const auto& ft = homs[J.target(m)][pick[J.target(m)]];
      if (!(b.compose(ft, x.map(m)) == b.compose(y.map(m), fs))) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (out.size() >= limit) return;
    if (j == n) {
      DiagramMap<B> f{x, y, {}};
      for (std::size_t o = 0; o < n; ++o) f.components.push_back(homs[o][pick[o]]);
      out.push_back(std::move(f));
      return;
    }
    for (std::size_t i = 0; i < homs[j].size(); ++i) {
      pick[j] = i;
      if (ok(j)) self(self, j + 1);
    }
  };
  rec(rec, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Random generation

struct RandomOptions {
  std::size_t max_size = 2;  // object sizes / dimensions drawn from min_size..max_size
  std::size_t min_size = 0;
  std::size_t restarts = 200;
  std::size_t node_budget = 20000;  // search nodes per restart
};

/// A random functor J → C. Objects are drawn first; then morphism values are
/// chosen in index order by a randomized depth-first search in which each
/// candidate must agree with every composite already determined.
template <InstanceCategory B>
std::optional<Diagram<B>> random_diagram(const B& b, const CatPtr& shape, std::mt19937_64& rng,
                                         const RandomOptions& opt = {}) {
  using M = typename B::Morphism;
  const auto& J = *shape;
  auto pool = b.sample_objects(opt.max_size);
  pool.erase(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(std::min(opt.min_size, pool.size())));
  if (pool.empty()) return std::nullopt;
  const auto nm = J.num_morphisms();
  // composition constraints g∘f = h among non-identities, indexed by member
  struct Triple {
    std::size_t g, f, h;
  };
  std::vector<Triple> triples;
  std::vector<std::vector<std::size_t>> involving(nm);
  for (std::size_t g = 0; g < nm; ++g)
    for (std::size_t f = 0; f < nm; ++f)
      if (J.target(f) == J.source(g) && !J.is_identity(f) && !J.is_identity(g)) {
        auto h = J.compose(g, f);
        auto t = triples.size();
        triples.push_back({g, f, h});
        involving[g].push_back(t);
        if (f != g) involving[f].push_back(t);
        if (h != g && h != f) involving[h].push_back(t);
      }
  std::vector<std::size_t> order;
  for (std::size_t m = 0; m < nm; ++m)
    if (!J.is_identity(m)) order.push_back(m);
  constexpr std::size_t kMaxEnumerate = 4096;

  for (std::size_t attempt = 0; attempt < opt.restarts; ++attempt) {
    std::vector<typename B::Object> objs;
    for (std::size_t o = 0; o < J.num_objects(); ++o) objs.push_back(pool[rng() % pool.size()]);
    // redraw targets of arrows with no possible value (e.g. nonempty → empty)
    for (std::size_t round = 0; round < 4 * nm; ++round) {
      bool changed = false;
      for (auto m : order)
        if (b.hom_size(objs[J.source(m)], objs[J.target(m)]) == 0) {
          objs[J.target(m)] = pool[rng() % pool.size()];
          changed = true;
        }
      if (!changed) break;
    }
    std::vector<std::optional<M>> val(nm);
    for (std::size_t o = 0; o < J.num_objects(); ++o) val[J.identity(o)] = b.identity(objs[o]);
    auto consistent = [&](std::size_t m) {
      for (auto ti : involving[m]) {
        const auto& t = triples[ti];
        if (!val[t.g] || !val[t.f] || !val[t.h]) continue;
        if (!(b.compose(*val[t.g], *val[t.f]) == *val[t.h])) return false;
      }
      return true;
    };
    std::size_t nodes = 0;
    // Assigns every composite whose factors are known; false on a conflict.
    // Newly assigned morphisms are pushed on `trail` so they can be undone.
    std::vector<std::size_t> trail;
    auto propagate = [&](std::size_t m) {
      std::vector<std::size_t> work{m};
      while (!work.empty()) {
        auto cur = work.back();
        work.pop_back();
        if (!consistent(cur)) return false;
        for (auto ti : involving[cur]) {
          const auto& t = triples[ti];
          if (val[t.h] || !val[t.g] || !val[t.f]) continue;
          val[t.h] = b.compose(*val[t.g], *val[t.f]);
          trail.push_back(t.h);
          work.push_back(t.h);
        }
      }
      return true;
    };
    auto undo = [&](std::size_t mark) {
      while (trail.size() > mark) {
        val[trail.back()].reset();
        trail.pop_back();
      }
    };
    auto dfs = [&](auto&& self, std::size_t i) -> bool {
      while (i < order.size() && val[order[i]]) ++i;
      if (i == order.size()) return true;
      if (++nodes > opt.node_budget) return false;
      auto m = order[i];
      const auto& x = objs[J.source(m)];
      const auto& y = objs[J.target(m)];
      std::vector<M> cands;
      if (b.hom_size(x, y) <= kMaxEnumerate) {
        cands = b.hom(x, y);
        std::shuffle(cands.begin(), cands.end(), rng);
      } else {
        for (std::size_t k = 0; k < 64; ++k) cands.push_back(*b.random_morphism(x, y, rng));
      }
      for (auto& c : cands) {
        auto mark = trail.size();
        val[m] = std::move(c);
        trail.push_back(m);
        if (propagate(m) && self(self, i + 1)) return true;
        undo(mark);
        if (nodes > opt.node_budget) break;
      }
      return false;
    };
    if (!dfs(dfs, 0)) continue;
    Diagram<B> d{shape, std::move(objs), {}};
    for (auto& v : val) d.morphisms.push_back(*v);
    return d;
  }
  return std::nullopt;
}

/// A random natural transformation X → Y by randomized backtracking.
template <InstanceCategory B>
std::optional<DiagramMap<B>> random_map(const B& b, const Diagram<B>& x, const Diagram<B>& y, std::mt19937_64& rng,
                                        std::size_t attempts = 64, std::size_t restarts = 50) {
  const auto& J = *x.shape;
  const auto n = J.num_objects();
  std::vector<std::vector<std::size_t>> checks(n);
  for (std::size_t m = 0; m < J.num_morphisms(); ++m)
    if (!J.is_identity(m)) checks[std::max(J.source(m), J.target(m))].push_back(m);
  for (std::size_t r = 0; r < restarts; ++r) {
    DiagramMap<B> f{x, y, {}};
    bool failed = false;
    for (std::size_t j = 0; j < n && !failed; ++j) {
      bool found = false;
      for (std::size_t k = 0; k < attempts && !found; ++k) {
        auto c = b.random_morphism(x.at(j), y.at(j), rng);
        if (!c) break;
        f.components.push_back(*c);
        found = true;
        for (auto m : checks[j])
          if (!(b.compose(f.at(J.target(m)), x.map(m)) == b.compose(y.map(m), f.at(J.source(m))))) {
            found = false;
            break;
          }
        if (!found) f.components.pop_back();
      }
      failed = !found;
    }
    if (!failed) return f;
  }
  return std::nullopt;
}

template <InstanceCategory B>
std::string describe(const B& b, const Diagram<B>& x) {
  std::string s = x.shape->name() + "{";
  for (std::size_t o = 0; o < x.objects.size(); ++o)
    s += (o ? ", " : "") + x.shape->object_id(o) + ": " + b.describe(x.at(o));
  for (std::size_t m = 0; m < x.morphisms.size(); ++m)
    if (!x.shape->is_identity(m)) s += ", " + x.shape->morphism_id(m) + ": " + b.describe(x.map(m));
  return s + "}";
}

template <InstanceCategory B>
std::string describe(const B& b, const DiagramMap<B>& f) {
  std::string s = f.source.shape->name() + "[";
  for (std::size_t o = 0; o < f.components.size(); ++o)
    s += (o ? ", " : "") + f.source.shape->object_id(o) + ": " + b.describe(f.at(o));
  return s + "]";
}

}  // namespace dlab
