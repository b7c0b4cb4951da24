#include "dlab/fincat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace dlab {

namespace {

std::size_t lookup_id(const std::vector<std::string>& ids, const std::string& id, const char* what) {
  auto it = std::find(ids.begin(), ids.end(), id);
  if (it == ids.end()) throw CategoryError(std::string("unknown ") + what + " '" + id + "'");
  return static_cast<std::size_t>(it - ids.begin());
}

std::string tuple_id(const std::vector<std::string>& parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += parts[i];
  }
  return s + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// Builder

FinCategory::Builder& FinCategory::Builder::object(const std::string& id) {
  objects_.push_back(id);
  return *this;
}

FinCategory::Builder& FinCategory::Builder::morphism(const std::string& id, const std::string& src,
                                                     const std::string& dst) {
  morphisms_.emplace_back(id, src, dst);
  return *this;
}

FinCategory::Builder& FinCategory::Builder::identity(const std::string& obj, const std::string& mor) {
  bool declared = std::any_of(morphisms_.begin(), morphisms_.end(),
                              [&](const auto& m) { return std::get<0>(m) == mor; });
  if (!declared) morphisms_.emplace_back(mor, obj, obj);
  identities_.emplace_back(obj, mor);
  return *this;
}

FinCategory::Builder& FinCategory::Builder::compose(const std::string& g, const std::string& f,
                                                    const std::string& h) {
  composites_.emplace_back(g, f, h);
  return *this;
}

FinCategory FinCategory::Builder::build_unchecked() const {
  std::vector<MorphismDecl> mors;
  std::vector<std::string> mor_ids;
  for (const auto& [id, s, t] : morphisms_) {
    mors.push_back({id, lookup_id(objects_, s, "object"), lookup_id(objects_, t, "object")});
    mor_ids.push_back(id);
  }
  std::vector<std::size_t> ids(objects_.size(), npos);
  for (const auto& [o, m] : identities_) ids[lookup_id(objects_, o, "object")] = lookup_id(mor_ids, m, "morphism");
  const std::size_t n = mors.size();
  std::vector<std::int32_t> table(n * n, -1);
  for (std::size_t o = 0; o < ids.size(); ++o) {
    if (ids[o] == npos) continue;
    for (std::size_t m = 0; m < n; ++m) {
      if (mors[m].target == o) table[ids[o] * n + m] = static_cast<std::int32_t>(m);
      if (mors[m].source == o) table[m * n + ids[o]] = static_cast<std::int32_t>(m);
    }
  }
  for (const auto& [g, f, h] : composites_) {
    auto gi = lookup_id(mor_ids, g, "morphism");
    auto fi = lookup_id(mor_ids, f, "morphism");
    table[gi * n + fi] = static_cast<std::int32_t>(lookup_id(mor_ids, h, "morphism"));
  }
  return FinCategory(name_, objects_, std::move(mors), std::move(ids), std::move(table));
}

CatPtr FinCategory::Builder::build() const {
  auto c = std::make_shared<FinCategory>(build_unchecked());
  auto vs = validate(*c);
  if (!vs.empty()) throw CategoryError("invalid category '" + name_ + "': " + to_string(vs));
  return c;
}

// ---------------------------------------------------------------------------
// FinCategory

FinCategory::FinCategory(std::string name, std::vector<std::string> objects, std::vector<MorphismDecl> morphisms,
                         std::vector<std::size_t> identities, std::vector<std::int32_t> table)
    : name_(std::move(name)),
      objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      identities_(std::move(identities)),
      table_(std::move(table)) {
  identities_.resize(objects_.size(), npos);
  index_homs();
}

void FinCategory::index_homs() {
  const std::size_t n = objects_.size();
  homs_.assign(n * n, {});
  for (std::size_t m = 0; m < morphisms_.size(); ++m) {
    const auto& d = morphisms_[m];
    if (d.source < n && d.target < n) homs_[d.source * n + d.target].push_back(m);
  }
}

std::size_t FinCategory::compose(std::size_t g, std::size_t f) const {
  auto v = table_entry(g, f);
  if (v < 0) {
    throw CategoryError("composite " + morphisms_[g].id + " . " + morphisms_[f].id + " undefined in '" + name_ +
                        "'");
  }
  return static_cast<std::size_t>(v);
}

std::size_t FinCategory::find_object(const std::string& id) const {
  auto it = std::find(objects_.begin(), objects_.end(), id);
  return it == objects_.end() ? npos : static_cast<std::size_t>(it - objects_.begin());
}

std::size_t FinCategory::find_morphism(const std::string& id) const {
  for (std::size_t m = 0; m < morphisms_.size(); ++m)
    if (morphisms_[m].id == id) return m;
  return npos;
}

std::vector<std::size_t> FinCategory::object_coords(std::size_t obj) const {
  std::vector<std::size_t> c(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    auto r = factors_[i]->num_objects();
    c[i] = obj % r;
    obj /= r;
  }
  return c;
}

std::vector<std::size_t> FinCategory::morphism_coords(std::size_t mor) const {
  std::vector<std::size_t> c(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    auto r = factors_[i]->num_morphisms();
    c[i] = mor % r;
    mor /= r;
  }
  return c;
}

std::size_t FinCategory::object_from_coords(const std::vector<std::size_t>& c) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i]->num_objects() + c[i];
  return idx;
}

std::size_t FinCategory::morphism_from_coords(const std::vector<std::size_t>& c) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i]->num_morphisms() + c[i];
  return idx;
}

std::int32_t FinCategory::factor_entry(std::size_t g, std::size_t f) const {
  if (factors_.empty() || morphisms_[f].target != morphisms_[g].source) return -1;
  std::size_t out = 0, mul = 1;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    const auto& c = *factors_[i];
    auto n = c.num_morphisms();
    auto h = c.table_entry(g % n, f % n);
    if (h < 0) return -1;
    out += static_cast<std::size_t>(h) * mul;
    mul *= n;
    g /= n;
    f /= n;
  }
  return static_cast<std::int32_t>(out);
}

bool operator==(const FinCategory& a, const FinCategory& b) {
  if (a.objects_ != b.objects_ || a.identities_ != b.identities_) return false;
  if (a.morphisms_.size() != b.morphisms_.size()) return false;
  for (std::size_t m = 0; m < a.morphisms_.size(); ++m) {
    const auto &x = a.morphisms_[m], &y = b.morphisms_[m];
    if (x.id != y.id || x.source != y.source || x.target != y.target) return false;
  }
  if (!a.table_.empty() && !b.table_.empty()) return a.table_ == b.table_;
  if (a.factors_.size() == b.factors_.size() && !a.factors_.empty()) {
    bool same = true;
    for (std::size_t i = 0; same && i < a.factors_.size(); ++i) same = same_category(a.factors_[i], b.factors_[i]);
    if (same) return true;
  }
  const auto n = a.morphisms_.size();
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f)
      if (a.table_entry(g, f) != b.table_entry(g, f)) return false;
  return true;
}

bool same_category(const CatPtr& a, const CatPtr& b) { return a == b || (a && b && *a == *b); }

std::vector<Violation> validate(const FinCategory& c) {
  std::vector<Violation> out;
  const auto n = c.num_morphisms();
  const auto& mors = c.morphisms();

  std::map<std::string, int> seen_o, seen_m;
  for (const auto& o : c.objects())
    if (seen_o[o]++ == 1) out.push_back({"unique-ids", {o}, "duplicate object id '" + o + "'"});
  for (const auto& m : mors)
    if (seen_m[m.id]++ == 1) out.push_back({"unique-ids", {m.id}, "duplicate morphism id '" + m.id + "'"});
  for (const auto& m : mors)
    if (m.source >= c.num_objects() || m.target >= c.num_objects())
      out.push_back({"endpoints", {m.id}, "morphism '" + m.id + "' has an unknown endpoint"});
  if (!out.empty()) return out;

  bool ids_ok = true;
  for (std::size_t o = 0; o < c.num_objects(); ++o) {
    auto id = c.identity(o);
    if (id == npos || id >= n) {
      out.push_back({"identity", {c.object_id(o)}, "object '" + c.object_id(o) + "' has no identity"});
      ids_ok = false;
    } else if (mors[id].source != o || mors[id].target != o) {
      out.push_back({"identity", {c.object_id(o), mors[id].id}, "identity of '" + c.object_id(o) + "' is not a loop"});
      ids_ok = false;
    }
  }

  bool closed = true;
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t f = 0; f < n; ++f) {
      auto h = c.table_entry(g, f);
      bool composable = mors[f].target == mors[g].source;
      if (composable && h < 0) {
        out.push_back({"closure", {mors[g].id, mors[f].id}, "no composite for " + mors[g].id + " . " + mors[f].id});
        closed = false;
      } else if (!composable && h >= 0) {
        out.push_back({"closure", {mors[g].id, mors[f].id},
                       "composite given for non-composable " + mors[g].id + " . " + mors[f].id});
        closed = false;
      } else if (composable) {
        if (static_cast<std::size_t>(h) >= n) {
          out.push_back({"closure", {mors[g].id, mors[f].id}, "composite out of range"});
          closed = false;
        } else if (mors[h].source != mors[f].source || mors[h].target != mors[g].target) {
          out.push_back({"closure", {mors[g].id, mors[f].id, mors[h].id},
                         mors[g].id + " . " + mors[f].id + " = " + mors[h].id + " has wrong endpoints"});
          closed = false;
        }
      }
    }
  }
  if (!closed) return out;

  if (ids_ok) {
    for (std::size_t f = 0; f < n; ++f) {
      auto l = c.identity(mors[f].target), r = c.identity(mors[f].source);
      if (c.compose(l, f) != f) out.push_back({"left-unit", {mors[l].id, mors[f].id}, "id . f != f"});
      if (c.compose(f, r) != f) out.push_back({"right-unit", {mors[f].id, mors[r].id}, "f . id != f"});
    }
  }
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t g = 0; g < n; ++g) {
      if (mors[f].target != mors[g].source) continue;
      auto gf = c.compose(g, f);
      for (std::size_t h = 0; h < n; ++h) {
        if (mors[g].target != mors[h].source) continue;
        if (c.compose(h, gf) != c.compose(c.compose(h, g), f))
          out.push_back({"associativity", {mors[h].id, mors[g].id, mors[f].id},
                         "(" + mors[h].id + " . " + mors[g].id + ") . " + mors[f].id + " != " + mors[h].id +
                             " . (" + mors[g].id + " . " + mors[f].id + ")"});
      }
    }
  return out;
}

std::string to_string(const std::vector<Violation>& vs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) os << "; ";
    os << vs[i].law << ": " << vs[i].message;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Functors and natural transformations

std::vector<Violation> validate(const Functor& f) {
  std::vector<Violation> out;
  const auto &C = *f.source, &D = *f.target;
  if (f.on_objects.size() != C.num_objects() || f.on_morphisms.size() != C.num_morphisms())
    return {{"shape", {}, "functor maps have the wrong size"}};
  for (auto o : f.on_objects)
    if (o >= D.num_objects()) return {{"shape", {}, "object image out of range"}};
  for (auto m : f.on_morphisms)
    if (m >= D.num_morphisms()) return {{"shape", {}, "morphism image out of range"}};
  for (std::size_t m = 0; m < C.num_morphisms(); ++m) {
    auto im = f.mor(m);
    if (D.source(im) != f.obj(C.source(m)) || D.target(im) != f.obj(C.target(m)))
      out.push_back({"endpoints", {C.morphism_id(m)}, "image of " + C.morphism_id(m) + " has wrong endpoints"});
  }
  if (!out.empty()) return out;
  for (std::size_t o = 0; o < C.num_objects(); ++o)
    if (f.mor(C.identity(o)) != D.identity(f.obj(o)))
      out.push_back({"identity", {C.object_id(o)}, "identity of " + C.object_id(o) + " not preserved"});
  for (std::size_t g = 0; g < C.num_morphisms(); ++g)
    for (std::size_t h = 0; h < C.num_morphisms(); ++h) {
      if (C.target(h) != C.source(g)) continue;
      if (f.mor(C.compose(g, h)) != D.compose(f.mor(g), f.mor(h)))
        out.push_back({"composition", {C.morphism_id(g), C.morphism_id(h)},
                       "F(" + C.morphism_id(g) + " . " + C.morphism_id(h) + ") != F(g) . F(f)"});
    }
  return out;
}

std::string describe(const Functor& f) {
  const auto &C = *f.source, &D = *f.target;
  std::string s = C.name() + "->" + D.name() + "{";
  bool first = true;
  for (std::size_t o = 0; o < C.num_objects(); ++o) {
    s += (first ? "" : ",") + C.object_id(o) + ":" + D.object_id(f.obj(o));
    first = false;
  }
  for (std::size_t m = 0; m < C.num_morphisms(); ++m)
    if (!C.is_identity(m)) s += "," + C.morphism_id(m) + ":" + D.morphism_id(f.mor(m));
  return s + "}";
}

Functor identity_functor(const CatPtr& c) {
  Functor f{c, c, {}, {}};
  f.on_objects.resize(c->num_objects());
  f.on_morphisms.resize(c->num_morphisms());
  std::iota(f.on_objects.begin(), f.on_objects.end(), 0);
  std::iota(f.on_morphisms.begin(), f.on_morphisms.end(), 0);
  return f;
}

Functor compose(const Functor& g, const Functor& f) {
  if (!same_category(f.target, g.source)) throw CategoryError("functors are not composable");
  Functor h{f.source, g.target, {}, {}};
  for (auto o : f.on_objects) h.on_objects.push_back(g.obj(o));
  for (auto m : f.on_morphisms) h.on_morphisms.push_back(g.mor(m));
  return h;
}

bool operator==(const Functor& a, const Functor& b) {
  return same_category(a.source, b.source) && same_category(a.target, b.target) && a.on_objects == b.on_objects &&
         a.on_morphisms == b.on_morphisms;
}

Functor point(const CatPtr& c, std::size_t obj) {
  return Functor{terminal_category(), c, {obj}, {c->identity(obj)}};
}

Functor collapse(const CatPtr& c) {
  return Functor{c, terminal_category(), std::vector<std::size_t>(c->num_objects(), 0),
                 std::vector<std::size_t>(c->num_morphisms(), 0)};
}

Functor constant_functor(const CatPtr& src, const CatPtr& tgt, std::size_t obj) {
  return Functor{src, tgt, std::vector<std::size_t>(src->num_objects(), obj),
                 std::vector<std::size_t>(src->num_morphisms(), tgt->identity(obj))};
}

Functor opposite(const Functor& f) {
  return Functor{opposite(f.source), opposite(f.target), f.on_objects, f.on_morphisms};
}

std::vector<Violation> validate(const NatTrans& t) {
  std::vector<Violation> out;
  const auto &C = *t.source.source, &D = *t.source.target;
  if (!same_category(t.source.source, t.target.source) || !same_category(t.source.target, t.target.target))
    return {{"parallel", {}, "functors are not parallel"}};
  if (t.components.size() != C.num_objects()) return {{"shape", {}, "wrong number of components"}};
  for (std::size_t o = 0; o < C.num_objects(); ++o) {
    auto c = t.components[o];
    if (c >= D.num_morphisms() || D.source(c) != t.source.obj(o) || D.target(c) != t.target.obj(o))
      out.push_back({"component", {C.object_id(o)}, "component at " + C.object_id(o) + " has wrong type"});
  }
  if (!out.empty()) return out;
  for (std::size_t m = 0; m < C.num_morphisms(); ++m) {
    auto a = C.source(m), b = C.target(m);
    if (D.compose(t.target.mor(m), t.components[a]) != D.compose(t.components[b], t.source.mor(m)))
      out.push_back({"naturality", {C.morphism_id(m)}, "naturality square at " + C.morphism_id(m) + " fails"});
  }
  return out;
}

std::vector<NatTrans> enumerate_nat_trans(const Functor& f, const Functor& g) {
  if (!same_category(f.source, g.source) || !same_category(f.target, g.target))
    throw CategoryError("enumerate_nat_trans: functors are not parallel");
  const auto &C = *f.source, &D = *f.target;
  const auto n = C.num_objects();
  std::vector<std::vector<std::size_t>> checks(n);
  for (std::size_t m = 0; m < C.num_morphisms(); ++m)
    checks[std::max(C.source(m), C.target(m))].push_back(m);

  std::vector<NatTrans> out;
  std::vector<std::size_t> comp(n);
  std::function<void(std::size_t)> go = [&](std::size_t o) {
    if (o == n) {
      out.push_back(NatTrans{f, g, comp});
      return;
    }
    for (auto c : D.hom(f.obj(o), g.obj(o))) {
      comp[o] = c;
      bool ok = true;
      for (auto m : checks[o]) {
        auto a = C.source(m), b = C.target(m);
        if (D.compose(g.mor(m), comp[a]) != D.compose(comp[b], f.mor(m))) {
          ok = false;
          break;
        }
      }
      if (ok) go(o + 1);
    }
  };
  go(0);
  return out;
}

std::vector<Functor> enumerate_functors(const CatPtr& c, const CatPtr& d) {
  const auto &C = *c, &D = *d;
  const auto nm = C.num_morphisms();
  // Composable pairs are checked once all three entries are assigned.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> checks(nm);
  for (std::size_t g = 0; g < nm; ++g)
    for (std::size_t f = 0; f < nm; ++f) {
      if (C.target(f) != C.source(g)) continue;
      auto h = C.compose(g, f);
      checks[std::max({g, f, h})].emplace_back(g, f);
    }
  std::vector<Functor> out;
  std::vector<std::size_t> obj(C.num_objects()), mor(nm);
  std::function<void(std::size_t)> go_mor = [&](std::size_t m) {
    if (m == nm) {
      out.push_back(Functor{c, d, obj, mor});
      return;
    }
    auto try_value = [&](std::size_t v) {
      mor[m] = v;
      for (auto [g, f] : checks[m])
        if (mor[C.compose(g, f)] != D.compose(mor[g], mor[f])) return;
      go_mor(m + 1);
    };
    if (C.is_identity(m)) {
      try_value(D.identity(obj[C.source(m)]));
    } else {
      for (auto v : D.hom(obj[C.source(m)], obj[C.target(m)])) try_value(v);
    }
  };
  std::function<void(std::size_t)> go_obj = [&](std::size_t o) {
    if (o == C.num_objects()) {
      go_mor(0);
      return;
    }
    for (std::size_t v = 0; v < D.num_objects(); ++v) {
      obj[o] = v;
      go_obj(o + 1);
    }
  };
  go_obj(0);
  return out;
}

// ---------------------------------------------------------------------------
// Constructions

CatPtr terminal_category() {
  static const CatPtr e = FinCategory::Builder("e").object("*").identity("*", "id").build();
  return e;
}

CatPtr empty_category() {
  static const CatPtr z = std::make_shared<FinCategory>("empty", std::vector<std::string>{},
                                                        std::vector<MorphismDecl>{}, std::vector<std::size_t>{},
                                                        std::vector<std::int32_t>{});
  return z;
}

// above this many morphisms a product keeps no table (it would need nm^2 entries)
constexpr std::size_t kMaxDenseProduct = 1024;

CatPtr product(const std::vector<CatPtr>& fs) {
  if (fs.empty()) throw CategoryError("product of zero factors");
  std::size_t no = 1, nm = 1;
  std::string name;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    no *= fs[i]->num_objects();
    nm *= fs[i]->num_morphisms();
    name += (i ? " x " : "") + fs[i]->name();
  }
  auto cat = std::make_shared<FinCategory>();
  cat->name_ = name;
  cat->factors_ = fs;
  cat->objects_.resize(no);
  for (std::size_t o = 0; o < no; ++o) {
    auto c = cat->object_coords(o);
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < fs.size(); ++i) parts.push_back(fs[i]->object_id(c[i]));
    cat->objects_[o] = tuple_id(parts);
  }
  cat->morphisms_.resize(nm);
  for (std::size_t m = 0; m < nm; ++m) {
    auto c = cat->morphism_coords(m);
    std::vector<std::string> parts;
    std::vector<std::size_t> s(fs.size()), t(fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i) {
      parts.push_back(fs[i]->morphism_id(c[i]));
      s[i] = fs[i]->source(c[i]);
      t[i] = fs[i]->target(c[i]);
    }
    cat->morphisms_[m] = {tuple_id(parts), cat->object_from_coords(s), cat->object_from_coords(t)};
  }
  cat->identities_.resize(no);
  for (std::size_t o = 0; o < no; ++o) {
    auto c = cat->object_coords(o);
    for (std::size_t i = 0; i < fs.size(); ++i) c[i] = fs[i]->identity(c[i]);
    cat->identities_[o] = cat->morphism_from_coords(c);
  }
  cat->index_homs();
  if (nm > kMaxDenseProduct) return cat;
  cat->table_.assign(nm * nm, -1);
  std::vector<std::vector<std::size_t>> coords(nm);
  for (std::size_t m = 0; m < nm; ++m) coords[m] = cat->morphism_coords(m);
  std::vector<std::size_t> h(fs.size());
  for (std::size_t g = 0; g < nm; ++g) {
    for (std::size_t f = 0; f < nm; ++f) {
      if (cat->morphisms_[f].target != cat->morphisms_[g].source) continue;
      for (std::size_t i = 0; i < fs.size(); ++i) h[i] = fs[i]->compose(coords[g][i], coords[f][i]);
      cat->table_[g * nm + f] = static_cast<std::int32_t>(cat->morphism_from_coords(h));
    }
  }
  return cat;
}

Functor projection(const CatPtr& prod, std::size_t i) {
  if (i >= prod->factors().size()) throw CategoryError("projection index out of range");
  Functor f{prod, prod->factors()[i], {}, {}};
  for (std::size_t o = 0; o < prod->num_objects(); ++o) f.on_objects.push_back(prod->object_coords(o)[i]);
  for (std::size_t m = 0; m < prod->num_morphisms(); ++m) f.on_morphisms.push_back(prod->morphism_coords(m)[i]);
  return f;
}

Functor pairing(const CatPtr& prod, const CatPtr& src, const std::vector<Functor>& comps) {
  if (comps.size() != prod->factors().size()) throw CategoryError("pairing: wrong number of components");
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (!same_category(comps[i].source, src) || !same_category(comps[i].target, prod->factors()[i]))
      throw CategoryError("pairing: component " + std::to_string(i) + " has the wrong type");
  Functor f{src, prod, {}, {}};
  std::vector<std::size_t> c(comps.size());
  for (std::size_t o = 0; o < src->num_objects(); ++o) {
    for (std::size_t i = 0; i < comps.size(); ++i) c[i] = comps[i].obj(o);
    f.on_objects.push_back(prod->object_from_coords(c));
  }
  for (std::size_t m = 0; m < src->num_morphisms(); ++m) {
    for (std::size_t i = 0; i < comps.size(); ++i) c[i] = comps[i].mor(m);
    f.on_morphisms.push_back(prod->morphism_from_coords(c));
  }
  return f;
}

Functor product_functor(const CatPtr& src, const CatPtr& tgt, const std::vector<Functor>& comps) {
  std::vector<Functor> legs;
  for (std::size_t i = 0; i < comps.size(); ++i) legs.push_back(compose(comps[i], projection(src, i)));
  return pairing(tgt, src, legs);
}

BinaryProduct product(const CatPtr& c, const CatPtr& d) {
  auto p = product(std::vector<CatPtr>{c, d});
  return {p, projection(p, 0), projection(p, 1)};
}

Functor diagonal(const CatPtr& c) {
  auto p = product(std::vector<CatPtr>{c, c});
  return pairing(p, c, {identity_functor(c), identity_functor(c)});
}

CatPtr opposite(const CatPtr& c) {
  const auto n = c->num_morphisms();
  auto op = std::make_shared<FinCategory>();
  const auto& nm = c->name();
  op->name_ = nm.size() > 3 && nm.compare(nm.size() - 3, 3, "^op") == 0 ? nm.substr(0, nm.size() - 3) : nm + "^op";
  op->objects_ = c->objects();
  op->identities_.resize(c->num_objects());
  for (std::size_t o = 0; o < c->num_objects(); ++o) op->identities_[o] = c->identity(o);
  op->morphisms_ = c->morphisms();
  for (auto& m : op->morphisms_) std::swap(m.source, m.target);
  if (!c->is_product() || n <= kMaxDenseProduct) {
    op->table_.assign(n * n, -1);
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t f = 0; f < n; ++f) op->table_[g * n + f] = c->table_entry(f, g);
  }
  for (const auto& f : c->factors()) op->factors_.push_back(opposite(f));
  op->index_homs();
  return op;
}

Coproduct coproduct(const CatPtr& c, const CatPtr& d) {
  const auto o1 = c->num_objects(), m1 = c->num_morphisms();
  std::vector<std::string> objs;
  for (const auto& o : c->objects()) objs.push_back("(0," + o + ")");
  for (const auto& o : d->objects()) objs.push_back("(1," + o + ")");
  std::vector<MorphismDecl> mors;
  for (const auto& m : c->morphisms()) mors.push_back({"(0," + m.id + ")", m.source, m.target});
  for (const auto& m : d->morphisms()) mors.push_back({"(1," + m.id + ")", m.source + o1, m.target + o1});
  std::vector<std::size_t> ids;
  for (std::size_t o = 0; o < c->num_objects(); ++o) ids.push_back(c->identity(o));
  for (std::size_t o = 0; o < d->num_objects(); ++o) ids.push_back(d->identity(o) + m1);
  const auto n = mors.size();
  std::vector<std::int32_t> table(n * n, -1);
  for (std::size_t g = 0; g < m1; ++g)
    for (std::size_t f = 0; f < m1; ++f) table[g * n + f] = c->table_entry(g, f);
  for (std::size_t g = 0; g < d->num_morphisms(); ++g)
    for (std::size_t f = 0; f < d->num_morphisms(); ++f) {
      auto h = d->table_entry(g, f);
      table[(g + m1) * n + f + m1] = h < 0 ? -1 : static_cast<std::int32_t>(h + m1);
    }
  auto cat = std::make_shared<FinCategory>(c->name() + " + " + d->name(), objs, mors, ids, table);
  Functor i1{c, cat, {}, {}}, i2{d, cat, {}, {}};
  for (std::size_t o = 0; o < o1; ++o) i1.on_objects.push_back(o);
  for (std::size_t m = 0; m < m1; ++m) i1.on_morphisms.push_back(m);
  for (std::size_t o = 0; o < d->num_objects(); ++o) i2.on_objects.push_back(o + o1);
  for (std::size_t m = 0; m < d->num_morphisms(); ++m) i2.on_morphisms.push_back(m + m1);
  return {cat, i1, i2};
}

Functor codiagonal(const Coproduct& cp, const CatPtr& c) {
  Functor f{cp.category, c, {}, {}};
  for (int k = 0; k < 2; ++k) {
    for (std::size_t o = 0; o < c->num_objects(); ++o) f.on_objects.push_back(o);
  }
  for (int k = 0; k < 2; ++k) {
    for (std::size_t m = 0; m < c->num_morphisms(); ++m) f.on_morphisms.push_back(m);
  }
  return f;
}

// ---------------------------------------------------------------------------
// Leaves and regrouping

namespace {

void collect_leaves(const CatPtr& c, std::vector<CatPtr>& out) {
  if (!c->is_product()) {
    out.push_back(c);
    return;
  }
  for (const auto& f : c->factors()) collect_leaves(f, out);
}

template <bool Objects>
void leaf_coords(const FinCategory& c, std::size_t idx, std::vector<std::size_t>& out) {
  if (!c.is_product()) {
    out.push_back(idx);
    return;
  }
  auto coords = Objects ? c.object_coords(idx) : c.morphism_coords(idx);
  for (std::size_t i = 0; i < coords.size(); ++i) leaf_coords<Objects>(*c.factors()[i], coords[i], out);
}

template <bool Objects>
std::size_t from_leaf_coords(const FinCategory& c, const std::vector<std::size_t>& leaf, std::size_t& pos) {
  if (!c.is_product()) return leaf[pos++];
  std::vector<std::size_t> coords;
  for (const auto& f : c.factors()) coords.push_back(from_leaf_coords<Objects>(*f, leaf, pos));
  return Objects ? c.object_from_coords(coords) : c.morphism_from_coords(coords);
}

}  // namespace

std::vector<CatPtr> leaves(const CatPtr& c) {
  std::vector<CatPtr> out;
  collect_leaves(c, out);
  return out;
}

Functor permute_leaves(const CatPtr& src, const CatPtr& dst, const std::vector<std::size_t>& perm) {
  auto ls = leaves(src), ld = leaves(dst);
  if (ls.size() != ld.size() || perm.size() != ld.size()) throw CategoryError("permute_leaves: leaf count mismatch");
  for (std::size_t i = 0; i < ld.size(); ++i)
    if (!same_category(ld[i], ls[perm[i]]))
      throw CategoryError("permute_leaves: leaf " + std::to_string(i) + " of '" + dst->name() +
                          "' does not match leaf " + std::to_string(perm[i]) + " of '" + src->name() + "'");
  Functor f{src, dst, {}, {}};
  std::vector<std::size_t> lc, pc(perm.size());
  for (std::size_t o = 0; o < src->num_objects(); ++o) {
    lc.clear();
    leaf_coords<true>(*src, o, lc);
    for (std::size_t i = 0; i < perm.size(); ++i) pc[i] = lc[perm[i]];
    std::size_t pos = 0;
    f.on_objects.push_back(from_leaf_coords<true>(*dst, pc, pos));
  }
  for (std::size_t m = 0; m < src->num_morphisms(); ++m) {
    lc.clear();
    leaf_coords<false>(*src, m, lc);
    for (std::size_t i = 0; i < perm.size(); ++i) pc[i] = lc[perm[i]];
    std::size_t pos = 0;
    f.on_morphisms.push_back(from_leaf_coords<false>(*dst, pc, pos));
  }
  return f;
}

Functor regroup(const CatPtr& src, const CatPtr& dst) {
  std::vector<std::size_t> perm(leaves(dst).size());
  std::iota(perm.begin(), perm.end(), 0);
  return permute_leaves(src, dst, perm);
}

// ---------------------------------------------------------------------------
// Comma categories

namespace {

// Shared construction: objects (j, f) where f ∈ hom(u(j), k) (forward) or
// hom(k, u(j)) (backward); g: (j,f) → (j',f') iff f' ∘ u(g) = f (forward) or
// u(g) ∘ f = f' (backward).
CommaCategory build_comma(const Functor& u, std::size_t k, bool forward) {
  const auto &J = *u.source, &K = *u.target;
  CommaCategory cc;
  cc.lookup.assign(J.num_objects() * K.num_morphisms(), -1);
  std::vector<std::string> objs;
  for (std::size_t j = 0; j < J.num_objects(); ++j) {
    const auto& hs = forward ? K.hom(u.obj(j), k) : K.hom(k, u.obj(j));
    for (auto f : hs) {
      cc.lookup[j * K.num_morphisms() + f] = static_cast<std::int64_t>(cc.entries.size());
      cc.entries.emplace_back(j, f);
      objs.push_back("(" + J.object_id(j) + "," + K.morphism_id(f) + ")");
    }
  }
  const auto n = cc.entries.size();
  std::vector<MorphismDecl> mors;
  std::vector<std::size_t> under;  // J-morphism of each comma morphism
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> index;
  std::vector<std::size_t> ids(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto [j, f] = cc.entries[a];
      auto [j2, f2] = cc.entries[b];
      for (auto g : J.hom(j, j2)) {
        bool ok = forward ? K.compose(f2, u.mor(g)) == f : K.compose(u.mor(g), f) == f2;
        if (!ok) continue;
        index[{a, b, g}] = mors.size();
        if (a == b && g == J.identity(j)) ids[a] = mors.size();
        mors.push_back({"(" + J.morphism_id(g) + ";" + objs[a] + "," + objs[b] + ")", a, b});
        under.push_back(g);
      }
    }
  const auto nm = mors.size();
  std::vector<std::int32_t> table(nm * nm, -1);
  for (std::size_t x = 0; x < nm; ++x)
    for (std::size_t y = 0; y < nm; ++y) {
      if (mors[y].target != mors[x].source) continue;
      auto g = J.compose(under[x], under[y]);
      table[x * nm + y] = static_cast<std::int32_t>(index.at({mors[y].source, mors[x].target, g}));
    }
  std::string name = forward ? "(" + J.name() + "/" + K.object_id(k) + ")" : "(" + K.object_id(k) + "/" + J.name() + ")";
  cc.category = std::make_shared<FinCategory>(name, objs, mors, ids, table);
  cc.projection = Functor{cc.category, u.source, {}, under};
  for (const auto& e : cc.entries) cc.projection.on_objects.push_back(e.first);
  return cc;
}

}  // namespace

CommaCategory comma(const Functor& u, std::size_t k) { return build_comma(u, k, true); }
CommaCategory coslice(const Functor& u, std::size_t k) { return build_comma(u, k, false); }

// ---------------------------------------------------------------------------
// Twisted arrows

TwistedArrow twisted_arrow(const CatPtr& kp) {
  const auto& K = *kp;
  const auto n = K.num_morphisms();
  TwistedArrow ta;
  ta.base = kp;
  ta.opposite_k = opposite(kp);
  std::vector<std::string> objs;
  for (std::size_t f = 0; f < n; ++f) objs.push_back(K.morphism_id(f));
  std::vector<MorphismDecl> mors;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>, std::size_t> index;
  std::vector<std::size_t> ids(n);
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t f2 = 0; f2 < n; ++f2)
      for (auto a : K.hom(K.source(f), K.source(f2)))
        for (auto b : K.hom(K.target(f2), K.target(f))) {
          if (K.compose(b, K.compose(f2, a)) != f) continue;
          index[{f, f2, a, b}] = mors.size();
          if (f == f2 && a == K.identity(K.source(f)) && b == K.identity(K.target(f))) ids[f] = mors.size();
          mors.push_back({"(" + K.morphism_id(a) + "," + K.morphism_id(b) + ";" + objs[f] + "," + objs[f2] + ")", f, f2});
          ta.legs.emplace_back(a, b);
        }
  const auto nm = mors.size();
  std::vector<std::int32_t> table(nm * nm, -1);
  for (std::size_t x = 0; x < nm; ++x)
    for (std::size_t y = 0; y < nm; ++y) {
      if (mors[y].target != mors[x].source) continue;
      auto a = K.compose(ta.legs[x].first, ta.legs[y].first);
      auto b = K.compose(ta.legs[y].second, ta.legs[x].second);
      table[x * nm + y] = static_cast<std::int32_t>(index.at({mors[y].source, mors[x].target, a, b}));
    }
  ta.category = std::make_shared<FinCategory>("Ar(" + K.name() + ")", objs, mors, ids, table);
  ta.target = Functor{ta.category, ta.opposite_k, {}, {}};
  ta.source = Functor{ta.category, kp, {}, {}};
  for (std::size_t f = 0; f < n; ++f) {
    ta.target.on_objects.push_back(K.target(f));
    ta.source.on_objects.push_back(K.source(f));
  }
  for (const auto& [a, b] : ta.legs) {
    ta.target.on_morphisms.push_back(b);
    ta.source.on_morphisms.push_back(a);
  }
  auto ts = product(std::vector<CatPtr>{ta.opposite_k, kp});
  ta.projection = pairing(ts, ta.category, {ta.target, ta.source});
  return ta;
}

Functor twisted_arrow_interchange(const TwistedArrow& ak, const TwistedArrow& al, const TwistedArrow& akl,
                                  const CatPtr& ak_x_al) {
  const auto& KL = *akl.base;
  if (KL.factors().size() != 2 || !same_category(KL.factors()[0], ak.base) ||
      !same_category(KL.factors()[1], al.base))
    throw CategoryError("twisted_arrow_interchange: Ar(K x L) is not built over K x L");
  const auto& P = *ak_x_al;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>, std::size_t> index;
  const auto& AKL = *akl.category;
  for (std::size_t m = 0; m < AKL.num_morphisms(); ++m)
    index[{AKL.source(m), AKL.target(m), akl.legs[m].first, akl.legs[m].second}] = m;
  Functor f{ak_x_al, akl.category, {}, {}};
  for (std::size_t o = 0; o < P.num_objects(); ++o) f.on_objects.push_back(KL.morphism_from_coords(P.object_coords(o)));
  for (std::size_t m = 0; m < P.num_morphisms(); ++m) {
    auto c = P.morphism_coords(m);
    auto [a1, b1] = ak.legs[c[0]];
    auto [a2, b2] = al.legs[c[1]];
    auto src = f.on_objects[P.source(m)], dst = f.on_objects[P.target(m)];
    f.on_morphisms.push_back(index.at({src, dst, KL.morphism_from_coords({a1, a2}), KL.morphism_from_coords({b1, b2})}));
  }
  return f;
}

// ---------------------------------------------------------------------------
// Built-in shapes

CatPtr poset_chain(std::size_t n) {
  FinCategory::Builder b("[" + std::to_string(n) + "]");
  for (std::size_t i = 0; i <= n; ++i) b.object(std::to_string(i));
  for (std::size_t i = 0; i <= n; ++i) b.identity(std::to_string(i), "id" + std::to_string(i));
  auto arrow = [&](std::size_t i, std::size_t j) {
    if (n == 1) return std::string("a");
    return std::to_string(i) + std::to_string(j);
  };
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) b.morphism(arrow(i, j), std::to_string(i), std::to_string(j));
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      for (std::size_t k = j + 1; k <= n; ++k) b.compose(arrow(j, k), arrow(i, j), arrow(i, k));
  return b.build();
}

CatPtr discrete(std::size_t n) {
  if (n == 0) return empty_category();
  FinCategory::Builder b("discrete_" + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) b.object(std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) b.identity(std::to_string(i), "id" + std::to_string(i));
  return b.build();
}

CatPtr builtin_shape(const std::string& name) {
  if (name == "e") return terminal_category();
  if (name == "empty") return empty_category();
  if (name == "[1]") return poset_chain(1);
  if (name == "[2]") return poset_chain(2);
  if (name == "[3]") return poset_chain(3);
  if (name == "square") {
    auto c = product(std::vector<CatPtr>{poset_chain(1), poset_chain(1)});
    std::const_pointer_cast<FinCategory>(c)->set_name("square");
    return c;
  }
  if (name == "span") {
    return FinCategory::Builder("span")
        .object("0").object("1").object("2")
        .identity("0", "id0").identity("1", "id1").identity("2", "id2")
        .morphism("a", "0", "1").morphism("b", "0", "2")
        .build();
  }
  if (name == "cospan") {
    return FinCategory::Builder("cospan")
        .object("0").object("1").object("2")
        .identity("0", "id0").identity("1", "id1").identity("2", "id2")
        .morphism("a", "1", "0").morphism("b", "2", "0")
        .build();
  }
  if (name == "idem") {
    return FinCategory::Builder("idem").object("*").identity("*", "id").morphism("e", "*", "*").compose("e", "e", "e").build();
  }
  if (name == "pretriang_k") {
    return FinCategory::Builder("pretriang_k")
        .object("00").object("10").object("20").object("01")
        .identity("00", "id00").identity("10", "id10").identity("20", "id20").identity("01", "id01")
        .morphism("h1", "00", "10").morphism("h2", "10", "20").morphism("h12", "00", "20").morphism("v", "00", "01")
        .compose("h2", "h1", "h12")
        .build();
  }
  const std::string prefix = "discrete_";
  if (name.rfind(prefix, 0) == 0) {
    auto digits = name.substr(prefix.size());
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
      return discrete(std::stoul(digits));
  }
  return nullptr;
}

std::vector<std::string> builtin_shape_names() {
  return {"e", "empty", "[1]", "[2]", "[3]", "square", "span", "cospan", "discrete_<n>", "idem", "pretriang_k"};
}

std::vector<CatPtr> default_shape_family() {
  std::vector<CatPtr> out;
  for (const char* n : {"e", "[1]", "[2]", "square", "span", "cospan", "discrete_2", "discrete_3", "idem"})
    out.push_back(builtin_shape(n));
  return out;
}

}  // namespace dlab
