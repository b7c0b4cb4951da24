#include "dlab/dsl.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace dlab {

namespace {

struct Line {
  std::size_t number = 0;
  std::string text;  // comment stripped
};

std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string s;
  std::size_t n = 0;
  while (std::getline(in, s)) {
    ++n;
    if (!s.empty() && s.back() == '\r') s.pop_back();
    if (auto h = s.find('#'); h != std::string::npos) s.erase(h);
    if (s.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back({n, s});
  }
  return out;
}

bool is_space(char c) { return c == ' ' || c == '\t'; }

/// Cursor over one line; columns are 1-based.
struct Scan {
  const Line& line;
  std::size_t pos = 0;

  std::size_t col() const { return pos + 1; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line.number, col(), what); }
  [[noreturn]] void fail_at(std::size_t column, const std::string& what) const {
    throw ParseError(line.number, column, what);
  }
  void ws() {
    while (pos < line.text.size() && is_space(line.text[pos])) ++pos;
  }
  bool done() {
    ws();
    return pos >= line.text.size();
  }
  /// A run of non-space characters, stopping before any of `stops` and
  /// before "->".
  std::string word(const std::string& what, const std::string& stops = "") {
    ws();
    std::size_t b = pos;
    while (pos < line.text.size() && !is_space(line.text[pos]) && stops.find(line.text[pos]) == std::string::npos &&
           line.text.compare(pos, 2, "->") != 0)
      ++pos;
    if (pos == b) fail("expected " + what);
    return line.text.substr(b, pos - b);
  }
  std::string rest(const std::string& what) {
    ws();
    auto e = line.text.find_last_not_of(" \t");
    if (pos >= line.text.size()) fail("expected " + what);
    auto r = line.text.substr(pos, e + 1 - pos);
    pos = line.text.size();
    return r;
  }
  void expect(const std::string& lit) {
    ws();
    if (line.text.compare(pos, lit.size(), lit) != 0) fail("expected '" + lit + "'");
    pos += lit.size();
  }
  bool accept(const std::string& lit) {
    ws();
    if (line.text.compare(pos, lit.size(), lit) != 0) return false;
    pos += lit.size();
    return true;
  }
  void end() {
    if (!done()) fail("unexpected trailing text '" + line.text.substr(pos) + "'");
  }
};

template <typename T>
std::size_t index_of(const std::vector<T>& v, const T& x) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] == x) return i;
  return npos;
}

CatPtr with_name(CatPtr c, const std::string& name) {
  if (c->name() == name) return c;
  auto copy = std::make_shared<FinCategory>(*c);
  copy->set_name(name);
  return copy;
}

}  // namespace

// ---------------------------------------------------------------------------
// Shapes

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

CatPtr resolve_shape(const std::string& name) {
  if (auto c = builtin_shape(name)) return c;
  const char* dir = std::getenv("DERIVATOR_LAB_SHAPEDIR");
  if (!dir || !*dir) return nullptr;
  auto path = std::filesystem::path(dir) / (name + ".fincat");
  if (!std::filesystem::exists(path)) return nullptr;
  // Shape files may refer to built-ins only, which rules out cycles.
  auto c = parse_category(read_file(path.string()), [](const std::string& n) { return builtin_shape(n); });
  return c->name().empty() ? with_name(c, name) : c;
}

CatPtr resolve_shape_expr(const std::string& expr, const ShapeResolver& r) {
  std::vector<CatPtr> factors;
  std::size_t b = 0;
  while (true) {
    auto e = expr.find(" x ", b);
    auto f = expr.substr(b, e == std::string::npos ? std::string::npos : e - b);
    auto s = f.find_first_not_of(" \t"), t = f.find_last_not_of(" \t");
    f = s == std::string::npos ? "" : f.substr(s, t + 1 - s);
    std::size_t ops = 0;
    while (f.size() > 3 && f.compare(f.size() - 3, 3, "^op") == 0) {
      f.resize(f.size() - 3);
      ++ops;
    }
    CatPtr c = f.empty() ? nullptr : r(f);
    if (!c) throw CategoryError("unknown shape '" + f + "'");
    for (std::size_t i = 0; i < ops; ++i) c = opposite(c);
    factors.push_back(c);
    if (e == std::string::npos) break;
    b = e + 3;
  }
  return factors.size() == 1 ? factors[0] : product(factors);
}

CatPtr parse_category(const std::string& text, const ShapeResolver& r) {
  std::string name;
  std::optional<std::pair<std::size_t, std::string>> builtin;
  std::size_t first_decl = 0;
  std::vector<std::string> objects, morphisms;
  std::set<std::string> has_identity;
  struct Op {
    int kind;  // 0 morphism, 1 identity, 2 compose
    std::string a, b, c;
  };
  std::vector<Op> ops;
  for (const auto& ln : split_lines(text)) {
    Scan sc{ln};
    sc.ws();
    std::size_t kcol = sc.col();
    auto kw = sc.word("keyword");
    if (kw == "category") {
      name = sc.rest("category name");
      continue;
    }
    if (kw == "builtin") {
      builtin = {ln.number, sc.rest("shape name")};
      continue;
    }
    if (!first_decl) first_decl = ln.number;
    if (kw == "object") {
      std::size_t c = sc.col() + 1;
      auto id = sc.word("object id");
      sc.end();
      if (index_of(objects, id) != npos) sc.fail_at(c, "duplicate object '" + id + "'");
      objects.push_back(id);
    } else if (kw == "morphism") {
      auto id = sc.word("morphism id", ":");
      sc.expect(":");
      sc.ws();
      std::size_t cs = sc.col();
      auto src = sc.word("source object");
      sc.expect("->");
      sc.ws();
      std::size_t ct = sc.col();
      auto dst = sc.word("target object");
      sc.end();
      if (index_of(morphisms, id) != npos) sc.fail_at(kcol, "duplicate morphism '" + id + "'");
      if (index_of(objects, src) == npos) sc.fail_at(cs, "unresolved object '" + src + "'");
      if (index_of(objects, dst) == npos) sc.fail_at(ct, "unresolved object '" + dst + "'");
      morphisms.push_back(id);
      ops.push_back({0, id, src, dst});
    } else if (kw == "identity") {
      sc.ws();
      std::size_t co = sc.col();
      auto obj = sc.word("object id", "=");
      sc.expect("=");
      sc.ws();
      std::size_t cm = sc.col();
      auto mor = sc.word("morphism id");
      sc.end();
      if (index_of(objects, obj) == npos) sc.fail_at(co, "unresolved object '" + obj + "'");
      if (!has_identity.insert(obj).second) sc.fail_at(co, "second identity for '" + obj + "'");
      if (index_of(morphisms, mor) != npos) sc.fail_at(cm, "identity '" + mor + "' already declared as a morphism");
      morphisms.push_back(mor);
      ops.push_back({1, obj, mor, {}});
    } else if (kw == "compose") {
      std::string ids[3];
      for (int i = 0; i < 3; ++i) {
        if (i == 1) sc.expect(".");
        if (i == 2) sc.expect("=");
        sc.ws();
        std::size_t c = sc.col();
        ids[i] = sc.word("morphism id", i == 1 ? "=" : "");
        if (index_of(morphisms, ids[i]) == npos) sc.fail_at(c, "unresolved morphism '" + ids[i] + "'");
      }
      sc.end();
      ops.push_back({2, ids[0], ids[1], ids[2]});
    } else {
      sc.fail_at(kcol, "unknown keyword '" + kw + "'");
    }
  }
  if (builtin) {
    if (first_decl) throw ParseError(first_decl, 1, "declarations cannot be combined with 'builtin'");
    auto c = r(builtin->second);
    if (!c) throw ParseError(builtin->first, 9, "unknown built-in shape '" + builtin->second + "'");
    return name.empty() ? c : with_name(c, name);
  }
  FinCategory::Builder b(name);
  for (const auto& o : objects) b.object(o);
  for (const auto& op : ops) {
    if (op.kind == 0) b.morphism(op.a, op.b, op.c);
    if (op.kind == 1) b.identity(op.a, op.b);
    if (op.kind == 2) b.compose(op.a, op.b, op.c);
  }
  return b.build();
}

std::string serialize(const FinCategory& c) {
  if (!c.name().empty()) {
    CatPtr bi;
    try {
      bi = builtin_shape(c.name());
    } catch (const std::exception&) {
    }
    if (bi && bi->name() == c.name() && *bi == c) return "builtin " + c.name() + "\n";
  }
  std::ostringstream o;
  if (!c.name().empty()) o << "category " << c.name() << "\n";
  for (const auto& x : c.objects()) o << "object " << x << "\n";
  for (std::size_t m = 0; m < c.num_morphisms(); ++m) {
    if (c.is_identity(m))
      o << "identity " << c.object_id(c.source(m)) << " = " << c.morphism_id(m) << "\n";
    else
      o << "morphism " << c.morphism_id(m) << ": " << c.object_id(c.source(m)) << " -> "
        << c.object_id(c.target(m)) << "\n";
  }
  for (std::size_t g = 0; g < c.num_morphisms(); ++g)
    for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
      if (c.is_identity(g) || c.is_identity(f) || c.source(g) != c.target(f)) continue;
      auto h = c.table_entry(g, f);
      if (h >= 0) o << "compose " << c.morphism_id(g) << " . " << c.morphism_id(f) << " = " << c.morphism_id(h) << "\n";
    }
  return o.str();
}

// ---------------------------------------------------------------------------
// Diagrams

namespace {

struct Entry {
  Line line;
  std::string kw, id;
  std::size_t id_col = 0;
  Scan rest() const {
    Scan s{line};
    s.ws();
    s.word("keyword");
    s.word("id", "=");
    s.expect("=");
    return s;
  }
};

struct DiagText {
  DiagHeader header;
  std::vector<Entry> entries;
};

DiagText read_diag(const std::string& text, const ShapeResolver& r) {
  DiagText d;
  std::size_t shape_line = 0;
  for (const auto& ln : split_lines(text)) {
    Scan sc{ln};
    sc.ws();
    std::size_t kcol = sc.col();
    auto kw = sc.word("keyword");
    if (kw == "shape") {
      if (!d.entries.empty()) sc.fail_at(kcol, "'shape' must precede the payload");
      sc.ws();
      std::size_t c = sc.col();
      d.header.shape_expr = sc.rest("shape");
      shape_line = ln.number;
      try {
        d.header.shape = resolve_shape_expr(d.header.shape_expr, r);
      } catch (const CategoryError& e) {
        sc.fail_at(c, e.what());
      }
    } else if (kw == "base") {
      if (!d.entries.empty()) sc.fail_at(kcol, "'base' must precede the payload");
      sc.ws();
      std::size_t c = sc.col();
      d.header.base = sc.word("base name");
      if (d.header.base == "mat") {
        sc.ws();
        std::size_t pc = sc.col();
        auto p = sc.word("prime");
        char* endp = nullptr;
        auto v = std::strtoull(p.c_str(), &endp, 10);
        if (*endp || !is_prime(v) || v > 65521) sc.fail_at(pc, "'" + p + "' is not a supported prime");
        d.header.p = static_cast<Scalar>(v);
      } else if (d.header.base != "finset") {
        sc.fail_at(c, "unknown base '" + d.header.base + "' (expected finset or mat <p>)");
      }
      sc.end();
    } else if (kw == "set" || kw == "map" || kw == "dim" || kw == "mat") {
      Entry e{ln, kw, {}, 0};
      sc.ws();
      e.id_col = sc.col();
      e.id = sc.word("id", "=");
      sc.expect("=");
      d.entries.push_back(e);
    } else {
      sc.fail_at(kcol, "unknown keyword '" + kw + "'");
    }
  }
  if (!d.header.shape) throw ParseError(1, 1, "missing 'shape' header");
  if (d.header.base.empty()) throw ParseError(shape_line, 1, "missing 'base' header");
  return d;
}

template <typename B>
void check_entries(const DiagText& d, const char* obj_kw, const char* mor_kw) {
  for (const auto& e : d.entries)
    if (e.kw != obj_kw && e.kw != mor_kw)
      throw ParseError(e.line.number, 1, "'" + e.kw + "' does not belong to base " + d.header.base);
}

/// Object and morphism entries, indexed by the shape, with errors naming
/// anything missing, unknown or repeated.
void index_entries(const DiagText& d, const std::string& obj_kw, std::vector<const Entry*>& objs,
                   std::vector<const Entry*>& mors) {
  const auto& J = *d.header.shape;
  objs.assign(J.num_objects(), nullptr);
  mors.assign(J.num_morphisms(), nullptr);
  for (const auto& e : d.entries) {
    bool is_obj = e.kw == obj_kw;
    std::size_t i = npos;
    try {
      i = is_obj ? J.find_object(e.id) : J.find_morphism(e.id);
    } catch (const std::exception&) {
    }
    if (i == npos || (is_obj ? i >= J.num_objects() : i >= J.num_morphisms()))
      throw ParseError(e.line.number, e.id_col,
                       std::string("shape mismatch: no ") + (is_obj ? "object" : "morphism") + " '" + e.id + "' in " +
                           J.name());
    auto& slot = is_obj ? objs[i] : mors[i];
    if (slot) throw ParseError(e.line.number, e.id_col, "'" + e.id + "' given twice");
    slot = &e;
  }
  for (std::size_t j = 0; j < J.num_objects(); ++j)
    if (!objs[j]) throw CategoryError("shape mismatch: object '" + J.object_id(j) + "' has no payload");
  for (std::size_t m = 0; m < J.num_morphisms(); ++m)
    if (!mors[m] && !J.is_identity(m))
      throw CategoryError("shape mismatch: morphism '" + J.morphism_id(m) + "' has no payload");
}

template <typename B>
void check_functor_laws(const B& b, const Diagram<B>& x) {
  auto vs = validate(b, x);
  if (!vs.empty()) throw CategoryError("functor-law failure: " + to_string(vs));
}

/// Next ',' at bracket depth zero at or after `from`, so product ids such
/// as (0,1) stay whole.
std::size_t next_comma(const std::string& s, std::size_t from) {
  int depth = 0;
  for (std::size_t i = from; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[') ++depth;
    if ((c == ')' || c == ']') && depth > 0) --depth;
    if (c == ',' && depth == 0) return i;
  }
  return std::string::npos;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::size_t b = 0;
  while (b <= s.size()) {
    auto e = next_comma(s, b);
    auto t = s.substr(b, e == std::string::npos ? std::string::npos : e - b);
    auto x = t.find_first_not_of(" \t"), y = t.find_last_not_of(" \t");
    out.push_back(x == std::string::npos ? "" : t.substr(x, y + 1 - x));
    if (e == std::string::npos) break;
    b = e + 1;
  }
  return out;
}

}  // namespace

DiagHeader read_diag_header(const std::string& text, const ShapeResolver& r) { return read_diag(text, r).header; }

Diagram<FinSetBase> parse_diagram(const std::string& text, const FinSetBase& b, const ShapeResolver& r) {
  auto d = read_diag(text, r);
  if (d.header.base != "finset") throw CategoryError("diagram is over base '" + d.header.base + "', not finset");
  check_entries<FinSetBase>(d, "set", "map");
  std::vector<const Entry*> objs, mors;
  index_entries(d, "set", objs, mors);
  const auto& J = *d.header.shape;
  Diagram<FinSetBase> x{d.header.shape, {}, {}};
  std::vector<std::vector<std::string>> labels;
  for (const auto* e : objs) {
    auto sc = e->rest();
    sc.expect("{");
    auto close = e->line.text.find('}', sc.pos);
    if (close == std::string::npos) sc.fail("expected '}'");
    auto inner = e->line.text.substr(sc.pos, close - sc.pos);
    std::vector<std::string> ls;
    if (inner.find_first_not_of(" \t") != std::string::npos) ls = split_list(inner);
    for (const auto& l : ls) {
      if (l.empty()) sc.fail("empty element label");
      if (std::count(ls.begin(), ls.end(), l) > 1) sc.fail("repeated element '" + l + "'");
    }
    sc.pos = close + 1;
    sc.end();
    x.objects.push_back(FinSet{ls.size()});
    labels.push_back(std::move(ls));
  }
  for (std::size_t m = 0; m < J.num_morphisms(); ++m) {
    auto s = J.source(m), t = J.target(m);
    if (!mors[m]) {
      x.morphisms.push_back(b.identity(x.objects[s]));
      continue;
    }
    const auto* e = mors[m];
    auto sc = e->rest();
    sc.ws();
    FinMap f{x.objects[s].size, x.objects[t].size, std::vector<std::size_t>(x.objects[s].size, npos)};
    auto body = e->line.text.substr(sc.pos);
    if (body.find_first_not_of(" \t") != std::string::npos)
      for (const auto& pair : split_list(body)) {
        auto arrow = pair.find("->");
        if (arrow == std::string::npos) sc.fail("expected 'a->x' in map '" + e->id + "'");
        auto a = pair.substr(0, arrow), y = pair.substr(arrow + 2);
        a.erase(a.find_last_not_of(" \t") + 1);
        y.erase(0, y.find_first_not_of(" \t"));
        auto ai = index_of(labels[s], a), yi = index_of(labels[t], y);
        if (ai == npos) sc.fail("map '" + e->id + "': '" + a + "' is not an element of " + J.object_id(s));
        if (yi == npos) sc.fail("map '" + e->id + "': '" + y + "' is not an element of " + J.object_id(t));
        if (f.table[ai] != npos) sc.fail("map '" + e->id + "': '" + a + "' assigned twice");
        f.table[ai] = yi;
      }
    for (std::size_t i = 0; i < f.table.size(); ++i)
      if (f.table[i] == npos) sc.fail("map '" + e->id + "' is not total: no image for '" + labels[s][i] + "'");
    x.morphisms.push_back(std::move(f));
  }
  check_functor_laws(b, x);
  return x;
}

Diagram<MatBase> parse_diagram(const std::string& text, const MatBase& b, const ShapeResolver& r) {
  auto d = read_diag(text, r);
  if (d.header.base != "mat") throw CategoryError("diagram is over base '" + d.header.base + "', not mat");
  if (d.header.p != b.prime())
    throw CategoryError("diagram is over F_" + std::to_string(d.header.p) + ", expected F_" + std::to_string(b.prime()));
  check_entries<MatBase>(d, "dim", "mat");
  std::vector<const Entry*> objs, mors;
  index_entries(d, "dim", objs, mors);
  const auto& J = *d.header.shape;
  const Scalar p = b.prime();
  Diagram<MatBase> x{d.header.shape, {}, {}};
  for (const auto* e : objs) {
    auto sc = e->rest();
    sc.ws();
    auto n = sc.word("dimension");
    char* endp = nullptr;
    auto v = std::strtoull(n.c_str(), &endp, 10);
    if (*endp || v > 64) sc.fail("bad dimension '" + n + "'");
    sc.end();
    x.objects.push_back(MatObj{static_cast<std::size_t>(v)});
  }
  for (std::size_t m = 0; m < J.num_morphisms(); ++m) {
    auto s = x.objects[J.source(m)].dim, t = x.objects[J.target(m)].dim;
    if (!mors[m]) {
      x.morphisms.push_back(Matrix::identity(s, p));
      continue;
    }
    const auto* e = mors[m];
    auto sc = e->rest();
    std::vector<std::vector<Scalar>> rows;
    sc.expect("[");
    if (!sc.accept("]")) {
      do {
        sc.expect("[");
        std::vector<Scalar> row;
        if (!sc.accept("]")) {
          do {
            auto w = sc.word("entry", ",]");
            char* endp = nullptr;
            auto v = std::strtoull(w.c_str(), &endp, 10);
            if (*endp || v >= p) sc.fail("entry '" + w + "' is not in 0.." + std::to_string(p - 1));
            row.push_back(static_cast<Scalar>(v));
          } while (sc.accept(","));
          sc.expect("]");
        }
        rows.push_back(std::move(row));
      } while (sc.accept(","));
      sc.expect("]");
    }
    sc.expect("(mod");
    auto pw = sc.word("prime", ")");
    if (pw != std::to_string(p)) sc.fail("matrix is mod " + pw + " but the base is mod " + std::to_string(p));
    sc.expect(")");
    sc.end();
    bool ok = rows.size() == t;
    for (const auto& row : rows) ok = ok && row.size() == s;
    if (!ok)
      throw ParseError(e->line.number, e->id_col,
                       "shape mismatch: matrix for '" + e->id + "' must be " + std::to_string(t) + " x " +
                           std::to_string(s) + " (" + J.object_id(J.source(m)) + " -> " + J.object_id(J.target(m)) +
                           ")");
    std::vector<Scalar> flat;
    for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
    x.morphisms.push_back(Matrix(t, s, p, flat));
  }
  check_functor_laws(b, x);
  return x;
}

namespace {

std::string shape_header(const CatPtr& shape) {
  CatPtr back;
  try {
    back = resolve_shape_expr(shape->name());
  } catch (const CategoryError&) {
  }
  if (!back || !same_category(back, shape))
    throw CategoryError("shape '" + shape->name() + "' cannot be named in a diagram header");
  return "shape " + shape->name() + "\n";
}

}  // namespace

std::string serialize(const FinSetBase&, const Diagram<FinSetBase>& x) {
  std::ostringstream o;
  o << shape_header(x.shape) << "base finset\n";
  const auto& J = *x.shape;
  for (std::size_t j = 0; j < J.num_objects(); ++j) {
    o << "set " << J.object_id(j) << " = {";
    for (std::size_t i = 0; i < x.at(j).size; ++i) o << (i ? "," : "") << i;
    o << "}\n";
  }
  for (std::size_t m = 0; m < J.num_morphisms(); ++m) {
    if (J.is_identity(m)) continue;
    o << "map " << J.morphism_id(m) << " =";
    const auto& t = x.map(m).table;
    for (std::size_t i = 0; i < t.size(); ++i) o << (i ? ", " : " ") << i << "->" << t[i];
    o << "\n";
  }
  return o.str();
}

std::string serialize(const MatBase& b, const Diagram<MatBase>& x) {
  std::ostringstream o;
  o << shape_header(x.shape) << "base mat " << b.prime() << "\n";
  const auto& J = *x.shape;
  for (std::size_t j = 0; j < J.num_objects(); ++j) o << "dim " << J.object_id(j) << " = " << x.at(j).dim << "\n";
  for (std::size_t m = 0; m < J.num_morphisms(); ++m) {
    if (J.is_identity(m)) continue;
    const auto& a = x.map(m);
    o << "mat " << J.morphism_id(m) << " = [";
    for (std::size_t r = 0; r < a.rows(); ++r) {
      o << (r ? ",[" : "[");
      for (std::size_t c = 0; c < a.cols(); ++c) o << (c ? "," : "") << a(r, c);
      o << "]";
    }
    o << "] (mod " << b.prime() << ")\n";
  }
  return o.str();
}

Functor parse_functor(const std::string& spec, const CatPtr& j, const CatPtr& k) {
  auto semi = spec.find(';');
  auto parse_pairs = [&](const std::string& part, bool objects) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    if (part.find_first_not_of(" \t") == std::string::npos) return out;
    for (const auto& item : split_list(part)) {
      auto arrow = item.find("->");
      if (arrow == std::string::npos) throw CategoryError("functor: expected 'a->b', got '" + item + "'");
      auto a = item.substr(0, arrow), b = item.substr(arrow + 2);
      a.erase(a.find_last_not_of(" \t") + 1);
      b.erase(0, b.find_first_not_of(" \t"));
      auto find = [&](const FinCategory& c, const std::string& id) {
        std::size_t i = npos;
        try {
          i = objects ? c.find_object(id) : c.find_morphism(id);
        } catch (const std::exception&) {
        }
        if (i == npos || i >= (objects ? c.num_objects() : c.num_morphisms()))
          throw CategoryError(std::string("functor: no ") + (objects ? "object" : "morphism") + " '" + id + "' in " +
                              c.name());
        return i;
      };
      out.emplace_back(find(*j, a), find(*k, b));
    }
    return out;
  };
  auto objs = parse_pairs(spec.substr(0, semi), true);
  auto mors = semi == std::string::npos ? decltype(objs){} : parse_pairs(spec.substr(semi + 1), false);
  std::vector<Functor> hits;
  for (auto& f : enumerate_functors(j, k)) {
    bool ok = true;
    for (auto [a, b] : objs) ok = ok && f.obj(a) == b;
    for (auto [a, b] : mors) ok = ok && f.mor(a) == b;
    if (ok) hits.push_back(std::move(f));
  }
  if (hits.empty()) throw CategoryError("functor: no functor " + j->name() + " -> " + k->name() + " matches '" + spec + "'");
  if (hits.size() > 1)
    throw CategoryError("functor: " + std::to_string(hits.size()) + " functors " + j->name() + " -> " + k->name() +
                        " match '" + spec + "'; give the morphism images after ';'");
  return hits[0];
}

}  // namespace dlab
