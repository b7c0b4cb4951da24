#include "dlab/instances.hpp"

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dlab {

namespace {

constexpr std::size_t kMaxSetSize = std::size_t{1} << 22;

std::size_t checked_pow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    r *= base;
    if (r > kMaxSetSize) throw std::length_error("function set too large to enumerate");
  }
  return r;
}

std::size_t saturating_pow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > SIZE_MAX / base) return SIZE_MAX;
    r *= base;
  }
  return r;
}

std::vector<std::size_t> non_identity(const FinCategory& shape) {
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m < shape.num_morphisms(); ++m)
    if (!shape.is_identity(m)) out.push_back(m);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// FinSetBase

FinMap FinSetBase::identity(FinSet x) const {
  FinMap f{x.size, x.size, std::vector<std::size_t>(x.size)};
  for (std::size_t i = 0; i < x.size; ++i) f.table[i] = i;
  return f;
}

FinMap FinSetBase::compose(const FinMap& g, const FinMap& f) const {
  if (f.target != g.source) throw std::invalid_argument("finset compose: endpoints do not match");
  FinMap h{f.source, g.target, std::vector<std::size_t>(f.source)};
  for (std::size_t i = 0; i < f.source; ++i) h.table[i] = g.table[f.table[i]];
  return h;
}

std::vector<FinMap> FinSetBase::hom(FinSet x, FinSet y) const {
  std::vector<FinMap> out;
  if (y.size == 0 && x.size > 0) return out;
  const auto n = checked_pow(y.size, x.size);
  out.reserve(n);
  FinMap f{x.size, y.size, std::vector<std::size_t>(x.size, 0)};
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(f);
    for (std::size_t i = x.size; i-- > 0;) {
      if (++f.table[i] < y.size) break;
      f.table[i] = 0;
    }
  }
  return out;
}

std::size_t FinSetBase::hom_size(FinSet x, FinSet y) const { return saturating_pow(y.size, x.size); }

FinSetBase::ColimitT FinSetBase::colimit(const FinCategory& shape, const std::vector<FinSet>& objs,
                                         const std::vector<FinMap>& mors) const {
  std::vector<std::size_t> offset(objs.size() + 1, 0);
  for (std::size_t j = 0; j < objs.size(); ++j) offset[j + 1] = offset[j] + objs[j].size;
  std::vector<std::size_t> parent(offset.back());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (auto m : non_identity(shape)) {
    auto s = shape.source(m), t = shape.target(m);
    for (std::size_t x = 0; x < objs[s].size; ++x) {
      auto a = find(offset[s] + x), b = find(offset[t] + mors[m].table[x]);
      if (a == b) continue;
      if (a < b) std::swap(a, b);
      parent[a] = b;
    }
  }
  std::vector<std::size_t> cls(parent.size(), npos);
  std::size_t count = 0;
  for (std::size_t i = 0; i < parent.size(); ++i) {
    auto r = find(i);
    if (cls[r] == npos) cls[r] = count++;
    cls[i] = cls[r];
  }
  ColimitT c{{count}, {}};
  for (std::size_t j = 0; j < objs.size(); ++j) {
    FinMap leg{objs[j].size, count, std::vector<std::size_t>(objs[j].size)};
    for (std::size_t x = 0; x < objs[j].size; ++x) leg.table[x] = cls[offset[j] + x];
    c.legs.push_back(std::move(leg));
  }
  return c;
}

FinSetBase::LimitT FinSetBase::limit(const FinCategory& shape, const std::vector<FinSet>& objs,
                                     const std::vector<FinMap>& mors) const {
  const auto n = objs.size();
  // Constraints checked once both endpoints are assigned, at the later one.
  std::vector<std::vector<std::size_t>> checks(n);
  for (auto m : non_identity(shape)) checks[std::max(shape.source(m), shape.target(m))].push_back(m);

  std::vector<std::vector<std::size_t>> families;
  std::vector<std::size_t> cur(n, 0);
  auto consistent = [&](std::size_t j) {
    for (auto m : checks[j])
      if (mors[m].table[cur[shape.source(m)]] != cur[shape.target(m)]) return false;
    return true;
  };
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == n) {
      families.push_back(cur);
      if (families.size() > kMaxSetSize) throw std::length_error("limit too large");
      return;
    }
    // A morphism from an earlier object forces the value.
    std::size_t forced = npos;
    for (auto m : checks[j])
      if (shape.target(m) == j && shape.source(m) < j) {
        forced = mors[m].table[cur[shape.source(m)]];
        break;
      }
    if (forced != npos) {
      cur[j] = forced;
      if (consistent(j)) self(self, j + 1);
      return;
    }
    for (std::size_t x = 0; x < objs[j].size; ++x) {
      cur[j] = x;
      if (consistent(j)) self(self, j + 1);
    }
  };
  rec(rec, 0);

  LimitT c{{families.size()}, {}};
  for (std::size_t j = 0; j < n; ++j) {
    FinMap leg{families.size(), objs[j].size, std::vector<std::size_t>(families.size())};
    for (std::size_t t = 0; t < families.size(); ++t) leg.table[t] = families[t][j];
    c.legs.push_back(std::move(leg));
  }
  return c;
}

std::optional<FinMap> FinSetBase::factor_cocone(const ColimitT& c, FinSet target,
                                                const std::vector<FinMap>& legs) const {
  if (legs.size() != c.legs.size()) throw std::invalid_argument("factor_cocone: leg count mismatch");
  FinMap u{c.apex.size, target.size, std::vector<std::size_t>(c.apex.size, npos)};
  for (std::size_t j = 0; j < legs.size(); ++j) {
    if (legs[j].source != c.legs[j].source || legs[j].target != target.size)
      throw std::invalid_argument("factor_cocone: leg shape mismatch");
    for (std::size_t x = 0; x < legs[j].source; ++x) {
      auto& slot = u.table[c.legs[j].table[x]];
      if (slot == npos) slot = legs[j].table[x];
      else if (slot != legs[j].table[x]) return std::nullopt;
    }
  }
  for (auto v : u.table)
    if (v == npos) throw std::logic_error("factor_cocone: colimit legs not jointly surjective");
  return u;
}

std::optional<FinMap> FinSetBase::factor_cone(const LimitT& c, FinSet source, const std::vector<FinMap>& legs) const {
  if (legs.size() != c.legs.size()) throw std::invalid_argument("factor_cone: leg count mismatch");
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t t = 0; t < c.apex.size; ++t) {
    std::vector<std::size_t> tuple;
    for (const auto& l : c.legs) tuple.push_back(l.table[t]);
    index.emplace(std::move(tuple), t);
  }
  FinMap u{source.size, c.apex.size, std::vector<std::size_t>(source.size)};
  for (std::size_t s = 0; s < source.size; ++s) {
    std::vector<std::size_t> tuple;
    for (std::size_t j = 0; j < legs.size(); ++j) {
      if (legs[j].source != source.size || legs[j].target != c.legs[j].target)
        throw std::invalid_argument("factor_cone: leg shape mismatch");
      tuple.push_back(legs[j].table[s]);
    }
    auto it = index.find(tuple);
    if (it == index.end()) return std::nullopt;
    u.table[s] = it->second;
  }
  return u;
}

std::optional<FinMap> FinSetBase::inverse(const FinMap& f) const {
  if (f.source != f.target) return std::nullopt;
  FinMap g{f.target, f.source, std::vector<std::size_t>(f.target, npos)};
  for (std::size_t i = 0; i < f.source; ++i) {
    if (g.table[f.table[i]] != npos) return std::nullopt;
    g.table[f.table[i]] = i;
  }
  return g;
}

FinMap FinSetBase::tensor(const FinMap& f, const FinMap& g) const {
  FinMap h{f.source * g.source, f.target * g.target, std::vector<std::size_t>(f.source * g.source)};
  for (std::size_t a = 0; a < f.source; ++a)
    for (std::size_t b = 0; b < g.source; ++b) h.table[a * g.source + b] = f.table[a] * g.target + g.table[b];
  return h;
}

FinMap FinSetBase::symmetry(FinSet x, FinSet y) const {
  FinMap h{x.size * y.size, x.size * y.size, std::vector<std::size_t>(x.size * y.size)};
  for (std::size_t a = 0; a < x.size; ++a)
    for (std::size_t b = 0; b < y.size; ++b) h.table[a * y.size + b] = b * x.size + a;
  return h;
}

FinSet FinSetBase::internal_hom(FinSet x, FinSet z) const { return {checked_pow(z.size, x.size)}; }

FinMap FinSetBase::evaluation(FinSet x, FinSet z) const {
  const auto h = internal_hom(x, z).size;
  FinMap ev{x.size * h, z.size, std::vector<std::size_t>(x.size * h)};
  for (std::size_t phi = 0; phi < h; ++phi) {
    auto code = phi;
    for (std::size_t a = x.size; a-- > 0;) {
      ev.table[a * h + phi] = code % z.size;
      code /= z.size;
    }
  }
  return ev;
}

FinMap FinSetBase::curry(FinSet x, FinSet y, const FinMap& f) const {
  if (f.source != x.size * y.size) throw std::invalid_argument("curry: source is not x ⊗ y");
  const auto z = f.target;
  FinMap out{y.size, internal_hom(x, {z}).size, std::vector<std::size_t>(y.size)};
  for (std::size_t b = 0; b < y.size; ++b) {
    std::size_t code = 0;
    for (std::size_t a = 0; a < x.size; ++a) code = code * z + f.table[a * y.size + b];
    out.table[b] = code;
  }
  return out;
}

std::optional<FinMap> FinSetBase::random_morphism(FinSet x, FinSet y, std::mt19937_64& rng) const {
  if (y.size == 0 && x.size > 0) return std::nullopt;
  FinMap f{x.size, y.size, std::vector<std::size_t>(x.size)};
  for (auto& v : f.table) v = rng() % y.size;
  return f;
}

std::vector<FinSet> FinSetBase::sample_objects(std::size_t max_size) const {
  std::vector<FinSet> out;
  for (std::size_t n = 0; n <= max_size; ++n) out.push_back({n});
  return out;
}

std::string FinSetBase::describe(FinSet x) const { return "set(" + std::to_string(x.size) + ")"; }

std::string FinSetBase::describe(const FinMap& f) const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < f.table.size(); ++i) os << (i ? "," : "") << f.table[i];
  os << "]:" << f.source << "->" << f.target;
  return os.str();
}

// ---------------------------------------------------------------------------
// MatBase

MatBase::MatBase(Scalar p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
}

std::vector<Matrix> MatBase::hom(MatObj x, MatObj y) const {
  const auto cells = x.dim * y.dim;
  const auto n = checked_pow(p_, cells);
  std::vector<Matrix> out;
  out.reserve(n);
  std::vector<Scalar> data(cells, 0);
  for (std::size_t k = 0; k < n; ++k) {
    out.emplace_back(y.dim, x.dim, p_, data);
    for (std::size_t i = cells; i-- > 0;) {
      if (++data[i] < p_) break;
      data[i] = 0;
    }
  }
  return out;
}

std::size_t MatBase::hom_size(MatObj x, MatObj y) const { return saturating_pow(p_, x.dim * y.dim); }

MatBase::ColimitT MatBase::colimit(const FinCategory& shape, const std::vector<MatObj>& objs,
                                   const std::vector<Matrix>& mors) const {
  std::vector<std::size_t> offset(objs.size() + 1, 0);
  for (std::size_t j = 0; j < objs.size(); ++j) offset[j + 1] = offset[j] + objs[j].dim;
  const auto arrows = non_identity(shape);
  std::size_t width = 0;
  for (auto m : arrows) width += objs[shape.source(m)].dim;
  Matrix diff(offset.back(), width, p_);
  std::size_t col = 0;
  for (auto m : arrows) {
    auto s = shape.source(m), t = shape.target(m);
    for (std::size_t c = 0; c < objs[s].dim; ++c) {
      for (std::size_t r = 0; r < objs[t].dim; ++r) diff.at(offset[t] + r, col + c) = mors[m](r, c);
      auto& d = diff.at(offset[s] + c, col + c);
      d = static_cast<Scalar>((d + p_ - 1) % p_);
    }
    col += objs[s].dim;
  }
  auto q = cokernel_projection(diff);
  ColimitT out{{q.rows()}, {}};
  for (std::size_t j = 0; j < objs.size(); ++j) {
    Matrix leg(q.rows(), objs[j].dim, p_);
    for (std::size_t r = 0; r < q.rows(); ++r)
      for (std::size_t c = 0; c < objs[j].dim; ++c) leg.at(r, c) = q(r, offset[j] + c);
    out.legs.push_back(std::move(leg));
  }
  return out;
}

MatBase::LimitT MatBase::limit(const FinCategory& shape, const std::vector<MatObj>& objs,
                               const std::vector<Matrix>& mors) const {
  std::vector<std::size_t> offset(objs.size() + 1, 0);
  for (std::size_t j = 0; j < objs.size(); ++j) offset[j + 1] = offset[j] + objs[j].dim;
  const auto arrows = non_identity(shape);
  std::size_t height = 0;
  for (auto m : arrows) height += objs[shape.target(m)].dim;
  Matrix diff(height, offset.back(), p_);
  std::size_t row = 0;
  for (auto m : arrows) {
    auto s = shape.source(m), t = shape.target(m);
    for (std::size_t r = 0; r < objs[t].dim; ++r) {
      for (std::size_t c = 0; c < objs[s].dim; ++c) diff.at(row + r, offset[s] + c) = mors[m](r, c);
      auto& d = diff.at(row + r, offset[t] + r);
      d = static_cast<Scalar>((d + p_ - 1) % p_);
    }
    row += objs[t].dim;
  }
  auto k = kernel_basis(diff);
  LimitT out{{k.cols()}, {}};
  for (std::size_t j = 0; j < objs.size(); ++j) {
    Matrix leg(objs[j].dim, k.cols(), p_);
    for (std::size_t r = 0; r < objs[j].dim; ++r)
      for (std::size_t c = 0; c < k.cols(); ++c) leg.at(r, c) = k(offset[j] + r, c);
    out.legs.push_back(std::move(leg));
  }
  return out;
}

std::optional<Matrix> MatBase::factor_cocone(const ColimitT& c, MatObj target, const std::vector<Matrix>& legs) const {
  if (legs.size() != c.legs.size()) throw std::invalid_argument("factor_cocone: leg count mismatch");
  for (std::size_t j = 0; j < legs.size(); ++j)
    if (legs[j].rows() != target.dim || legs[j].cols() != c.legs[j].cols())
      throw std::invalid_argument("factor_cocone: leg shape mismatch");
  auto q = hstack(c.legs, c.apex.dim, p_);
  auto l = hstack(legs, target.dim, p_);
  auto ut = solve(q.transpose(), l.transpose());
  if (!ut) return std::nullopt;
  return ut->transpose();
}

std::optional<Matrix> MatBase::factor_cone(const LimitT& c, MatObj source, const std::vector<Matrix>& legs) const {
  if (legs.size() != c.legs.size()) throw std::invalid_argument("factor_cone: leg count mismatch");
  for (std::size_t j = 0; j < legs.size(); ++j)
    if (legs[j].cols() != source.dim || legs[j].rows() != c.legs[j].rows())
      throw std::invalid_argument("factor_cone: leg shape mismatch");
  auto k = vstack(c.legs, c.apex.dim, p_);
  auto l = vstack(legs, source.dim, p_);
  return solve(k, l);
}

Matrix MatBase::symmetry(MatObj x, MatObj y) const {
  Matrix s(x.dim * y.dim, x.dim * y.dim, p_);
  for (std::size_t i = 0; i < x.dim; ++i)
    for (std::size_t j = 0; j < y.dim; ++j) s.at(j * x.dim + i, i * y.dim + j) = 1;
  return s;
}

Matrix MatBase::evaluation(MatObj x, MatObj z) const {
  const auto h = x.dim * z.dim;
  Matrix ev(z.dim, x.dim * h, p_);
  for (std::size_t c = 0; c < x.dim; ++c)
    for (std::size_t r = 0; r < z.dim; ++r) ev.at(r, c * h + r * x.dim + c) = 1;
  return ev;
}

Matrix MatBase::curry(MatObj x, MatObj y, const Matrix& f) const {
  if (f.cols() != x.dim * y.dim) throw std::invalid_argument("curry: source is not x ⊗ y");
  const auto z = f.rows();
  Matrix out(z * x.dim, y.dim, p_);
  for (std::size_t r = 0; r < z; ++r)
    for (std::size_t c = 0; c < x.dim; ++c)
      for (std::size_t j = 0; j < y.dim; ++j) out.at(r * x.dim + c, j) = f(r, c * y.dim + j);
  return out;
}

std::optional<Matrix> MatBase::random_morphism(MatObj x, MatObj y, std::mt19937_64& rng) const {
  std::vector<Scalar> data(x.dim * y.dim);
  for (auto& v : data) v = static_cast<Scalar>(rng() % p_);
  return Matrix(y.dim, x.dim, p_, std::move(data));
}

std::vector<MatObj> MatBase::sample_objects(std::size_t max_size) const {
  std::vector<MatObj> out;
  for (std::size_t n = 0; n <= max_size; ++n) out.push_back({n});
  return out;
}

std::string MatBase::describe(MatObj x) const { return "F" + std::to_string(p_) + "^" + std::to_string(x.dim); }

std::string MatBase::describe(const Matrix& f) const {
  return f.to_string() + ":" + std::to_string(f.cols()) + "->" + std::to_string(f.rows());
}

}  // namespace dlab
