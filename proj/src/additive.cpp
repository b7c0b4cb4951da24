#include "dlab/additive.hpp"

namespace dlab {

std::vector<std::vector<Matrix>> mat_center_basis(const MatBase& b, std::size_t max_dim) {
  const Scalar p = b.prime();
  // unknown (n, r, c) ↦ offset[n] + r * n + c
  std::vector<std::size_t> offset(max_dim + 2, 0);
  for (std::size_t n = 1; n <= max_dim; ++n) offset[n + 1] = offset[n] + n * n;
  const std::size_t vars = offset[max_dim + 1];
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t m = 1; m <= max_dim; ++m)
    for (std::size_t n = 1; n <= max_dim; ++n)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          // (τ_n E_ij - E_ij τ_m)(r, c) = [c == j] τ_n(r, i) - [r == i] τ_m(j, c)
          for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < m; ++c) {
              std::vector<Scalar> row(vars, 0);
              if (c == j) row[offset[n] + r * n + i] = (row[offset[n] + r * n + i] + 1) % p;
              if (r == i) row[offset[m] + j * m + c] = (row[offset[m] + j * m + c] + p - 1) % p;
              rows.push_back(std::move(row));
            }
        }
  std::vector<Scalar> flat;
  for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
  Matrix sys(rows.size(), vars, p, flat);
  Matrix ker = kernel_basis(sys);
  std::vector<std::vector<Matrix>> out;
  for (std::size_t k = 0; k < ker.cols(); ++k) {
    std::vector<Matrix> blocks;
    for (std::size_t n = 1; n <= max_dim; ++n) {
      Matrix t(n, n, p);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) t.at(r, c) = ker(offset[n] + r * n + c, k);
      blocks.push_back(t);
    }
    out.push_back(std::move(blocks));
  }
  return out;
}

CenterDescription<MatBase> center(const MatBase& b, std::size_t max_dim) {
  auto basis = mat_center_basis(b, max_dim);
  const Scalar p = b.prime();
  bool scalar = basis.size() == 1;
  if (scalar)
    for (std::size_t n = 1; n <= max_dim; ++n)
      scalar = scalar && basis[0][n - 1] == Matrix::identity(n, p).scaled(basis[0][n - 1](0, 0));
  if (!scalar) throw CategoryError("center of " + b.name() + " is not spanned by the identity up to dimension " +
                                   std::to_string(max_dim));
  CenterDescription<MatBase> d;
  d.ring = "F_" + std::to_string(p);
  for (Scalar c = 0; c < p; ++c)
    d.elements.push_back({std::to_string(c), [c, p](const MatObj& x) { return Matrix::identity(x.dim, p).scaled(c); }});
  return d;
}

CenterDescription<FinSetBase> center(const FinSetBase& b, std::size_t max_size) {
  auto fams = natural_endo_families(b, b.sample_objects(max_size));
  for (const auto& f : fams)
    for (std::size_t i = 0; i < f.size(); ++i)
      if (!(f[i] == b.identity(f[i].source == f[i].target ? FinSet{f[i].source} : FinSet{})))
        throw CategoryError("finset has a non-identity natural endomorphism of the identity");
  CenterDescription<FinSetBase> d;
  d.ring = "trivial monoid {id}";
  d.elements.push_back({"id", [b](const FinSet& x) { return b.identity(x); }});
  return d;
}

}  // namespace dlab
