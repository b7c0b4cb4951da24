#include "dlab/finite_field.hpp"

#include <sstream>

namespace dlab {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Scalar inverse_mod(Scalar a, Scalar p) {
  // Fermat: a^(p-2).
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<Scalar>(r);
}

Matrix::Matrix(std::size_t rows, std::size_t cols, Scalar p, std::vector<Scalar> data)
    : rows_(rows), cols_(cols), p_(p), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("matrix data size does not match shape");
  for (auto& x : data_) x %= p_;
}

Matrix Matrix::identity(std::size_t n, Scalar p) {
  Matrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1 % p;
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_ || p_ != o.p_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix r(rows_, o.cols_, p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      auto a = (*this)(i, k);
      if (!a) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.data_[i * o.cols_ + j] = static_cast<Scalar>((r.data_[i * o.cols_ + j] + std::uint64_t(a) * o(k, j)) % p_);
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_) throw std::invalid_argument("matrix sum shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = (data_[i] + o.data_[i]) % p_;
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_) throw std::invalid_argument("matrix difference shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = (data_[i] + p_ - o.data_[i]) % p_;
  return r;
}

Matrix Matrix::scaled(Scalar s) const {
  Matrix r = *this;
  for (auto& x : r.data_) x = static_cast<Scalar>(std::uint64_t(x) * (s % p_) % p_);
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_, p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = (*this)(i, j);
  return r;
}

Matrix Matrix::kron(const Matrix& o) const {
  if (p_ != o.p_) throw std::invalid_argument("kronecker product over different fields");
  Matrix r(rows_ * o.rows_, cols_ * o.cols_, p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      auto a = (*this)(i, j);
      if (!a) continue;
      for (std::size_t k = 0; k < o.rows_; ++k)
        for (std::size_t l = 0; l < o.cols_; ++l)
          r.at(i * o.rows_ + k, j * o.cols_ + l) = static_cast<Scalar>(std::uint64_t(a) * o(k, l) % p_);
    }
  return r;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ',';
      os << (*this)(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

Echelon rref(const Matrix& m) {
  Echelon e{m, {}};
  auto& a = e.reduced;
  const auto p = m.modulus();
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(row, j));
    auto inv = inverse_mod(a(row, col), p);
    for (std::size_t j = 0; j < a.cols(); ++j) a.at(row, j) = static_cast<Scalar>(std::uint64_t(a(row, j)) * inv % p);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      auto factor = a(i, col);
      for (std::size_t j = 0; j < a.cols(); ++j)
        a.at(i, j) = static_cast<Scalar>((a(i, j) + std::uint64_t(p - factor) * a(row, j)) % p);
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
  auto e = rref(m);
  const auto p = m.modulus();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix k(m.cols(), free.size(), p);
  for (std::size_t v = 0; v < free.size(); ++v) {
    k.at(free[v], v) = 1 % p;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      k.at(e.pivots[r], v) = static_cast<Scalar>((p - e.reduced(r, free[v])) % p);
  }
  return k;
}

Matrix cokernel_projection(const Matrix& m) {
  // Rows of rref(mᵀ) span the image; the free coordinates index the quotient.
  const auto n = m.rows();
  const auto p = m.modulus();
  auto e = rref(m.transpose());
  std::vector<std::int64_t> pivot_row(n, -1);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) pivot_row[e.pivots[r]] = static_cast<std::int64_t>(r);
  std::vector<std::size_t> free;
  std::vector<std::int64_t> free_index(n, -1);
  for (std::size_t c = 0; c < n; ++c)
    if (pivot_row[c] < 0) {
      free_index[c] = static_cast<std::int64_t>(free.size());
      free.push_back(c);
    }
  Matrix q(free.size(), n, p);
  for (std::size_t i = 0; i < n; ++i) {
    if (pivot_row[i] < 0) {
      q.at(static_cast<std::size_t>(free_index[i]), i) = 1 % p;
    } else {
      auto r = static_cast<std::size_t>(pivot_row[i]);
      for (std::size_t f = 0; f < free.size(); ++f)
        q.at(f, i) = static_cast<Scalar>((p - e.reduced(r, free[f])) % p);
    }
  }
  return q;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  const auto p = a.modulus();
  Matrix aug(a.rows(), a.cols() + b.cols(), p);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug.at(i, a.cols() + j) = b(i, j);
  }
  auto e = rref(aug);
  Matrix x(a.cols(), b.cols(), p);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    auto c = e.pivots[r];
    if (c >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x.at(c, j) = e.reduced(r, a.cols() + j);
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, Matrix::identity(m.rows(), m.modulus()));
}

Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols, Scalar p) {
  std::size_t rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  Matrix r(rows, cols, p);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < cols; ++j) r.at(off + i, j) = b(i, j);
    off += b.rows();
  }
  return r;
}

Matrix hstack(const std::vector<Matrix>& blocks, std::size_t rows, Scalar p) {
  std::size_t cols = 0;
  for (const auto& b : blocks) cols += b.cols();
  Matrix r(rows, cols, p);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, off + j) = b(i, j);
    off += b.cols();
  }
  return r;
}

}  // namespace dlab
