#pragma once

// Dense matrices over a prime field F_p with exact Gaussian elimination.
// Column-vector convention: a map of dimension m → n is an n × m matrix.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dlab {

using Scalar = std::uint32_t;

bool is_prime(std::uint64_t p);

class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Scalar p) : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}
  Matrix(std::size_t rows, std::size_t cols, Scalar p, std::vector<Scalar> data);

  static Matrix identity(std::size_t n, Scalar p);
  static Matrix zero(std::size_t rows, std::size_t cols, Scalar p) { return Matrix(rows, cols, p); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar modulus() const { return p_; }
  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const std::vector<Scalar>& data() const { return data_; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(Scalar s) const;
  Matrix transpose() const;
  /// Kronecker product; basis e_i ⊗ e_j has index i * dim(second) + j.
  Matrix kron(const Matrix& o) const;
  bool operator==(const Matrix& o) const = default;

  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Scalar p_ = 2;
  std::vector<Scalar> data_;
};

Scalar inverse_mod(Scalar a, Scalar p);

/// Reduced row echelon form with leftmost pivot selection.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};
Echelon rref(const Matrix& m);

std::size_t rank(const Matrix& m);
/// Basis of the null space as the columns of an (cols × nullity) matrix, one
/// vector per free column in increasing order.
Matrix kernel_basis(const Matrix& m);
/// The quotient map F_p^n → F_p^n / colspace(m), in the basis of free
/// coordinates of the echelon form of mᵀ.
Matrix cokernel_projection(const Matrix& m);
/// Some X with a · X = b, or nullopt if inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);

/// Stacks blocks vertically / horizontally.
Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols, Scalar p);
Matrix hstack(const std::vector<Matrix>& blocks, std::size_t rows, Scalar p);

}  // namespace dlab
