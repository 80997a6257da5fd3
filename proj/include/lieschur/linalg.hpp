#pragma once

// Exact dense linear algebra over the rationals.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace lieschur {

/// Arbitrary-precision fraction, always kept in canonical form
/// (positive denominator, coprime parts).
using Rational = mpq_class;
using Vector = std::vector<Rational>;

Rational make_rational(long num, long den = 1);
/// Parses "p" or "p/q"; throws Error(InvalidArgument) on malformed text or q == 0.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Rational> v);
std::string to_string(std::span<const Rational> v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;

  const std::vector<Rational>& entries() const noexcept { return data_; }

  Matrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
/// Row vector times matrix: returns v·m.
Vector operator*(std::span<const Rational> v, const Matrix& m);
/// Matrix times column vector.
Vector operator*(const Matrix& m, std::span<const Rational> v);

struct RrefResult {
  Matrix matrix;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form with unit pivots, leftmost-pivot convention.
RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Inverse of a square matrix; throws Error(SingularMatrix) if not invertible.
Matrix inverse(const Matrix& m);

/// A linear subspace of Q^n stored as its canonical RREF basis, so two values
/// compare equal exactly when they are the same subspace.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim);  // zero subspace

  static Subspace full(std::size_t ambient_dim);
  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);

  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  std::vector<Vector> basis_vectors() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  friend Subspace row_space(const Matrix& m);
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace row_space(const Matrix& m);
/// {v : m·v = 0}
Subspace kernel_basis(const Matrix& m);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool contains(const Subspace& a, std::span<const Rational> v);
/// True iff every vector of a lies in b.
bool is_subspace_of(const Subspace& a, const Subspace& b);

}  // namespace lieschur
