#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "lieschur/linalg.hpp"

namespace lieschur {

/// One nonzero structure-constant row: [e_i, e_j] = coeffs, with i < j (0-based).
struct BracketSpec {
  std::size_t i = 0;
  std::size_t j = 0;
  Vector coeffs;
};

/// A finite-dimensional Lie algebra over Q given by structure constants on a
/// fixed basis e_0..e_{n-1}. Only [e_i, e_j] with i < j is stored;
/// antisymmetry is implied. Every instance satisfies Jacobi exactly.
class LieAlgebra {
 public:
  /// Abelian algebra of the given dimension.
  explicit LieAlgebra(std::size_t dim = 0);

  /// Validates indices, rejects duplicate (i, j) rows, and checks Jacobi on
  /// every triple. Throws Error(IndexOutOfRange / DuplicateBracket /
  /// LengthMismatch) or JacobiViolation.
  static LieAlgebra build(std::size_t dim, const std::vector<BracketSpec>& brackets,
                          std::vector<std::string> labels = {});

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// [e_i, e_j] for any i, j (antisymmetric completion).
  Vector basis_bracket(std::size_t i, std::size_t j) const;
  /// Stored row for i < j.
  const Vector& structure(std::size_t i, std::size_t j) const { return table_[pair_index(i, j)]; }
  /// Coefficient of e_k in [e_i, e_j], i < j.
  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return table_[pair_index(i, j)][k];
  }

  bool is_abelian() const;

  /// Index of e_i ∧ e_j (i < j) in the lexicographic basis of Λ².
  std::size_t pair_index(std::size_t i, std::size_t j) const noexcept {
    return i * dim_ - i * (i + 1) / 2 + (j - i - 1);
  }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.table_ == b.table_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Vector> table_;  // C(dim,2) rows of length dim
  std::vector<std::string> labels_;
};

Vector bracket(const LieAlgebra& L, std::span<const Rational> x, std::span<const Rational> y);

Subspace derived_subalgebra(const LieAlgebra& L);
Subspace center(const LieAlgebra& L);
/// Span of [x, s] for x in L, s in S.
Subspace commutator_with(const LieAlgebra& L, const Subspace& S);

struct SeriesReport {
  std::vector<std::size_t> lcs_dims;           // dim L^1, dim L^2, ... until stable
  std::optional<std::size_t> nilpotency_class;  // empty when not nilpotent
  std::size_t derived_dim = 0;
  std::size_t center_dim = 0;

  bool nilpotent() const { return nilpotency_class.has_value(); }
  friend bool operator==(const SeriesReport&, const SeriesReport&) = default;
};

SeriesReport lower_central_series(const LieAlgebra& L);
bool is_nilpotent(const LieAlgebra& L);

bool is_ideal(const LieAlgebra& L, const Subspace& S);
bool is_central(const LieAlgebra& L, const Subspace& S);

struct QuotientResult {
  LieAlgebra algebra;
  /// (dim L − dim K) × dim L; coordinates of L map to L/K by projection * v.
  Matrix projection;
  /// Indices of the standard basis vectors of L whose images form the quotient basis.
  std::vector<std::size_t> complement;
};

/// L/K on the complement obtained by greedily extending a basis of K with
/// standard basis vectors in increasing order. Throws Error(NotAnIdeal).
QuotientResult quotient(const LieAlgebra& L, const Subspace& K);

/// Block sum; L1's basis comes first.
LieAlgebra direct_sum(const LieAlgebra& L1, const LieAlgebra& L2);

/// Re-expresses L on the basis f_a = sum_i P(a, i) e_i (rows of P are the new
/// basis vectors in old coordinates). Throws Error(SingularMatrix).
LieAlgebra change_of_basis(const LieAlgebra& L, const Matrix& P);

}  // namespace lieschur
