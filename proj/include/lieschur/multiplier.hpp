#pragma once

// Schur multiplier dimension as H_2 of the Chevalley–Eilenberg complex
// Λ³L → Λ²L → L with trivial coefficients, plus the defect invariants and the
// inequality checks built from it.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lieschur/lie_algebra.hpp"

namespace lieschur {

struct MultiplierReport {
  std::size_t n = 0;
  std::size_t rank_d2 = 0;
  std::size_t rank_d3 = 0;
  std::size_t dim_M = 0;
  long t = 0;  // n(n-1)/2 - dim M
  long s = 0;  // (n-1)(n-2)/2 + 1 - dim M
};

/// Λ²L → L as an n × C(n,2) matrix (columns are e_i∧e_j, lex order).
Matrix ce_d2(const LieAlgebra& L);
/// Λ³L → Λ²L as a C(n,2) × C(n,3) matrix, with
/// e_i∧e_j∧e_k ↦ [e_i,e_j]∧e_k − [e_i,e_k]∧e_j + [e_j,e_k]∧e_i.
Matrix ce_d3(const LieAlgebra& L);

/// Throws Error(ComplexNotExact) if d2·d3 ≠ 0.
MultiplierReport schur_multiplier_dim(const LieAlgebra& L);

long t_defect(std::size_t n, std::size_t dim_M);
long s_defect(std::size_t n, std::size_t dim_M);

/// dim M of an abelian algebra of dimension k.
std::size_t abelian_multiplier_dim(std::size_t k);

/// (dim H − dim H²) · k_dim
std::size_t tensor_term_dim(const LieAlgebra& H, std::size_t k_dim);

struct KunnethCheck {
  bool holds = false;
  std::size_t lhs = 0;  // dim M(L1 ⊕ L2) by homology of the sum
  std::size_t dim_M1 = 0;
  std::size_t dim_M2 = 0;
  std::size_t tensor = 0;  // dim(L1/L1² ⊗ L2/L2²)
  std::size_t rhs() const { return dim_M1 + dim_M2 + tensor; }
};

KunnethCheck check_kunneth(const LieAlgebra& L1, const LieAlgebra& L2);

/// Terms of dim M(L) + dim(L²∩K) ≤ dim M(L/K) + dim M(K) + dim(H/H²⊗K).
struct QuotientBoundCheck {
  bool holds = false;
  std::size_t dim_M_L = 0;
  std::size_t dim_L2_cap_K = 0;
  std::size_t dim_M_H = 0;
  std::size_t dim_M_K = 0;
  std::size_t tensor = 0;
  std::size_t lhs() const { return dim_M_L + dim_L2_cap_K; }
  std::size_t rhs() const { return dim_M_H + dim_M_K + tensor; }
};

/// Throws Error(NotCentral) unless K ⊆ Z(L).
QuotientBoundCheck check_quotient_bound(const LieAlgebra& L, const Subspace& K);

struct DefectBoundsCheck {
  bool holds = false;
  std::size_t n = 0;
  std::size_t derived_dim = 0;
  std::size_t dim_M = 0;
  long t = 0;
  long s = 0;
  bool t_ok = false;
  std::optional<bool> s_ok;          // unset for abelian L
  std::optional<long> derived_bound;  // ½(n+k−2)(n−k−1)+1 when k ≥ 1
  std::optional<bool> derived_ok;
  std::string describe() const;
};

/// Right side of dim M(L) ≤ ½(n+k−2)(n−k−1)+1 for k = dim L² ≥ 1.
long derived_dim_bound(std::size_t n, std::size_t k);

/// Throws Error(NotNilpotent).
DefectBoundsCheck check_defect_bounds(const LieAlgebra& L);

}  // namespace lieschur
