#include "lieschur/multiplier.hpp"

#include <sstream>

#include "lieschur/error.hpp"

namespace lieschur {

namespace {

std::size_t choose2(std::size_t n) { return n * (n ? n - 1 : 0) / 2; }
std::size_t choose3(std::size_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

// Adds coeff * (v ∧ e_k) to column `col` of a Λ² matrix.
void add_wedge(const LieAlgebra& L, Matrix& m, std::size_t col, const Rational& sign,
               const Vector& v, std::size_t k) {
  for (std::size_t a = 0; a < v.size(); ++a) {
    if (a == k || sgn(v[a]) == 0) continue;
    if (a < k)
      m(L.pair_index(a, k), col) += sign * v[a];
    else
      m(L.pair_index(k, a), col) -= sign * v[a];
  }
}

}  // namespace

Matrix ce_d2(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  Matrix d2(n, choose2(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector& v = L.structure(i, j);
      const std::size_t col = L.pair_index(i, j);
      for (std::size_t k = 0; k < n; ++k) d2(k, col) = v[k];
    }
  return d2;
}

Matrix ce_d3(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  Matrix d3(choose2(n), choose3(n));
  const Rational plus(1), minus(-1);
  std::size_t col = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k, ++col) {
        add_wedge(L, d3, col, plus, L.structure(i, j), k);
        add_wedge(L, d3, col, minus, L.structure(i, k), j);
        add_wedge(L, d3, col, plus, L.structure(j, k), i);
      }
  return d3;
}

long t_defect(std::size_t n, std::size_t dim_M) {
  return static_cast<long>(choose2(n)) - static_cast<long>(dim_M);
}

long s_defect(std::size_t n, std::size_t dim_M) {
  const long m = static_cast<long>(n);
  return (m - 1) * (m - 2) / 2 + 1 - static_cast<long>(dim_M);
}

std::size_t abelian_multiplier_dim(std::size_t k) { return choose2(k); }

MultiplierReport schur_multiplier_dim(const LieAlgebra& L) {
  const Matrix d2 = ce_d2(L);
  const Matrix d3 = ce_d3(L);
  if (!(d2 * d3).is_zero())
    throw Error(ErrorKind::ComplexNotExact, "d2 * d3 != 0; structure constants are inconsistent");
  MultiplierReport r;
  r.n = L.dim();
  r.rank_d2 = rank(d2);
  r.rank_d3 = rank(d3);
  r.dim_M = choose2(r.n) - r.rank_d2 - r.rank_d3;
  r.t = t_defect(r.n, r.dim_M);
  r.s = s_defect(r.n, r.dim_M);
  return r;
}

std::size_t tensor_term_dim(const LieAlgebra& H, std::size_t k_dim) {
  return (H.dim() - derived_subalgebra(H).dim()) * k_dim;
}

KunnethCheck check_kunneth(const LieAlgebra& L1, const LieAlgebra& L2) {
  KunnethCheck c;
  c.lhs = schur_multiplier_dim(direct_sum(L1, L2)).dim_M;
  c.dim_M1 = schur_multiplier_dim(L1).dim_M;
  c.dim_M2 = schur_multiplier_dim(L2).dim_M;
  c.tensor = (L1.dim() - derived_subalgebra(L1).dim()) * (L2.dim() - derived_subalgebra(L2).dim());
  c.holds = c.lhs == c.rhs();
  return c;
}

QuotientBoundCheck check_quotient_bound(const LieAlgebra& L, const Subspace& K) {
  if (K.ambient_dim() != L.dim())
    throw Error(ErrorKind::AmbientMismatch, "subspace ambient dimension does not match algebra");
  if (!is_central(L, K)) throw Error(ErrorKind::NotCentral, "K is not contained in the center");
  const LieAlgebra H = quotient(L, K).algebra;
  QuotientBoundCheck c;
  c.dim_M_L = schur_multiplier_dim(L).dim_M;
  c.dim_L2_cap_K = subspace_intersect(derived_subalgebra(L), K).dim();
  c.dim_M_H = schur_multiplier_dim(H).dim_M;
  c.dim_M_K = abelian_multiplier_dim(K.dim());
  c.tensor = tensor_term_dim(H, K.dim());
  c.holds = c.lhs() <= c.rhs();
  return c;
}

long derived_dim_bound(std::size_t n, std::size_t k) {
  const long a = static_cast<long>(n) + static_cast<long>(k) - 2;
  const long b = static_cast<long>(n) - static_cast<long>(k) - 1;
  return a * b / 2 + 1;
}

DefectBoundsCheck check_defect_bounds(const LieAlgebra& L) {
  if (!is_nilpotent(L)) throw Error(ErrorKind::NotNilpotent, "algebra is not nilpotent");
  DefectBoundsCheck c;
  const MultiplierReport m = schur_multiplier_dim(L);
  c.n = m.n;
  c.dim_M = m.dim_M;
  c.t = m.t;
  c.s = m.s;
  c.derived_dim = derived_subalgebra(L).dim();
  c.t_ok = c.t >= 0;
  c.holds = c.t_ok;
  if (c.derived_dim > 0) {
    c.s_ok = c.s >= 0;
    c.derived_bound = derived_dim_bound(c.n, c.derived_dim);
    c.derived_ok = static_cast<long>(c.dim_M) <= *c.derived_bound;
    c.holds = c.holds && *c.s_ok && *c.derived_ok;
  }
  return c;
}

std::string DefectBoundsCheck::describe() const {
  std::ostringstream os;
  os << "n=" << n << " dimL2=" << derived_dim << " dimM=" << dim_M << " t=" << t
     << " t_ok=" << (t_ok ? "yes" : "no");
  if (s_ok) os << " s=" << s << " s_ok=" << (*s_ok ? "yes" : "no");
  else os << " s=skipped";
  if (derived_bound)
    os << " bound=" << *derived_bound << " bound_ok=" << (*derived_ok ? "yes" : "no");
  return os.str();
}

}  // namespace lieschur
