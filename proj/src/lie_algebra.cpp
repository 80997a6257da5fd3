#include "lieschur/lie_algebra.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "lieschur/error.hpp"

namespace lieschur {

LieAlgebra::LieAlgebra(std::size_t dim)
    : dim_(dim), table_(dim * (dim ? dim - 1 : 0) / 2, zero_vector(dim)) {}

LieAlgebra LieAlgebra::build(std::size_t dim, const std::vector<BracketSpec>& brackets,
                             std::vector<std::string> labels) {
  LieAlgebra L(dim);
  if (!labels.empty() && labels.size() != dim)
    throw Error(ErrorKind::LengthMismatch, "label count does not match dimension");
  L.labels_ = std::move(labels);

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& b : brackets) {
    if (b.i >= dim || b.j >= dim || b.i >= b.j)
      throw Error(ErrorKind::IndexOutOfRange,
                  "bracket [e" + std::to_string(b.i + 1) + ",e" + std::to_string(b.j + 1) +
                      "] needs 1 <= i < j <= " + std::to_string(dim));
    if (b.coeffs.size() != dim)
      throw Error(ErrorKind::LengthMismatch, "coefficient vector of [e" + std::to_string(b.i + 1) +
                                                 ",e" + std::to_string(b.j + 1) + "] has length " +
                                                 std::to_string(b.coeffs.size()));
    if (!seen.emplace(b.i, b.j).second)
      throw Error(ErrorKind::DuplicateBracket, "bracket [e" + std::to_string(b.i + 1) + ",e" +
                                                   std::to_string(b.j + 1) + "] given twice");
    L.table_[L.pair_index(b.i, b.j)] = b.coeffs;
  }

  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      for (std::size_t k = j + 1; k < dim; ++k) {
        const Vector ek = unit_vector(dim, k);
        const Vector ei = unit_vector(dim, i);
        const Vector ej = unit_vector(dim, j);
        Vector defect = bracket(L, L.structure(i, j), ek);
        const Vector t2 = bracket(L, L.structure(j, k), ei);
        const Vector t3 = bracket(L, L.basis_bracket(k, i), ej);
        for (std::size_t a = 0; a < dim; ++a) defect[a] += t2[a] + t3[a];
        if (!is_zero(defect)) throw JacobiViolation({i, j, k}, to_string(defect));
      }
  return L;
}

Vector LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw Error(ErrorKind::IndexOutOfRange, "basis index out of range");
  if (i == j) return zero_vector(dim_);
  if (i < j) return structure(i, j);
  Vector v = structure(j, i);
  for (auto& x : v) x = -x;
  return v;
}

bool LieAlgebra::is_abelian() const {
  for (const auto& row : table_)
    if (!is_zero(row)) return false;
  return true;
}

Vector bracket(const LieAlgebra& L, std::span<const Rational> x, std::span<const Rational> y) {
  const std::size_t n = L.dim();
  if (x.size() != n || y.size() != n)
    throw Error(ErrorKind::LengthMismatch, "bracket operand length does not match dimension");
  Vector out = zero_vector(n);
  Rational coeff;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      // x_a y_b [e_a,e_b] + x_b y_a [e_b,e_a]
      coeff = x[a] * y[b] - x[b] * y[a];
      if (sgn(coeff) == 0) continue;
      const Vector& row = L.structure(a, b);
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(row[k]) != 0) out[k] += coeff * row[k];
    }
  return out;
}

Subspace derived_subalgebra(const LieAlgebra& L) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j)
      if (!is_zero(L.structure(i, j))) rows.push_back(L.structure(i, j));
  return Subspace::span(L.dim(), rows);
}

Subspace center(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  // Row (j, k), column i: coefficient of e_k in [e_i, e_j].
  Matrix ad(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Vector v = L.basis_bracket(i, j);
      for (std::size_t k = 0; k < n; ++k) ad(j * n + k, i) = v[k];
    }
  return kernel_basis(ad);
}

Subspace commutator_with(const LieAlgebra& L, const Subspace& S) {
  if (S.ambient_dim() != L.dim())
    throw Error(ErrorKind::AmbientMismatch, "subspace ambient dimension does not match algebra");
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < S.dim(); ++r)
    for (std::size_t j = 0; j < L.dim(); ++j) {
      Vector v = bracket(L, unit_vector(L.dim(), j), S.basis().row(r));
      if (!is_zero(v)) rows.push_back(std::move(v));
    }
  return Subspace::span(L.dim(), rows);
}

SeriesReport lower_central_series(const LieAlgebra& L) {
  SeriesReport report;
  Subspace term = Subspace::full(L.dim());
  report.lcs_dims.push_back(term.dim());
  while (term.dim() > 0) {
    Subspace next = commutator_with(L, term);
    if (next.dim() == term.dim()) break;
    report.lcs_dims.push_back(next.dim());
    term = std::move(next);
  }
  if (term.dim() == 0) {
    // Index (1-based) of the last nonzero term; the zero algebra has class 0.
    report.nilpotency_class = report.lcs_dims.size() - 1;
  }
  report.derived_dim = derived_subalgebra(L).dim();
  report.center_dim = center(L).dim();
  return report;
}

bool is_nilpotent(const LieAlgebra& L) { return lower_central_series(L).nilpotent(); }

bool is_ideal(const LieAlgebra& L, const Subspace& S) {
  return is_subspace_of(commutator_with(L, S), S);
}

bool is_central(const LieAlgebra& L, const Subspace& S) { return commutator_with(L, S).dim() == 0; }

QuotientResult quotient(const LieAlgebra& L, const Subspace& K) {
  const std::size_t n = L.dim();
  if (K.ambient_dim() != n)
    throw Error(ErrorKind::AmbientMismatch, "subspace ambient dimension does not match algebra");
  if (!is_ideal(L, K)) throw Error(ErrorKind::NotAnIdeal, "subspace is not an ideal");

  std::vector<Vector> rows = K.basis_vectors();
  std::vector<std::size_t> complement;
  Subspace current = K;
  for (std::size_t c = 0; c < n && current.dim() < n; ++c) {
    Vector e = unit_vector(n, c);
    if (contains(current, e)) continue;
    complement.push_back(c);
    rows.push_back(e);
    current = Subspace::span(n, rows);
  }

  const std::size_t q = complement.size();
  const Matrix change_inv = inverse(Matrix::from_rows(n, rows));
  Matrix proj(q, n);
  for (std::size_t r = 0; r < q; ++r)
    for (std::size_t i = 0; i < n; ++i) proj(r, i) = change_inv(i, K.dim() + r);

  std::vector<BracketSpec> specs;
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = a + 1; b < q; ++b) {
      Vector image = proj * std::span<const Rational>(L.basis_bracket(complement[a], complement[b]));
      if (!is_zero(image)) specs.push_back({a, b, std::move(image)});
    }
  return {LieAlgebra::build(q, specs), std::move(proj), std::move(complement)};
}

LieAlgebra direct_sum(const LieAlgebra& L1, const LieAlgebra& L2) {
  const std::size_t n1 = L1.dim();
  const std::size_t n = n1 + L2.dim();
  std::vector<BracketSpec> specs;
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = i + 1; j < n1; ++j)
      if (!is_zero(L1.structure(i, j))) {
        Vector v = zero_vector(n);
        std::copy(L1.structure(i, j).begin(), L1.structure(i, j).end(), v.begin());
        specs.push_back({i, j, std::move(v)});
      }
  for (std::size_t i = 0; i < L2.dim(); ++i)
    for (std::size_t j = i + 1; j < L2.dim(); ++j)
      if (!is_zero(L2.structure(i, j))) {
        Vector v = zero_vector(n);
        std::copy(L2.structure(i, j).begin(), L2.structure(i, j).end(), v.begin() + static_cast<std::ptrdiff_t>(n1));
        specs.push_back({n1 + i, n1 + j, std::move(v)});
      }
  std::vector<std::string> labels;
  if (!L1.labels().empty() && !L2.labels().empty()) {
    labels = L1.labels();
    labels.insert(labels.end(), L2.labels().begin(), L2.labels().end());
  }
  return LieAlgebra::build(n, specs, std::move(labels));
}

LieAlgebra change_of_basis(const LieAlgebra& L, const Matrix& P) {
  const std::size_t n = L.dim();
  if (P.rows() != n || P.cols() != n)
    throw Error(ErrorKind::SingularMatrix, "basis change must be a " + std::to_string(n) + "x" +
                                               std::to_string(n) + " matrix");
  const Matrix P_inv = inverse(P);
  std::vector<BracketSpec> specs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const Vector w = bracket(L, P.row(a), P.row(b));
      if (is_zero(w)) continue;
      specs.push_back({a, b, std::span<const Rational>(w) * P_inv});
    }
  return LieAlgebra::build(n, specs);
}

}  // namespace lieschur
