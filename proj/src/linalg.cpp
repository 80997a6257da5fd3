#include "lieschur/linalg.hpp"

#include <cctype>
#include <utility>

#include "lieschur/error.hpp"

namespace lieschur {

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  const auto bad = [&] { return Error(ErrorKind::InvalidArgument, "malformed rational '" + text + "'"); };
  if (text.empty()) throw bad();
  std::size_t slash = text.find('/');
  const auto check_int = [&](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) throw bad();
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw bad();
  };
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  check_int(num, true);
  check_int(den, false);
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + text + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v = zero_vector(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

std::string to_string(std::span<const Rational> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].get_str();
  }
  return out + ")";
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols)
    throw Error(ErrorKind::LengthMismatch, "matrix entry count does not match shape");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::LengthMismatch, "row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return Vector(s.begin(), s.end());
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const { return lieschur::is_zero(data_); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::LengthMismatch, "matrix product shape mismatch");
  Matrix out(a.rows(), b.cols());
  Rational tmp;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (sgn(b(k, j)) == 0) continue;
        tmp = aik * b(k, j);
        out(i, j) += tmp;
      }
    }
  return out;
}

Vector operator*(std::span<const Rational> v, const Matrix& m) {
  if (v.size() != m.rows()) throw Error(ErrorKind::LengthMismatch, "vector-matrix shape mismatch");
  Vector out = zero_vector(m.cols());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0) out[j] += v[i] * m(i, j);
  }
  return out;
}

Vector operator*(const Matrix& m, std::span<const Rational> v) {
  if (v.size() != m.cols()) throw Error(ErrorKind::LengthMismatch, "matrix-vector shape mismatch");
  Vector out = zero_vector(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0 && sgn(v[j]) != 0) out[i] += m(i, j) * v[j];
  return out;
}

// ---------------------------------------------------------------- RREF

RrefResult rref(Matrix m) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t lead = 0;
  Rational factor;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t p = lead;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != lead)
      for (std::size_t j = c; j < cols; ++j) swap(m(p, j), m(lead, j));

    // Normalize the pivot row to a leading 1.
    if (m(lead, c) != 1) {
      Rational inv = 1 / m(lead, c);
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(m(lead, j)) != 0) m(lead, j) *= inv;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || sgn(m(r, c)) == 0) continue;
      factor = m(r, c);
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(m(lead, j)) != 0) m(r, j) -= factor * m(lead, j);
    }
    pivots.push_back(c);
    ++lead;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
  // Eliminate along the shorter side; rank is transpose-invariant.
  if (m.cols() > m.rows()) return rref(m.transpose()).pivots.size();
  return rref(m).pivots.size();
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::SingularMatrix, "matrix is not square");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto [red, pivots] = rref(std::move(aug));
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1))
    throw Error(ErrorKind::SingularMatrix, "matrix is singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = red(i, n + j);
  return inv;
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(std::size_t ambient_dim) : basis_(0, ambient_dim) {}

Subspace Subspace::full(std::size_t ambient_dim) { return row_space(Matrix::identity(ambient_dim)); }

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  return row_space(Matrix::from_rows(ambient_dim, vectors));
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row_vector(r));
  return out;
}

Subspace row_space(const Matrix& m) {
  auto [red, pivots] = rref(m);
  Subspace s(m.cols());
  std::vector<Rational> entries(red.entries().begin(),
                                red.entries().begin() + static_cast<std::ptrdiff_t>(pivots.size() * m.cols()));
  s.basis_ = Matrix(pivots.size(), m.cols(), std::move(entries));
  s.pivots_ = std::move(pivots);
  return s;
}

Subspace kernel_basis(const Matrix& m) {
  const std::size_t n = m.cols();
  auto [red, pivots] = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> vectors;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(n);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red(r, free);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(n, vectors);
}

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorKind::AmbientMismatch, "subspaces live in different ambient spaces (" +
                                                std::to_string(a.ambient_dim()) + " vs " +
                                                std::to_string(b.ambient_dim()) + ")");
}

}  // namespace

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  auto rows = a.basis_vectors();
  for (auto& v : b.basis_vectors()) rows.push_back(std::move(v));
  return Subspace::span(a.ambient_dim(), rows);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  // a ∩ b = ann(ann(a) + ann(b)), with ann(S) = {v : s·v = 0 for s in S}.
  Subspace ann = subspace_sum(kernel_basis(a.basis()), kernel_basis(b.basis()));
  return kernel_basis(ann.basis());
}

bool contains(const Subspace& a, std::span<const Rational> v) {
  if (v.size() != a.ambient_dim())
    throw Error(ErrorKind::AmbientMismatch, "vector length does not match ambient dimension");
  Vector rest(v.begin(), v.end());
  const auto& basis = a.basis();
  for (std::size_t r = 0; r < a.dim(); ++r) {
    Rational coeff = rest[a.pivots()[r]];
    if (sgn(coeff) == 0) continue;
    for (std::size_t j = 0; j < rest.size(); ++j)
      if (sgn(basis(r, j)) != 0) rest[j] -= coeff * basis(r, j);
  }
  return is_zero(rest);
}

bool is_subspace_of(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  for (std::size_t r = 0; r < a.dim(); ++r)
    if (!contains(b, a.basis().row(r))) return false;
  return true;
}

}  // namespace lieschur
