#pragma once

// Test-only oracle: dim H_2 of the Chevalley–Eilenberg complex computed from
// raw structure constants with its own wedge bookkeeping and Gaussian
// elimination modulo a large prime. Shares no code with the library's
// rational RREF path.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "lieschur/lie_algebra.hpp"

namespace oracle {

constexpr std::int64_t kPrime = 2147483647;  // 2^31 - 1

inline std::int64_t mod(std::int64_t a) { return ((a % kPrime) + kPrime) % kPrime; }

inline std::int64_t power(std::int64_t b, std::int64_t e) {
  std::int64_t r = 1;
  b = mod(b);
  while (e) {
    if (e & 1) r = r * b % kPrime;
    b = b * b % kPrime;
    e >>= 1;
  }
  return r;
}

inline std::int64_t reduce(const lieschur::Rational& q) {
  const std::int64_t num = mod(mpz_class(q.get_num() % kPrime).get_si());
  const std::int64_t den = mod(mpz_class(q.get_den() % kPrime).get_si());
  return num * power(den, kPrime - 2) % kPrime;
}

inline std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    const std::int64_t inv = power(m[rank][c], kPrime - 2);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const std::int64_t f = m[r][c] * inv % kPrime;
      for (std::size_t j = c; j < cols; ++j) m[r][j] = mod(m[r][j] - f * m[rank][j] % kPrime);
    }
    ++rank;
  }
  return rank;
}

/// dim ker(d2) − rank(d3), with d(x∧y∧z) = Σ_{a<b} (−1)^{a+b} [x_a,x_b] ∧ rest.
inline std::size_t multiplier_dim(const lieschur::LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> wedge2;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) wedge2.emplace(std::make_pair(i, j), wedge2.size());

  auto coeff = [&](std::size_t i, std::size_t j, std::size_t k) -> std::int64_t {
    if (i == j) return 0;
    if (i < j) return reduce(L.constant(i, j, k));
    return mod(-reduce(L.constant(j, i, k)));
  };

  std::vector<std::vector<std::int64_t>> d2(n, std::vector<std::int64_t>(wedge2.size(), 0));
  for (const auto& [ij, col] : wedge2)
    for (std::size_t k = 0; k < n; ++k) d2[k][col] = coeff(ij.first, ij.second, k);

  std::vector<std::vector<std::int64_t>> d3;  // one row per basis 3-vector
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        std::vector<std::int64_t> row(wedge2.size(), 0);
        const std::size_t x[3] = {i, j, k};
        for (int a = 0; a < 3; ++a)
          for (int b = a + 1; b < 3; ++b) {
            const std::size_t rest = x[3 - a - b];
            const std::int64_t sign = ((a + b) % 2 == 0) ? 1 : kPrime - 1;
            for (std::size_t t = 0; t < n; ++t) {
              const std::int64_t c = coeff(x[a], x[b], t);
              if (c == 0 || t == rest) continue;
              // e_t ∧ e_rest
              const bool ordered = t < rest;
              const std::size_t col = wedge2.at(ordered ? std::make_pair(t, rest) : std::make_pair(rest, t));
              const std::int64_t v = sign * c % kPrime;
              row[col] = mod(row[col] + (ordered ? v : kPrime - v));
            }
          }
        d3.push_back(std::move(row));
      }
  const std::size_t r2 = rank_mod_p(d2);
  const std::size_t r3 = rank_mod_p(d3);
  return wedge2.size() - r2 - r3;
}

}  // namespace oracle
