#pragma once

// Seeded generation of test algebras. Random structure constants almost never
// satisfy Jacobi, so every generated algebra is derived from catalog algebras
// by direct sums, unimodular basis changes and central quotients.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lieschur/catalog.hpp"
#include "lieschur/lie_algebra.hpp"

namespace lieschur {

/// Park–Miller minimal standard LCG (x ← 48271·x mod 2³¹−1, i.e.
/// std::minstd_rand). Ranges are mapped as lo + (x mod (hi−lo+1)) so the
/// stream is identical on every platform.
class SeededGenerator {
 public:
  explicit SeededGenerator(std::uint64_t seed) : engine_(static_cast<std::uint_fast32_t>(seed % 2147483647u)) {}

  std::uint32_t next() { return static_cast<std::uint32_t>(engine_()); }
  /// Uniform-ish integer in [lo, hi].
  long uniform(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint32_t>(hi - lo + 1));
  }

 private:
  std::minstd_rand engine_;
};

/// P·Lo·Up with P a permutation and Lo/Up unit triangular with entries in
/// {−1, 0, 1}; determinant ±1.
Matrix random_unimodular(std::size_t n, SeededGenerator& gen);

/// Random nonzero subspace of Z(L) of random dimension (zero subspace when L
/// has trivial center).
Subspace random_central_subspace(const LieAlgebra& L, SeededGenerator& gen);

/// Every span of a subset of the standard basis vectors that lie in Z(L),
/// including the zero subspace. Limited to the first 10 such vectors.
std::vector<Subspace> coordinate_central_subspaces(const LieAlgebra& L);

struct PopulationOptions {
  long max_m = 4;
  long max_k = 3;
  long max_n = 10;
  std::uint64_t seed = 7;
};

struct PopulationCase {
  std::string id;
  std::string origin;
  LieAlgebra algebra;
};

/// Catalog entries with n ≤ max_n: A(1..max_k), H(1..max_m), L3414, L4524,
/// L4524plusA1, HplusA(m, k) for 1 ≤ m ≤ max_m, 1 ≤ k ≤ max_k.
std::vector<CatalogEntry> catalog_entries(const PopulationOptions& opts);

/// Catalog entries, pairwise direct sums (n ≤ max_n), and for each of those
/// two basis changes and two central quotients (each also basis-changed).
std::vector<PopulationCase> generate_population(const PopulationOptions& opts);

}  // namespace lieschur
