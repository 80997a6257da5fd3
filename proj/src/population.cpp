#include "lieschur/population.hpp"

#include <numeric>

namespace lieschur {

Matrix random_unimodular(std::size_t n, SeededGenerator& gen) {
  Matrix lower = Matrix::identity(n);
  Matrix upper = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      lower(i, j) = gen.uniform(-1, 1);
      upper(j, i) = gen.uniform(-1, 1);
    }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i)
    std::swap(perm[i - 1], perm[static_cast<std::size_t>(gen.uniform(0, static_cast<long>(i) - 1))]);
  Matrix P(n, n);
  for (std::size_t i = 0; i < n; ++i) P(i, perm[i]) = 1;
  return P * lower * upper;
}

Subspace random_central_subspace(const LieAlgebra& L, SeededGenerator& gen) {
  const Subspace Z = center(L);
  if (Z.dim() == 0) return Subspace(L.dim());
  const auto target = static_cast<std::size_t>(gen.uniform(1, static_cast<long>(Z.dim())));
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<Vector> vectors;
    for (std::size_t r = 0; r < target; ++r) {
      Vector v = zero_vector(L.dim());
      for (std::size_t b = 0; b < Z.dim(); ++b) {
        const Rational c = gen.uniform(-2, 2);
        if (sgn(c) == 0) continue;
        for (std::size_t a = 0; a < L.dim(); ++a) v[a] += c * Z.basis()(b, a);
      }
      vectors.push_back(std::move(v));
    }
    Subspace K = Subspace::span(L.dim(), vectors);
    if (K.dim() > 0) return K;
  }
  return Subspace::span(L.dim(), {Z.basis_vectors().front()});
}

std::vector<Subspace> coordinate_central_subspaces(const LieAlgebra& L) {
  const Subspace Z = center(L);
  std::vector<std::size_t> coords;
  for (std::size_t c = 0; c < L.dim() && coords.size() < 10; ++c)
    if (contains(Z, unit_vector(L.dim(), c))) coords.push_back(c);
  std::vector<Subspace> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << coords.size()); ++mask) {
    std::vector<Vector> vectors;
    for (std::size_t b = 0; b < coords.size(); ++b)
      if (mask & (std::size_t{1} << b)) vectors.push_back(unit_vector(L.dim(), coords[b]));
    out.push_back(Subspace::span(L.dim(), vectors));
  }
  return out;
}

std::vector<CatalogEntry> catalog_entries(const PopulationOptions& opts) {
  std::vector<CatalogEntry> out;
  const auto fits = [&](const CatalogEntry& e) { return static_cast<long>(e.algebra.dim()) <= opts.max_n; };
  const auto add = [&](CatalogEntry e) {
    if (fits(e)) out.push_back(std::move(e));
  };
  for (long k = 1; k <= opts.max_k; ++k) add(abelian(k));
  for (long m = 1; m <= opts.max_m; ++m) add(heisenberg(m));
  add(l_3_4_1_4());
  add(l_4_5_2_4());
  add(l4524_plus_a1());
  for (long m = 1; m <= opts.max_m; ++m)
    for (long k = 1; k <= opts.max_k; ++k)
      if (2 * m + 1 + k <= opts.max_n) add(heisenberg_plus_abelian(m, k));
  return out;
}

namespace {

std::string pad(std::size_t i) {
  std::string s = std::to_string(i);
  return std::string(s.size() < 4 ? 4 - s.size() : 0, '0') + s;
}

}  // namespace

std::vector<PopulationCase> generate_population(const PopulationOptions& opts) {
  SeededGenerator gen(opts.seed);

  std::vector<std::pair<std::string, LieAlgebra>> structural;
  const std::vector<CatalogEntry> entries = catalog_entries(opts);
  for (const auto& e : entries) structural.emplace_back(e.name(), e.algebra);
  for (std::size_t a = 0; a < entries.size(); ++a)
    for (std::size_t b = a; b < entries.size(); ++b) {
      if (static_cast<long>(entries[a].algebra.dim() + entries[b].algebra.dim()) > opts.max_n) continue;
      structural.emplace_back(entries[a].name() + "+" + entries[b].name(),
                              direct_sum(entries[a].algebra, entries[b].algebra));
    }

  std::vector<PopulationCase> out;
  const auto push = [&](std::string origin, LieAlgebra L) {
    out.push_back({pad(out.size()), std::move(origin), std::move(L)});
  };
  for (const auto& [name, L] : structural) {
    push(name, L);
    for (int r = 0; r < 2; ++r)
      push(name + " basis-change", change_of_basis(L, random_unimodular(L.dim(), gen)));
    for (int r = 0; r < 2; ++r) {
      const Subspace K = random_central_subspace(L, gen);
      if (K.dim() == 0) continue;
      LieAlgebra Q = quotient(L, K).algebra;
      const std::string origin = name + " /central(" + std::to_string(K.dim()) + ")";
      LieAlgebra Qb = change_of_basis(Q, random_unimodular(Q.dim(), gen));
      push(origin, std::move(Q));
      push(origin + " basis-change", std::move(Qb));
    }
  }
  return out;
}

}  // namespace lieschur
