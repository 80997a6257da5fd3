#pragma once

// Named constructors for the algebra families the classification refers to,
// with closed-form multiplier dimensions used as cross-check oracles.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lieschur/lie_algebra.hpp"

namespace lieschur {

enum class Family { Abelian, Heisenberg, L3414, L4524, HeisenbergPlusAbelian, L4524PlusA1 };

/// Stable CLI identifiers: A, H, L3414, L4524, HplusA, L4524plusA1.
std::string_view family_id(Family f) noexcept;
std::optional<Family> family_from_id(std::string_view id) noexcept;
/// Number of integer parameters the family takes.
std::size_t family_param_count(Family f) noexcept;

struct CatalogEntry {
  Family family;
  std::vector<long> params;
  LieAlgebra algebra;
  std::optional<std::size_t> expected_dim_M;
  std::optional<long> expected_s;

  /// e.g. "H(2)", "HplusA(2,1)", "L3414".
  std::string name() const;
};

CatalogEntry abelian(long k);
/// H(m), dim 2m+1, [e_{2i-1}, e_{2i}] = e_{2m+1}; m ≥ 1.
CatalogEntry heisenberg(long m);
/// [e1,e2] = e3, [e1,e3] = e4.
CatalogEntry l_3_4_1_4();
/// [e1,e2] = e4, [e1,e3] = e5.
CatalogEntry l_4_5_2_4();
CatalogEntry heisenberg_plus_abelian(long m, long k);
CatalogEntry l4524_plus_a1();

/// Dispatch by family with the right parameter count; throws
/// Error(InvalidArgument) on arity or range problems.
CatalogEntry make_entry(Family f, const std::vector<long>& params);

}  // namespace lieschur
