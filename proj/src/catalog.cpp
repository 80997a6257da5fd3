#include "lieschur/catalog.hpp"

#include "lieschur/error.hpp"
#include "lieschur/multiplier.hpp"

namespace lieschur {

namespace {

BracketSpec unit_bracket(std::size_t dim, std::size_t i, std::size_t j, std::size_t k) {
  return {i, j, unit_vector(dim, k)};
}

long triangle(long n) { return n * (n - 1) / 2; }

void require(bool ok, const std::string& msg) {
  if (!ok) throw Error(ErrorKind::InvalidArgument, msg);
}

}  // namespace

std::string_view family_id(Family f) noexcept {
  switch (f) {
    case Family::Abelian: return "A";
    case Family::Heisenberg: return "H";
    case Family::L3414: return "L3414";
    case Family::L4524: return "L4524";
    case Family::HeisenbergPlusAbelian: return "HplusA";
    case Family::L4524PlusA1: return "L4524plusA1";
  }
  return "?";
}

std::optional<Family> family_from_id(std::string_view id) noexcept {
  for (Family f : {Family::Abelian, Family::Heisenberg, Family::L3414, Family::L4524,
                   Family::HeisenbergPlusAbelian, Family::L4524PlusA1})
    if (family_id(f) == id) return f;
  return std::nullopt;
}

std::size_t family_param_count(Family f) noexcept {
  switch (f) {
    case Family::Abelian:
    case Family::Heisenberg: return 1;
    case Family::HeisenbergPlusAbelian: return 2;
    default: return 0;
  }
}

std::string CatalogEntry::name() const {
  std::string out(family_id(family));
  if (params.empty()) return out;
  out += "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(params[i]);
  }
  return out + ")";
}

CatalogEntry abelian(long k) {
  require(k >= 0, "A(k) needs k >= 0");
  const auto n = static_cast<std::size_t>(k);
  return {Family::Abelian, {k}, LieAlgebra(n), abelian_multiplier_dim(n), std::nullopt};
}

CatalogEntry heisenberg(long m) {
  require(m >= 1, "H(m) needs m >= 1");
  const auto dim = static_cast<std::size_t>(2 * m + 1);
  std::vector<BracketSpec> specs;
  for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i)
    specs.push_back(unit_bracket(dim, 2 * i, 2 * i + 1, dim - 1));
  const std::size_t dim_M = m == 1 ? 2 : static_cast<std::size_t>(2 * m * m - m - 1);
  return {Family::Heisenberg, {m}, LieAlgebra::build(dim, specs), dim_M,
          s_defect(dim, dim_M)};
}

CatalogEntry l_3_4_1_4() {
  LieAlgebra L = LieAlgebra::build(4, {unit_bracket(4, 0, 1, 2), unit_bracket(4, 0, 2, 3)});
  return {Family::L3414, {}, std::move(L), 2, 2};
}

CatalogEntry l_4_5_2_4() {
  LieAlgebra L = LieAlgebra::build(5, {unit_bracket(5, 0, 1, 3), unit_bracket(5, 0, 2, 4)});
  return {Family::L4524, {}, std::move(L), 6, 1};
}

CatalogEntry heisenberg_plus_abelian(long m, long k) {
  require(m >= 1, "HplusA(m,k) needs m >= 1");
  require(k >= 0, "HplusA(m,k) needs k >= 0");
  const long n = 2 * m + 1 + k;
  LieAlgebra L = direct_sum(heisenberg(m).algebra, abelian(k).algebra);
  if (m == 1) {
    const long dim_M = triangle(n - 1) + 1;
    return {Family::HeisenbergPlusAbelian, {m, k}, std::move(L), static_cast<std::size_t>(dim_M), 0};
  }
  const long dim_M = n * (n - 3) / 2;
  return {Family::HeisenbergPlusAbelian, {m, k}, std::move(L), static_cast<std::size_t>(dim_M), 2};
}

CatalogEntry l4524_plus_a1() {
  LieAlgebra L = direct_sum(l_4_5_2_4().algebra, abelian(1).algebra);
  return {Family::L4524PlusA1, {}, std::move(L), 9, 2};
}

CatalogEntry make_entry(Family f, const std::vector<long>& params) {
  const std::size_t want = family_param_count(f);
  require(params.size() == want, std::string(family_id(f)) + " takes " + std::to_string(want) +
                                     " parameter(s), got " + std::to_string(params.size()));
  switch (f) {
    case Family::Abelian: return abelian(params[0]);
    case Family::Heisenberg: return heisenberg(params[0]);
    case Family::L3414: return l_3_4_1_4();
    case Family::L4524: return l_4_5_2_4();
    case Family::HeisenbergPlusAbelian: return heisenberg_plus_abelian(params[0], params[1]);
    case Family::L4524PlusA1: return l4524_plus_a1();
  }
  throw Error(ErrorKind::InvalidArgument, "unknown family");
}

}  // namespace lieschur
