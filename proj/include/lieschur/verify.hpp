#pragma once

// Named verification suites. Each suite returns per-case results sorted by
// case id, so reports are byte-identical for identical options.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lieschur/population.hpp"

namespace lieschur {

enum class Suite { Formulas, Bounds, Kunneth, Quotient, Classification };

std::string_view suite_name(Suite s) noexcept;
std::optional<Suite> suite_from_name(std::string_view name) noexcept;

struct CaseResult {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CaseResult> cases;

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
  /// One `case=... result=...` line per case plus a trailing summary line.
  std::string render() const;
};

SuiteReport run_suite(Suite suite, const PopulationOptions& opts);

}  // namespace lieschur
