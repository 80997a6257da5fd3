#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieschur/catalog.hpp"
#include "lieschur/lie_algebra.hpp"
#include "lieschur/multiplier.hpp"

namespace lieschur {

/// Isomorphism invariants of an algebra.
struct Fingerprint {
  std::size_t n = 0;
  std::size_t derived_dim = 0;
  std::size_t center_dim = 0;
  std::optional<std::size_t> nilpotency_class;
  std::vector<std::size_t> lcs_dims;
  std::size_t dim_M = 0;
  long t = 0;
  long s = 0;
  bool abelian = false;

  bool nilpotent() const { return nilpotency_class.has_value(); }
  std::string describe() const;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const LieAlgebra& L);

enum class ClassificationStatus { Classified, OutOfScope, TheoremViolation };
const char* to_string(ClassificationStatus status) noexcept;

struct ClassificationResult {
  ClassificationStatus status = ClassificationStatus::OutOfScope;
  std::optional<Family> family;
  std::vector<long> params;
  long s_value = 0;
  Fingerprint witness;
  std::string notes;

  friend bool operator==(const ClassificationResult& a, const ClassificationResult& b) {
    return a.status == b.status && a.family == b.family && a.params == b.params &&
           a.s_value == b.s_value;
  }
};

/// Names the family for s ∈ {0, 1, 2}. Throws Error(NotNilpotent) or
/// Error(Abelian) outside the domain where s is meaningful.
ClassificationResult classify(const LieAlgebra& L);
ClassificationResult classify(const Fingerprint& fp);

/// Necessary conditions that identify one s = 2 family.
struct FamilyPins {
  Family family;
  std::optional<std::size_t> n;  // unset: any n
  std::size_t derived_dim;
  std::size_t nilpotency_class;
};

/// The three s = 2 families' pins; pairwise distinguishable by (n, derived_dim, class).
const std::vector<FamilyPins>& s2_family_pins();

struct LemmaGateCheck {
  bool holds = false;
  Fingerprint witness;
};

/// Asserts NOT(s = 2 and dim L² ≥ 3). Throws Error(NotNilpotent).
LemmaGateCheck lemma_l1_gate(const LieAlgebra& L);
LemmaGateCheck lemma_l1_gate(const Fingerprint& fp);

}  // namespace lieschur
