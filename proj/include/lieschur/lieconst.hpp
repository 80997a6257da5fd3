#pragma once

// "lieconst v1" text format:
//
//   # comment
//   dim 4
//   [e1,e2] = e3
//   [e1,e3] = 2 e4 - 1/2 e1
//
// One header line `dim N`, then one line per nonzero bracket with i < j.
// Coefficients are optional (default 1) and may be written p/q; unlisted
// brackets are zero.

#include <string>
#include <string_view>

#include "lieschur/lie_algebra.hpp"

namespace lieschur {

/// Throws SyntaxError (with line/column), Error(IndexOutOfRange),
/// Error(DuplicateBracket) or JacobiViolation.
LieAlgebra parse_lieconst(std::string_view text);

/// Canonical form: brackets sorted by (i, j), zero rows omitted, lowest-terms
/// coefficients, terms ordered by basis index.
std::string render_lieconst(const LieAlgebra& L);

}  // namespace lieschur
