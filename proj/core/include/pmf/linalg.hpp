#pragma once

#include <optional>
#include <vector>

#include "pmf/rational.hpp"

namespace pmf {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

/// Rank over Q by fraction-free (Bareiss) elimination on an integer-scaled
/// copy, pivoting by smallest bit-length.
long rank(const RatMat& m);

/// Basis of { x : M x = 0 }, by rational reduced row echelon form. Free
/// columns are set to 1 one at a time; the basis is deterministic.
RatMat nullspace(const RatMat& m);

/// Exact solution x of A x = b when the overdetermined system is
/// consistent; nullopt otherwise. When the solution space is positive
/// dimensional the free variables are set to 0.
std::optional<RatVec> solve(const RatMat& a, const RatVec& b);

}  // namespace pmf
