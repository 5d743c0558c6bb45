#pragma once

#include <optional>
#include <vector>

#include "trop/rational.hpp"

namespace trop {

using IntMat = std::vector<std::vector<Int>>;
using RatMat = std::vector<std::vector<Rat>>;

/// Exact determinant via Bareiss fraction-free elimination.
Int int_det(IntMat m);

int rat_rank(RatMat m);

/// Solves A x = b exactly. Returns nullopt when inconsistent; when the
/// system is underdetermined an arbitrary solution of the affine family is
/// returned (free variables set to zero).
std::optional<RatVec> rat_solve(RatMat a, RatVec b);

/// Basis of the nullspace {x : A x = 0}.
std::vector<RatVec> rat_nullspace(RatMat a);

}  // namespace trop
