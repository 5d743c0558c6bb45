#pragma once

#include <optional>
#include <vector>

#include "trop/linalg.hpp"
#include "trop/rational.hpp"

namespace trop {

/// Exact rational feasibility solver for systems of linear constraints
///   sum_j a_ij x_j  (= | >=)  b_i
/// over free variables. Phase-I simplex; Dantzig pricing with a Bland
/// fallback after degenerate stalls, so termination is guaranteed.
struct LpConstraint {
  RatVec coeffs;
  Rat rhs;
  bool equality = false;  // false: >= rhs
};

struct LpResult {
  /// A feasible point when one exists.
  std::optional<RatVec> solution;
  /// Otherwise a Farkas certificate y: y >= 0 on inequality rows,
  /// y^T A = 0 and y^T b > 0, proving infeasibility. Verified exactly
  /// before being returned.
  std::optional<RatVec> farkas;
};

LpResult lp_feasible(const std::vector<LpConstraint>& constraints, int num_vars);

}  // namespace trop
