#pragma once

#include <optional>
#include <vector>

#include "trop/lattice.hpp"
#include "trop/rational.hpp"
#include "trop/weights.hpp"

namespace trop {

/// Outcome of the inverse problem: either a weight function whose regular
/// subdivision reproduces the target exactly, or an exact Farkas certificate
/// that no such weights exist (non-regular target).
struct WeightSearch {
  std::optional<Weights> weights;
  std::optional<RatVec> infeasibility_certificate;
  bool feasible() const { return weights.has_value(); }
};

/// LP feasibility with margin 1: for every target cell, its supporting form
/// agrees with v on the cell and sits at least 1 below v elsewhere. Targets
/// are full-dimensional lattice simplices (supports as canonical indices)
/// tiling the polytope; malformed targets (gaps, overlaps, bad cells) throw.
WeightSearch find_weights(const Polytope& P, const std::vector<std::vector<int>>& target_cells);

/// A unimodular triangulation of box(g+1, 2) in which every triangle has at
/// most one interior lattice point among its vertices and the stars of the
/// g interior points are pairwise separated by at least one edge.
std::vector<std::vector<int>> genus_target(const Polytope& box_poly);

/// The pinwheel triangulation of box(3,3): the classical non-regular
/// triangulation used as the negative control for find_weights.
std::vector<std::vector<int>> spiral_target(const Polytope& box33);

}  // namespace trop
