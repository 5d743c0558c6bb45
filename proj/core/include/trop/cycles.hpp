#pragma once

#include <cstdint>
#include <vector>

#include "trop/dualcomplex.hpp"

namespace trop {

/// A GF(2) chain of dual cells of one degree (cell ids into the complex,
/// ascending). Homology is computed mod 2 on the bounded subcomplex, onto
/// which the complex deformation-retracts; the bouquet claim makes the top
/// homology free, so mod-2 ranks equal integral ranks there.
struct Chain {
  int degree = 0;
  std::vector<int> cells;

  bool operator==(const Chain&) const = default;
};

/// Boundary of a chain: facets with mod-2 multiplicity, restricted to
/// bounded cells.
Chain boundary(const DualComplex& dc, const Chain& c);

/// The n-cells whose dual subdivision edge contains the interior point i.
Chain sphere_cycle(const DualComplex& dc, const Point& i);

/// Rank of mod-2 cellular homology in degree k (bounded subcomplex).
int homology_rank_gf2(const DualComplex& dc, int k);

struct EnlargedCycle {
  Point center;
  int center_index = -1;          // canonical point index
  Chain sphere;                   // the sphere cycle
  std::vector<int> lambda;        // dual vertex ids of the claimed primitive pieces
  std::vector<int> star_ncells;   // n-cells incident to lambda vertices
  bool class_matches_sphere = false;
};

/// Sphere cycle plus the primitive pieces of the cells in the translated
/// simplex around i avoiding other interior points (dilated simplices), or
/// of the cells having i as their unique interior vertex (boxes). Verifies
/// that the enlarged region carries no mod-2 n-homology beyond the sphere
/// class. Throws when the translate-restriction precondition fails.
EnlargedCycle enlarged_cycle(const DualComplex& dc, const Point& i);

struct CycleFamily {
  std::vector<EnlargedCycle> members;  // one per interior point, canonical order
};

CycleFamily build_cycle_family(const DualComplex& dc);

struct ClassCheckReport {
  bool pass = false;
  bool each_is_cycle = false;
  bool independent = false;
  bool spanning = false;
  int homology_rank = 0;
};

/// The sphere classes are cycles, independent in H_n mod 2, and span it.
ClassCheckReport cycle_class_check(const DualComplex& dc, const CycleFamily& fam);

struct CoverageReport {
  bool pass = false;
  int regions_checked = 0;
  int region_failures = 0;
  int points_checked = 0;
  int point_failures = 0;
};

/// Vertex-Voronoi coverage: every vertex region belongs to the union of the
/// enlarged cycles, and sampled points (barycenters of all cells plus
/// points_per_cell random points per n-cell) land in some enlarged region.
CoverageReport coverage_check(const DualComplex& dc, const CycleFamily& fam,
                              std::uint64_t seed, int points_per_cell = 100);

enum class ContactKind { Disjoint, SingleVertex, MultiVertex, Overlap };

struct PairwiseReport {
  std::vector<std::vector<ContactKind>> matrix;
  bool at_most_single_contact = true;
};

/// Classifies the pairwise intersections of enlarged regions: disjoint,
/// meeting in one boundary point (shared dual vertex or a Voronoi wall on a
/// shared n-cell), several such points, or overlapping in n-cells.
PairwiseReport pairwise_intersections(const DualComplex& dc, const CycleFamily& fam);

}  // namespace trop
