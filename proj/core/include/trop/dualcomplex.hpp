#pragma once

#include <map>
#include <vector>

#include "trop/subdivision.hpp"

namespace trop {

/// A cell of the dual complex, stored combinatorially by the support of the
/// subdivision face it is dual to. Geometry (affine hull equations,
/// inequality closure, recession rays) is derived from the support; no
/// V-representation of unbounded cells is ever needed.
struct DualCell {
  std::vector<int> support;   // subdivision face support (canonical indices)
  int sub_dim = 0;            // dimension of the subdivision face
  int dim = 0;                // n + 1 - sub_dim
  std::vector<int> vertices;  // incident dual vertices (= top cell indices)
  std::vector<Point> rays;    // recession cone generators (polytope facet normals)
  bool bounded = true;
  Int weight = 0;             // n-cells: lattice length of the dual edge
};

class DualComplex {
 public:
  static DualComplex build(const Subdivision& s);

  const Subdivision& subdivision() const { return sub_; }
  const Polytope& polytope() const { return sub_.polytope(); }
  const Weights& weights() const { return sub_.weights(); }
  int n() const { return polytope().ambient_dim() - 1; }

  const std::vector<DualCell>& cells() const { return cells_; }
  const std::vector<int>& cells_of_dim(int k) const { return by_dim_[k]; }
  int cell_id(const std::vector<int>& support) const;

  /// Facets (codimension-1 boundary cells) of each cell.
  const std::vector<std::vector<int>>& cell_facets() const { return facets_; }

  /// Exact position of each dual vertex, indexed like the subdivision's
  /// top cells.
  const std::vector<RatVec>& vertex_positions() const { return sub_.dual_positions(); }
  const std::vector<std::vector<double>>& vertex_positions_f() const { return vertex_pos_f_; }

  /// Dual cells incident to a dual vertex (the closed star).
  std::vector<int> star_of_vertex(int vertex_id) const;

 private:
  Subdivision sub_;
  std::vector<DualCell> cells_;
  std::vector<std::vector<int>> by_dim_;
  std::vector<std::vector<int>> facets_;
  std::map<std::vector<int>, int> index_;
  std::vector<std::vector<double>> vertex_pos_f_;
};

/// Solves the tie equations of a top cell for its dual vertex. Throws if
/// the support does not pin a unique point.
RatVec dual_vertex_position(const Weights& v, const std::vector<int>& support);

/// One oriented covector of the balancing check: the n-cell dual to a
/// subdivision edge, traversed as part of a 2-face polygon boundary.
struct OrientedCovector {
  Point tail, head;  // lattice endpoints of the subdivision edge, oriented
};

struct BalanceReport {
  bool pass = true;
  int checked = 0;  // number of (n-1)-cells
  std::vector<std::vector<int>> failing;  // supports of failing (n-1)-cells
};

/// Core of the balancing condition: the oriented covectors around a
/// codimension-1 cell must sum to zero exactly. Exposed so tests can feed
/// tampered covector lists.
bool covectors_balance(const std::vector<OrientedCovector>& covectors);

/// Appendix balancing condition at every (n-1)-cell: traverse the dual
/// polygon boundary, orient covectors by the rotation, check the exact sum
/// and that each covector is w(F) times a primitive vector with kernel
/// parallel to its n-cell.
BalanceReport check_balanced(const DualComplex& dc);

/// Number of dual vertices; requires a maximal complex and checks the count
/// against (n+1)! vol and unimodularity of every dual simplex.
Int primitive_piece_count(const DualComplex& dc);

struct BoundednessReport {
  int checked = 0;
  /// Always-true direction: an n-cell with an interior endpoint is bounded.
  std::vector<std::vector<int>> interior_but_unbounded;
  /// Provisional converse: bounded n-cells with both endpoints on the
  /// boundary (observed on canonical instances; see tests).
  std::vector<std::vector<int>> boundary_but_bounded;
};

BoundednessReport boundedness_report(const DualComplex& dc);

}  // namespace trop
