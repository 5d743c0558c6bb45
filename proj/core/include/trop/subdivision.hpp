#pragma once

#include <map>
#include <string>
#include <vector>

#include "trop/lattice.hpp"
#include "trop/weights.hpp"

namespace trop {

/// A cell of the lattice subdivision: the set of lattice points on which
/// some affine-linear form is maximized (a lower face of the lifted point
/// set). Non-simplicial supports are first-class.
struct Cell {
  std::vector<int> support;  // canonical point indices, ascending
  int dim = 0;               // affine dimension of the support
};

/// The regular subdivision of the polytope induced by a weight function,
/// together with its full face lattice. Faces are identified with their
/// support sets; face order is support inclusion.
class Subdivision {
 public:
  const Polytope& polytope() const { return polytope_; }
  const Weights& weights() const { return weights_; }

  const std::vector<Cell>& top_cells() const { return tops_; }
  /// Dual vertex of each top cell: the unique point where all supporting
  /// forms of the cell tie and dominate.
  const std::vector<RatVec>& dual_positions() const { return dual_pos_; }

  /// All faces of all top cells, deduplicated, sorted by (dim, support).
  const std::vector<Cell>& faces() const { return faces_; }
  const std::vector<int>& faces_of_dim(int dim) const { return faces_by_dim_[dim]; }
  int face_id(const std::vector<int>& support) const;

  /// Top cells whose support contains the given face's support.
  const std::vector<int>& tops_of_face(int face_id) const { return tops_of_face_[face_id]; }

  /// Geometric endpoints of a 1-face (lex-min and lex-max of the collinear
  /// support).
  std::pair<Point, Point> edge_endpoints(int face_id) const;

  bool same_cells(const Subdivision& other) const;

 private:
  friend Subdivision make_subdivision(const Weights&, std::vector<Cell>, std::vector<RatVec>);
  Polytope polytope_{Polytope::simplex(0, 1)};
  Weights weights_{Weights::zero(Polytope::simplex(0, 1))};
  std::vector<Cell> tops_;
  std::vector<RatVec> dual_pos_;
  std::vector<Cell> faces_;
  std::vector<std::vector<int>> faces_by_dim_;
  std::map<std::vector<int>, int> face_index_;
  std::vector<std::vector<int>> tops_of_face_;
};

/// Exact lower-hull subdivision of the lifted points {(j, v(j))}, computed
/// by pivoting over dual vertices with rational arithmetic. Throws when the
/// domain has fewer than n+2 points.
Subdivision regular_subdivision(const Weights& v);

/// Independent oracle: enumerates all (n+2)-subsets and keeps those whose
/// tied supporting form strictly dominates everywhere else. Equals
/// regular_subdivision on generic weights. Guarded to <= 40 points.
Subdivision brute_force_subdivision(const Weights& v);

/// True iff every top cell is a unimodular simplex; then the cell count is
/// (n+1)! vol(P).
bool is_unimodular(const Subdivision& s);

struct EdgeViolation {
  Point a, b;
};

struct EdgeDirectionReport {
  bool pass = true;
  std::vector<EdgeViolation> violations;
  int edge_count = 0;
};

/// Every edge difference must lie in {+-e_a} u {+-(e_a - e_b)}.
EdgeDirectionReport check_edge_directions(const Subdivision& s);

/// True iff the top cells contained in the translated simplex
/// i - (1,...,1) + (n+2)*simplex tile it exactly. Throws when i is not an
/// interior lattice point or the polytope is not a dilated simplex.
bool check_translate_restriction(const Subdivision& s, const Point& i);

/// Normalized volume of a (possibly non-simplicial) cell, via a fan
/// triangulation from its lex-min vertex.
Int cell_normalized_volume(const Subdivision& s, const Cell& c);

// --- geometry helpers shared with other modules (exact) ---

/// Facets of conv(points) inside its affine hull; returns supports as index
/// sets into `points` together with outward normals (within the hull's
/// linear span, as rationals over the ambient space).
struct FacetData {
  std::vector<int> support;
  RatVec outward;
};
std::vector<FacetData> facets_of(const std::vector<Point>& points);

int affine_dim(const std::vector<Point>& points);

/// All faces of conv(points) (every dimension, including the polytope
/// itself), as supports into `points`.
std::vector<std::vector<int>> all_faces_of(const std::vector<Point>& points);

}  // namespace trop
