#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trop/rational.hpp"

namespace trop {

/// A lattice point in Z^N. Coordinates stay small (bounded by the polytope
/// size); all derived quantities (determinants, volumes) are computed in
/// arbitrary precision so nothing silently overflows.
using Point = std::vector<std::int64_t>;

std::string point_to_string(const Point& p);

/// A facet inequality <normal, x> <= offset of the ambient polytope.
struct Facet {
  Point normal;
  std::int64_t offset = 0;
};

enum class PolytopeKind { DilatedSimplex, Box };

/// The Newton polytopes used throughout: the dilated standard simplex
/// d*conv{0, e_1, ..., e_N} in R^N (N = n+1), or the rectangle
/// [0,a] x [0,b] in R^2.
class Polytope {
 public:
  static Polytope simplex(int n, std::int64_t d);
  static Polytope box(std::int64_t a, std::int64_t b);

  /// Parses "simplex:n=2,d=5" or "box:3x2".
  static Polytope parse(const std::string& descriptor);

  PolytopeKind kind() const { return kind_; }
  int ambient_dim() const { return dim_; }  // N = n+1
  int n() const { return dim_ - 1; }
  std::int64_t simplex_degree() const { return d_; }
  std::int64_t box_a() const { return a_; }
  std::int64_t box_b() const { return b_; }

  /// All lattice points, lexicographically sorted. This ordering is the
  /// canonical index space used by every downstream structure.
  const std::vector<Point>& points() const { return points_; }
  const std::vector<int>& interior_indices() const { return interior_; }

  int index_of(const Point& p) const;  // -1 if absent
  bool contains(const Point& p) const;
  bool strictly_contains(const Point& p) const;

  const std::vector<Facet>& facets() const { return facets_; }

  /// Normalized volume N! * vol(P).
  Int normalized_volume() const;

  std::string descriptor() const;

  bool operator==(const Polytope& o) const {
    return kind_ == o.kind_ && dim_ == o.dim_ && d_ == o.d_ && a_ == o.a_ && b_ == o.b_;
  }

 private:
  Polytope() = default;
  void finalize();

  PolytopeKind kind_ = PolytopeKind::DilatedSimplex;
  int dim_ = 0;
  std::int64_t d_ = 0, a_ = 0, b_ = 0;
  std::vector<Point> points_;
  std::vector<int> interior_;
  std::vector<Facet> facets_;
};

std::vector<Point> enumerate_points(const Polytope& p);
std::vector<Point> interior_points(const Polytope& p);

/// C(d-1, n+1); equals the number of interior lattice points of the dilated
/// simplex.
Int geometric_genus(int n, std::int64_t d);

/// |det| of the edge matrix (v_k - v_0) of N+1 points in Z^N: 1 iff the
/// points span a unimodular simplex, 0 iff affinely dependent.
/// Throws std::invalid_argument when given the wrong number of points.
Int normalized_volume(const std::vector<Point>& vertices);

}  // namespace trop
