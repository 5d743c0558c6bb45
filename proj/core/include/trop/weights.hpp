#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "trop/lattice.hpp"
#include "trop/rational.hpp"

namespace trop {

/// v(j) = sum_a j_a^2 + (sum_a j_a)^2. Strictly convex along every lattice
/// segment; induces the maximal subdivision used throughout.
Int canonical_weight(const Point& j);

/// A total weight function on the lattice points of a polytope, indexed by
/// the polytope's canonical (lexicographic) point order. Immutable in
/// practice; exact rationals are the source of truth, the float view backs
/// the numeric modules.
class Weights {
 public:
  Weights(Polytope polytope, RatVec values);

  static Weights canonical(const Polytope& p);
  static Weights zero(const Polytope& p);
  /// Uniform integer weights in [0, hi]; deterministic in the seed.
  static Weights random_integer(const Polytope& p, std::uint64_t seed, std::int64_t hi = 1000);

  const Polytope& polytope() const { return polytope_; }
  const RatVec& values() const { return values_; }
  const Rat& operator[](int idx) const { return values_[idx]; }
  const std::vector<double>& values_f() const { return values_f_; }

 private:
  Polytope polytope_;
  RatVec values_;
  std::vector<double> values_f_;
};

/// Result of the tropical (Legendre) evaluation L(x) = max_j <x,j> - v(j).
/// defect = largest minus second-largest of the value multiset; zero exactly
/// when the max is attained at least twice, i.e. on the dual complex.
/// nullopt defect when the domain has a single point.
struct LegendreResult {
  Rat value;
  std::vector<int> argmax;  // canonical indices, ascending
  std::optional<Rat> defect;
};

struct LegendreResultF {
  double value = 0.0;
  int argmax = -1;      // a single attaining index
  double defect = 0.0;  // largest - second largest; +inf for 1-point domains
};

LegendreResult legendre(const Weights& v, const RatVec& x);
LegendreResultF legendre_f(const Weights& v, const std::vector<double>& x);

}  // namespace trop
