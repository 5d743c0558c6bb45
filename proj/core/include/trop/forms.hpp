#pragma once

#include "trop/amoeba.hpp"

namespace trop {

/// Restriction of a patchwork polynomial to a subset of its monomials
/// (same weights, inactive points dropped): the truncations and the
/// two-term control cases.
Patchwork restrict_support(const Patchwork& f, const std::vector<int>& support);

/// Canonical indices of the lattice points in i - (1,..,1) + (n+2)*simplex.
std::vector<int> translate_support(const Polytope& P, const Point& i);

/// The frame coefficient A_{i,alpha} = t^{-v(i)} z^i / (z_a df/dz_a), with
/// alpha chosen to maximize the denominator magnitude (ties to the lowest
/// index). Throws when every denominator is numerically singular.
struct FormCoefficient {
  Point i;
  int alpha = 0;
  std::complex<double> value;
};

FormCoefficient form_coefficient(const Patchwork& f, const Point& i,
                                 const std::vector<std::complex<double>>& z);

/// Samples of the variety whose log-images land within `margin` of the
/// given n-cell: base points are drawn on the cell and lifted through the
/// coordinate transverse to it. When `anchor` is given, base points sit at
/// the anchor and the margin filter measures distance to it instead (face
/// center sampling). Throws if nothing lands after the retry budget.
std::vector<Sample> samples_near_cell(const Patchwork& f, const DualComplex& dc, int cell_id,
                                      int count, std::uint64_t seed, double margin = 0.1,
                                      const std::vector<double>* anchor = nullptr);

/// Interior representative of any cell: vertex mean plus the ray sum for
/// unbounded ones.
std::vector<double> cell_representative(const DualComplex& dc, int cell_id);

struct DecayReport {
  std::vector<double> t_schedule;
  std::vector<double> sup_coefficient;  // sup |A_{i,.}| near the region, per t
  bool monotone = false;
  double final_ratio = 0;  // last / first
  bool pass = false;
};

/// Off-support decay: sup |A_i| over samples near a face of the complex
/// whose dual edge avoids i must fall monotonically, by 10x over a 1e4-fold
/// t increase.
DecayReport decay_check(const DualComplex& dc, const Point& i, int region_cell,
                        const std::vector<double>& t_schedule, int count, std::uint64_t seed);

struct TruncationReport {
  double max_rel_diff = 0;
  double min_ratio = 0;
  int samples = 0;
  bool pass = false;
};

/// Compares the frame coefficient of f against the truncation of f to the
/// translated simplex around i, on samples near the sphere cycle of i:
/// relative difference <= 10% and |ratio| >= 0.5.
TruncationReport truncation_compare(const DualComplex& dc, const Point& i, double t, int count,
                                    std::uint64_t seed);

struct FiberReport {
  std::vector<double> t_schedule;
  std::vector<double> max_phase_ratio;   // max |Im(e^{i pi/2} coeff)| / |coeff|
  std::vector<double> max_log_deviation; // worst |Log_t|z| - x| over the fiber
  bool decreasing = false;
  bool pass = false;
};

/// Torus-fiber phase over a point x of a 1-cell of the sphere cycle (curves
/// only): sweeps the first phase, solves for the second coordinate
/// constrained near the fiber modulus, and measures how far the pullback
/// coefficient is from purely special phase. Throws when no fiber point
/// exists near x (off-complex x). An optional support restriction runs the
/// same sweep on a truncated polynomial (the exact two-term control).
FiberReport fiber_phase_check(const DualComplex& dc, const Point& i, const std::vector<double>& x,
                              const std::vector<double>& t_schedule, int sweep_points,
                              const std::vector<int>* support_restriction = nullptr);

/// Midpoint of a bounded 1-cell, the default fiber base point.
std::vector<double> cell_midpoint(const DualComplex& dc, int cell_id);

}  // namespace trop
