#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "trop/dualcomplex.hpp"

namespace trop {

/// f_t(z) = sum_j a_j t^{-v(j)} z^j over the lattice points of the Newton
/// polytope, with a_j = 1 by default. Evaluation is always done after
/// multiplying by t^{+L(x0)} at a base point x0, so the dominant terms have
/// magnitude near one and nothing overflows even at t = 1e6.
struct Patchwork {
  Patchwork(Weights weights, double t);

  Weights weights;
  double t = 0;
  std::vector<std::complex<double>> coeffs;  // per lattice point, default 1

  const Polytope& polytope() const { return weights.polytope(); }
  int ambient_dim() const { return polytope().ambient_dim(); }

  /// log_t of term magnitudes at log-coordinates x: <x, j> - v(j).
  double exponent(int point_index, const std::vector<double>& x) const;
  double tropical_value(const std::vector<double>& x) const;

  /// f(z) * t^{-L(Log_t|z|)}: the residual scale used everywhere.
  std::complex<double> eval_rescaled(const std::vector<std::complex<double>>& z) const;

  /// z_alpha df/dz_alpha * t^{-L(Log_t|z|)} = sum_j j_alpha (rescaled term_j).
  std::complex<double> log_derivative_rescaled(const std::vector<std::complex<double>>& z,
                                               int alpha) const;
};

struct Sample {
  std::vector<std::complex<double>> z;
  std::vector<double> logt;  // Log_t |z|
  double residual = 0;       // |f * t^{-L}| at the sample
  double defect = 0;         // tropical defect at the log-image
};

struct Box {
  double lo = -5.0, hi = 5.0;
};

/// Roots of f in coordinate `coord` with the other N-1 coordinates fixed
/// (the entry of `fixed` at `coord` is ignored); companion-matrix
/// eigenvalues on rescaled coefficients, Newton-polished. x0 supplies the
/// rescaling frame (its `coord` entry centers the root magnitudes).
std::vector<std::complex<double>> solve_coordinate(const Patchwork& f,
                                                   const std::vector<std::complex<double>>& fixed,
                                                   const std::vector<double>& x0, int coord);

/// solve_coordinate in the last coordinate, fixing the first N-1.
std::vector<std::complex<double>> solve_last_coordinate(const Patchwork& f,
                                                        const std::vector<std::complex<double>>& fixed,
                                                        const std::vector<double>& x0);

/// Draws base points uniformly in the window, fixes n coordinates as
/// t^{x_a} e^{i theta_a}, solves the univariate polynomial in the remaining
/// one and keeps roots with residual <= 1e-8. The solved coordinate rotates
/// round-robin with the draw index, so every face orientation of the
/// complex acquires nearby samples. Returns exactly `count` samples in draw
/// order; deterministic in the seed, independent of evaluation order and
/// thread count. Throws if the retry budget is exhausted.
std::vector<Sample> sample_variety(const Patchwork& f, int count, std::uint64_t seed,
                                   const Box& window = {});

/// Euclidean distance from x to the complex: exact-projection onto each
/// cell's affine hull, feasibility via the H-representation, minimum over
/// cells. Absolute accuracy ~1e-9 at desk scale.
double distance_to_complex(const std::vector<double>& x, const DualComplex& dc);

struct TStats {
  double t = 0;
  double median_distance = 0;
  double p95_distance = 0;
  double coverage = 0;         // max over grid points on the complex of distance to nearest sample
  double median_defect = 0;
  double p95_defect = 0;
  int samples = 0;
};

struct ConvergenceReport {
  std::vector<TStats> per_t;
  bool distances_non_increasing = false;  // up to one inversion <= 5%
  bool coverage_non_increasing = false;
  bool pass = false;
};

/// EKL convergence at desk scale: directed sample->complex distance
/// statistics and a complex->sample grid-coverage statistic per t.
ConvergenceReport convergence_report(const Weights& v, const std::vector<double>& t_schedule,
                                     int count, std::uint64_t seed, const Box& window = {});

}  // namespace trop
