#include "trop/forms.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "trop/rng.hpp"

namespace trop {

namespace {

std::vector<double> log_image_of(const std::vector<std::complex<double>>& z, double t) {
  std::vector<double> x(z.size());
  for (size_t k = 0; k < z.size(); ++k) x[k] = std::log(std::abs(z[k])) / std::log(t);
  return x;
}

// Projection distance from x to one dual cell (affine hull + H-rep check,
// falling back to the incident vertices when the projection exits the cell).
struct SingleCellDistance {
  std::vector<double> base;
  Eigen::MatrixXd tangent;
  std::vector<std::vector<double>> ineq_normals;
  std::vector<double> ineq_rhs;
  std::vector<std::vector<double>> vertices;
  int dim;

  SingleCellDistance(const DualComplex& dc, int cell_id) {
    const Polytope& P = dc.polytope();
    dim = P.ambient_dim();
    const auto& pts = P.points();
    const auto& vf = dc.weights().values_f();
    const auto& cell = dc.cells()[cell_id];
    base = dc.vertex_positions_f()[cell.vertices[0]];
    for (int v : cell.vertices) vertices.push_back(dc.vertex_positions_f()[v]);
    const int p0 = cell.support[0];
    Eigen::MatrixXd rows(static_cast<int>(cell.support.size()) - 1, dim);
    for (size_t i = 1; i < cell.support.size(); ++i)
      for (int k = 0; k < dim; ++k)
        rows(static_cast<int>(i) - 1, k) = static_cast<double>(pts[cell.support[i]][k] - pts[p0][k]);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(rows, Eigen::ComputeFullV);
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
      if (svd.singularValues()(i) > 1e-9 * svd.singularValues()(0)) ++rank;
    tangent = svd.matrixV().rightCols(dim - rank);
    for (size_t k = 0; k < pts.size(); ++k) {
      if (std::binary_search(cell.support.begin(), cell.support.end(), static_cast<int>(k)))
        continue;
      std::vector<double> nrm(dim);
      for (int c = 0; c < dim; ++c) nrm[c] = static_cast<double>(pts[k][c] - pts[p0][c]);
      ineq_normals.push_back(std::move(nrm));
      ineq_rhs.push_back(vf[k] - vf[p0]);
    }
  }

  double operator()(const std::vector<double>& x) const {
    Eigen::Map<const Eigen::VectorXd> xv(x.data(), dim);
    Eigen::Map<const Eigen::VectorXd> b(base.data(), dim);
    Eigen::VectorXd p = b + tangent * (tangent.transpose() * (xv - b));
    bool feasible = true;
    for (size_t i = 0; i < ineq_normals.size() && feasible; ++i) {
      double dot = 0;
      for (int k = 0; k < dim; ++k) dot += p(k) * ineq_normals[i][k];
      if (dot > ineq_rhs[i] + 1e-9 * (1.0 + std::abs(ineq_rhs[i]))) feasible = false;
    }
    double best = std::numeric_limits<double>::infinity();
    if (feasible) best = (xv - p).norm();
    for (const auto& v : vertices) {
      double d2 = 0;
      for (int k = 0; k < dim; ++k) d2 += (x[k] - v[k]) * (x[k] - v[k]);
      best = std::min(best, std::sqrt(d2));
    }
    return best;
  }
};

// Random point on a dual cell in float coordinates.
std::vector<double> random_cell_point(const DualComplex& dc, int cell_id, Rng& rng) {
  const auto& cell = dc.cells()[cell_id];
  const auto& vp = dc.vertex_positions_f();
  const int dim = dc.polytope().ambient_dim();
  std::vector<double> x(dim, 0.0);
  double total = 0;
  std::vector<double> mu(cell.vertices.size());
  for (auto& m : mu) {
    m = rng.next_unit() + 1e-9;
    total += m;
  }
  for (size_t vi = 0; vi < cell.vertices.size(); ++vi)
    for (int k = 0; k < dim; ++k) x[k] += mu[vi] / total * vp[cell.vertices[vi]][k];
  for (const auto& ray : cell.rays) {
    const double lam = rng.next_in(0.0, 2.0);
    for (int k = 0; k < dim; ++k) x[k] += lam * static_cast<double>(ray[k]);
  }
  return x;
}

// Coordinate transverse to an n-cell: the dual edge difference has a
// nonzero entry there.
int transverse_coordinate(const DualComplex& dc, int cell_id) {
  const auto& cell = dc.cells()[cell_id];
  const auto [a, b] = dc.subdivision().edge_endpoints(dc.subdivision().face_id(cell.support));
  int best = 0;
  std::int64_t mag = 0;
  for (size_t k = 0; k < a.size(); ++k) {
    const std::int64_t m = std::llabs(b[k] - a[k]);
    if (m > mag) {
      mag = m;
      best = static_cast<int>(k);
    }
  }
  return best;
}

}  // namespace

Patchwork restrict_support(const Patchwork& f, const std::vector<int>& support) {
  Patchwork out = f;
  for (size_t j = 0; j < out.coeffs.size(); ++j)
    if (!std::binary_search(support.begin(), support.end(), static_cast<int>(j)))
      out.coeffs[j] = 0.0;
  return out;
}

std::vector<int> translate_support(const Polytope& P, const Point& i) {
  if (P.kind() != PolytopeKind::DilatedSimplex)
    throw std::invalid_argument("translate_support: polytope is not a dilated simplex");
  const int N = P.ambient_dim();
  std::int64_t i0 = 0;
  for (auto c : i) i0 += c;
  std::vector<int> out;
  for (size_t k = 0; k < P.points().size(); ++k) {
    const auto& p = P.points()[k];
    bool in = true;
    std::int64_t sum = 0;
    for (int c = 0; c < N; ++c) {
      if (p[c] < i[c] - 1) in = false;
      sum += p[c];
    }
    if (in && sum <= i0 + 1) out.push_back(static_cast<int>(k));
  }
  return out;
}

FormCoefficient form_coefficient(const Patchwork& f, const Point& i,
                                 const std::vector<std::complex<double>>& z) {
  const int N = f.ambient_dim();
  const int idx = f.polytope().index_of(i);
  if (idx < 0) throw std::invalid_argument("form_coefficient: point outside the polytope");

  FormCoefficient out;
  out.i = i;
  std::complex<double> best_den(0, 0);
  for (int alpha = 0; alpha < N; ++alpha) {
    const auto den = f.log_derivative_rescaled(z, alpha);
    if (std::abs(den) > std::abs(best_den)) {
      best_den = den;
      out.alpha = alpha;
    }
  }
  if (std::abs(best_den) < 1e-12)
    throw std::runtime_error("form_coefficient: singular frame (all denominators vanish)");

  // Numerator term_i rescaled by the same t^{-L}.
  const auto x = log_image_of(z, f.t);
  const double L = f.tropical_value(x);
  const double mag = std::exp(std::log(f.t) * (f.exponent(idx, x) - L));
  double ph = 0;
  for (int k = 0; k < N; ++k) ph += std::arg(z[k]) * static_cast<double>(i[k]);
  const std::complex<double> num = f.coeffs[idx] * std::polar(mag, ph);
  out.value = num / best_den;
  return out;
}

std::vector<double> cell_representative(const DualComplex& dc, int cell_id) {
  const auto& cell = dc.cells()[cell_id];
  const auto& vp = dc.vertex_positions_f();
  std::vector<double> x(dc.polytope().ambient_dim(), 0.0);
  for (int v : cell.vertices)
    for (size_t k = 0; k < x.size(); ++k) x[k] += vp[v][k] / static_cast<double>(cell.vertices.size());
  for (const auto& ray : cell.rays)
    for (size_t k = 0; k < x.size(); ++k) x[k] += static_cast<double>(ray[k]);
  return x;
}

std::vector<Sample> samples_near_cell(const Patchwork& f, const DualComplex& dc, int cell_id,
                                      int count, std::uint64_t seed, double margin,
                                      const std::vector<double>* anchor) {
  const int N = f.ambient_dim();
  const int coord = transverse_coordinate(dc, cell_id);
  SingleCellDistance dist(dc, cell_id);

  auto off_target = [&](const std::vector<double>& x) {
    if (!anchor) return dist(x) > margin;
    double d2 = 0;
    for (int k = 0; k < N; ++k) d2 += (x[k] - (*anchor)[k]) * (x[k] - (*anchor)[k]);
    return std::sqrt(d2) > margin;
  };

  std::vector<Sample> out;
  std::uint64_t draw = 0;
  int dry = 0;
  while (static_cast<int>(out.size()) < count) {
    Rng rng = Rng::for_index(seed, draw++);
    auto x0 = anchor ? *anchor : random_cell_point(dc, cell_id, rng);
    std::vector<std::complex<double>> fixed(N);
    for (int k = 0; k < N; ++k) {
      if (k == coord) continue;
      fixed[k] = std::polar(std::pow(f.t, x0[k]), rng.next_in(0.0, 2.0 * M_PI));
    }
    bool hit = false;
    for (const auto& root : solve_coordinate(f, fixed, x0, coord)) {
      Sample s;
      s.z = fixed;
      s.z[coord] = root;
      s.logt = log_image_of(s.z, f.t);
      if (off_target(s.logt)) continue;
      s.residual = std::abs(f.eval_rescaled(s.z));
      if (s.residual > 1e-8) continue;
      s.defect = legendre_f(f.weights, s.logt).defect;
      out.push_back(std::move(s));
      hit = true;
      if (static_cast<int>(out.size()) >= count) break;
    }
    dry = hit ? 0 : dry + 1;
    if (dry > 400)
      throw std::runtime_error("samples_near_cell: no samples landed in the region");
  }
  return out;
}

DecayReport decay_check(const DualComplex& dc, const Point& i, int region_cell,
                        const std::vector<double>& t_schedule, int count, std::uint64_t seed) {
  const int idx = dc.polytope().index_of(i);
  const auto& supp = dc.cells()[region_cell].support;
  if (dc.cells()[region_cell].dim != dc.n())
    throw std::invalid_argument("decay_check: region is not an n-cell");
  if (std::binary_search(supp.begin(), supp.end(), idx))
    throw std::invalid_argument("decay_check: region's dual edge contains i");

  DecayReport rep;
  rep.t_schedule = t_schedule;
  // Sample around the region's interior representative: the uniform claim
  // is over compacts in the relative interior, and the closure of a face
  // may touch the cycle of i at a vertex, where the coefficient stays O(1).
  const auto center = cell_representative(dc, region_cell);
  for (double t : t_schedule) {
    Patchwork f(dc.weights(), t);
    auto samples = samples_near_cell(f, dc, region_cell, count, seed, 0.1, &center);
    double sup = 0;
    for (const auto& s : samples) sup = std::max(sup, std::abs(form_coefficient(f, i, s.z).value));
    rep.sup_coefficient.push_back(sup);
  }
  rep.monotone = true;
  for (size_t k = 0; k + 1 < rep.sup_coefficient.size(); ++k)
    if (rep.sup_coefficient[k + 1] >= rep.sup_coefficient[k]) rep.monotone = false;
  rep.final_ratio = rep.sup_coefficient.back() / rep.sup_coefficient.front();
  const double t_span = t_schedule.back() / t_schedule.front();
  rep.pass = rep.monotone && (t_span < 1e4 || rep.final_ratio <= 0.1);
  return rep;
}

TruncationReport truncation_compare(const DualComplex& dc, const Point& i, double t, int count,
                                    std::uint64_t seed) {
  const Subdivision& s = dc.subdivision();
  if (!check_translate_restriction(s, i))
    throw std::invalid_argument("truncation_compare: translate restriction fails at i");
  Patchwork full(dc.weights(), t);
  Patchwork trunc = restrict_support(full, translate_support(dc.polytope(), i));

  const int idx = dc.polytope().index_of(i);
  TruncationReport rep;
  rep.min_ratio = std::numeric_limits<double>::infinity();
  for (int cid : dc.cells_of_dim(dc.n())) {
    const auto& supp = dc.cells()[cid].support;
    if (!std::binary_search(supp.begin(), supp.end(), idx)) continue;
    auto samples = samples_near_cell(full, dc, cid, count, seed);
    for (const auto& sample : samples) {
      const auto a_full = form_coefficient(full, i, sample.z);
      // Same frame index for both forms.
      const auto den = trunc.log_derivative_rescaled(sample.z, a_full.alpha);
      const auto x = log_image_of(sample.z, t);
      const double L = trunc.tropical_value(x);
      const double mag = std::exp(std::log(t) * (trunc.exponent(idx, x) - L));
      double ph = 0;
      for (size_t k = 0; k < sample.z.size(); ++k)
        ph += std::arg(sample.z[k]) * static_cast<double>(i[k]);
      const std::complex<double> a_trunc = trunc.coeffs[idx] * std::polar(mag, ph) / den;

      const double rel = std::abs(a_full.value - a_trunc) / std::abs(a_trunc);
      const double ratio = std::abs(a_full.value / a_trunc);
      rep.max_rel_diff = std::max(rep.max_rel_diff, rel);
      rep.min_ratio = std::min(rep.min_ratio, ratio);
      ++rep.samples;
    }
  }
  rep.pass = rep.samples > 0 && rep.max_rel_diff <= 0.10 && rep.min_ratio >= 0.5;
  return rep;
}

std::vector<double> cell_midpoint(const DualComplex& dc, int cell_id) {
  const auto& cell = dc.cells()[cell_id];
  if (!cell.bounded) throw std::invalid_argument("cell_midpoint: cell is unbounded");
  const auto& vp = dc.vertex_positions_f();
  std::vector<double> x(dc.polytope().ambient_dim(), 0.0);
  for (int v : cell.vertices)
    for (size_t k = 0; k < x.size(); ++k) x[k] += vp[v][k] / static_cast<double>(cell.vertices.size());
  return x;
}

FiberReport fiber_phase_check(const DualComplex& dc, const Point& i, const std::vector<double>& x,
                              const std::vector<double>& t_schedule, int sweep_points,
                              const std::vector<int>* support_restriction) {
  if (dc.n() != 1) throw std::invalid_argument("fiber_phase_check: curves only");
  if (dc.polytope().index_of(i) < 0)
    throw std::invalid_argument("fiber_phase_check: i outside the polytope");

  FiberReport rep;
  rep.t_schedule = t_schedule;
  for (double t : t_schedule) {
    Patchwork f(dc.weights(), t);
    if (support_restriction) f = restrict_support(f, *support_restriction);

    // The two dominant exponents at x identify the face; solve the
    // coordinate in which they differ and sweep the phase of the other.
    int top = -1, second = -1;
    double e1 = -1e300, e2 = -1e300;
    for (size_t j = 0; j < f.polytope().points().size(); ++j) {
      if (f.coeffs[j] == std::complex<double>(0.0, 0.0)) continue;
      const double e = f.exponent(static_cast<int>(j), x);
      if (e > e1) {
        e2 = e1;
        second = top;
        e1 = e;
        top = static_cast<int>(j);
      } else if (e > e2) {
        e2 = e;
        second = static_cast<int>(j);
      }
    }
    const auto& pa = f.polytope().points()[top];
    const auto& pb = f.polytope().points()[second];
    const int solve_c = std::llabs(pb[0] - pa[0]) >= std::llabs(pb[1] - pa[1]) ? 0 : 1;
    const int sweep_c = 1 - solve_c;

    double max_phase = 0;
    double worst_dev = 0;
    bool found_any = false;
    for (int k = 0; k < sweep_points; ++k) {
      const double theta = 2.0 * M_PI * (static_cast<double>(k) + 0.5) / sweep_points;
      std::vector<std::complex<double>> fixed(2);
      fixed[sweep_c] = std::polar(std::pow(t, x[sweep_c]), theta);
      double best_dev = std::numeric_limits<double>::infinity();
      std::complex<double> best_root;
      for (const auto& root : solve_coordinate(f, fixed, x, solve_c)) {
        const double dev = std::abs(std::log(std::abs(root)) / std::log(t) - x[solve_c]);
        if (dev < best_dev) {
          best_dev = dev;
          best_root = root;
        }
      }
      if (best_dev > 0.2) continue;  // no fiber point for this phase
      found_any = true;
      worst_dev = std::max(worst_dev, best_dev);
      std::vector<std::complex<double>> z = fixed;
      z[solve_c] = best_root;
      const auto a = form_coefficient(f, i, z);
      // Pullback coefficient of the form in the d(theta) frame:
      // (-1)^(alpha-1) * (i / log t) * A; the special-phase defect is
      // |Im(e^{i pi/2} coeff)| / |coeff|, scale-invariant.
      const std::complex<double> coeff =
          (a.alpha % 2 == 0 ? 1.0 : -1.0) * std::complex<double>(0, 1) * a.value;
      const std::complex<double> rotated = std::polar(1.0, M_PI / 2.0) * coeff;
      max_phase = std::max(max_phase, std::abs(rotated.imag()) / std::abs(rotated));
    }
    if (!found_any)
      throw std::runtime_error("fiber_phase_check: fiber point not found within tolerance");
    rep.max_phase_ratio.push_back(max_phase);
    rep.max_log_deviation.push_back(worst_dev);
  }
  rep.decreasing = true;
  for (size_t k = 0; k + 1 < rep.max_phase_ratio.size(); ++k)
    if (rep.max_phase_ratio[k + 1] >= rep.max_phase_ratio[k]) rep.decreasing = false;
  rep.pass = rep.decreasing && rep.max_phase_ratio.back() <= 0.1;
  return rep;
}

}  // namespace trop
