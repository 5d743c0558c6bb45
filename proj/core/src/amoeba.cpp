#include "trop/amoeba.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "trop/parallel.hpp"
#include "trop/rng.hpp"

namespace trop {

Patchwork::Patchwork(Weights w, double t_) : weights(std::move(w)), t(t_) {
  if (t <= 1.0) throw std::invalid_argument("patchwork polynomial requires t > 1");
  coeffs.assign(polytope().points().size(), std::complex<double>(1.0, 0.0));
}

double Patchwork::exponent(int point_index, const std::vector<double>& x) const {
  const auto& p = polytope().points()[point_index];
  double e = -weights.values_f()[point_index];
  for (size_t k = 0; k < x.size(); ++k) e += x[k] * static_cast<double>(p[k]);
  return e;
}

double Patchwork::tropical_value(const std::vector<double>& x) const {
  double best = -std::numeric_limits<double>::infinity();
  for (size_t j = 0; j < polytope().points().size(); ++j) {
    if (coeffs[j] == std::complex<double>(0.0, 0.0)) continue;
    best = std::max(best, exponent(static_cast<int>(j), x));
  }
  return best;
}

namespace {

std::vector<double> log_image(const std::vector<std::complex<double>>& z, double t) {
  std::vector<double> x(z.size());
  const double lt = std::log(t);
  for (size_t k = 0; k < z.size(); ++k) x[k] = std::log(std::abs(z[k])) / lt;
  return x;
}

}  // namespace

std::complex<double> Patchwork::eval_rescaled(const std::vector<std::complex<double>>& z) const {
  const auto x = log_image(z, t);
  const double L = tropical_value(x);
  const double lt = std::log(t);
  std::vector<double> theta(z.size());
  for (size_t k = 0; k < z.size(); ++k) theta[k] = std::arg(z[k]);
  std::complex<double> acc(0.0, 0.0);
  const auto& pts = polytope().points();
  for (size_t j = 0; j < pts.size(); ++j) {
    if (coeffs[j] == std::complex<double>(0.0, 0.0)) continue;
    const double mag = std::exp(lt * (exponent(static_cast<int>(j), x) - L));
    double ph = 0;
    for (size_t k = 0; k < z.size(); ++k) ph += theta[k] * static_cast<double>(pts[j][k]);
    acc += coeffs[j] * std::polar(mag, ph);
  }
  return acc;
}

std::complex<double> Patchwork::log_derivative_rescaled(const std::vector<std::complex<double>>& z,
                                                        int alpha) const {
  const auto x = log_image(z, t);
  const double L = tropical_value(x);
  const double lt = std::log(t);
  std::vector<double> theta(z.size());
  for (size_t k = 0; k < z.size(); ++k) theta[k] = std::arg(z[k]);
  std::complex<double> acc(0.0, 0.0);
  const auto& pts = polytope().points();
  for (size_t j = 0; j < pts.size(); ++j) {
    const double ja = static_cast<double>(pts[j][alpha]);
    if (ja == 0.0 || coeffs[j] == std::complex<double>(0.0, 0.0)) continue;
    const double mag = std::exp(lt * (exponent(static_cast<int>(j), x) - L));
    double ph = 0;
    for (size_t k = 0; k < z.size(); ++k) ph += theta[k] * static_cast<double>(pts[j][k]);
    acc += ja * coeffs[j] * std::polar(mag, ph);
  }
  return acc;
}

std::vector<std::complex<double>> solve_coordinate(const Patchwork& f,
                                                   const std::vector<std::complex<double>>& fixed,
                                                   const std::vector<double>& x0, int coord) {
  const int N = f.ambient_dim();
  if (static_cast<int>(fixed.size()) != N && static_cast<int>(fixed.size()) != N - 1)
    throw std::invalid_argument("solve_coordinate: wrong number of fixed coordinates");
  const double lt = std::log(f.t);
  std::vector<double> xs(N, 0.0), th(N, 0.0);
  for (int k = 0, src = 0; k < N; ++k) {
    if (k == coord) {
      if (static_cast<int>(fixed.size()) == N) ++src;
      continue;
    }
    xs[k] = std::log(std::abs(fixed[src])) / lt;
    th[k] = std::arg(fixed[src]);
    ++src;
  }
  const double xl = x0[coord];

  const auto& pts = f.polytope().points();
  std::int64_t degree = 0;
  for (const auto& p : pts) degree = std::max(degree, p[coord]);

  // Coefficient exponents relative to their maximum, so magnitudes stay <= 1.
  std::vector<double> expo(pts.size());
  double emax = -std::numeric_limits<double>::infinity();
  for (size_t j = 0; j < pts.size(); ++j) {
    if (f.coeffs[j] == std::complex<double>(0.0, 0.0)) continue;
    double e = -f.weights.values_f()[j] + static_cast<double>(pts[j][coord]) * xl;
    for (int k = 0; k < N; ++k)
      if (k != coord) e += static_cast<double>(pts[j][k]) * xs[k];
    expo[j] = e;
    emax = std::max(emax, e);
  }
  std::vector<std::complex<double>> coef(degree + 1, std::complex<double>(0, 0));
  for (size_t j = 0; j < pts.size(); ++j) {
    if (f.coeffs[j] == std::complex<double>(0.0, 0.0)) continue;
    const double mag = std::exp(lt * (expo[j] - emax));
    double ph = 0;
    for (int k = 0; k < N; ++k)
      if (k != coord) ph += th[k] * static_cast<double>(pts[j][k]);
    coef[pts[j][coord]] += f.coeffs[j] * std::polar(mag, ph);
  }

  // Root magnitudes cluster at the slopes of the coefficient Newton
  // polygon; with t large the raw coefficient range is astronomical, so
  // each cluster is solved in its own rescaled frame u = r * w where the
  // cluster's coefficients have magnitude near one.
  std::vector<int> hull;  // upper hull of (k, log|coef_k|)
  {
    std::vector<double> lc(coef.size());
    for (size_t k = 0; k < coef.size(); ++k)
      lc[k] = coef[k] == std::complex<double>(0, 0) ? -std::numeric_limits<double>::infinity()
                                                    : std::log(std::abs(coef[k]));
    for (size_t k = 0; k < coef.size(); ++k) {
      if (std::isinf(lc[k])) continue;
      while (hull.size() >= 2) {
        const int a = hull[hull.size() - 2], b = hull[hull.size() - 1];
        // drop b when it lies below segment a-k
        if ((lc[b] - lc[a]) * (static_cast<double>(k) - a) <=
            (lc[k] - lc[a]) * (b - a))
          hull.pop_back();
        else
          break;
      }
      hull.push_back(static_cast<int>(k));
    }
    if (hull.size() < 2) return {};
  }

  std::vector<std::complex<double>> roots;
  auto polish = [](std::vector<std::complex<double>>& c, std::complex<double> u) {
    const int m = static_cast<int>(c.size()) - 1;
    for (int it = 0; it < 50; ++it) {
      std::complex<double> p(0, 0), dp(0, 0);
      double scale = 0;
      for (int k = m; k >= 0; --k) {
        if (k < m) dp = dp * u + p;
        p = p * u + c[k];
        scale = scale * std::abs(u) + std::abs(c[k]);
      }
      if (std::abs(p) <= 1e-14 * scale || std::abs(dp) == 0.0) break;
      const std::complex<double> step = p / dp;
      u -= step;
      if (std::abs(step) <= 1e-16 * (1.0 + std::abs(u))) break;
    }
    return u;
  };

  for (size_t e = 0; e + 1 < hull.size(); ++e) {
    const int a = hull[e], b = hull[e + 1];
    const double logr =
        (std::log(std::abs(coef[a])) - std::log(std::abs(coef[b]))) / static_cast<double>(b - a);
    if (!std::isfinite(logr) || std::abs(logr) > 600.0) continue;  // off-scale cluster
    const double r = std::exp(logr);
    // coefficients of q(w) = p(r w) / |leading cluster magnitude|
    const double mscale = std::log(std::abs(coef[a])) + a * logr;
    std::vector<std::complex<double>> q(coef.size());
    for (size_t k = 0; k < coef.size(); ++k) {
      if (coef[k] == std::complex<double>(0, 0)) {
        q[k] = 0;
        continue;
      }
      const double lg = std::log(std::abs(coef[k])) + static_cast<double>(k) * logr - mscale;
      q[k] = std::polar(std::exp(lg), std::arg(coef[k]));
    }
    // Companion on a tightly stripped copy keeps the matrix well scaled;
    // the Newton polish then runs against the full cluster-frame
    // polynomial.
    int qhi = static_cast<int>(q.size()) - 1;
    while (qhi > 0 && std::abs(q[qhi]) < 1e-12) --qhi;
    int qlo = 0;
    while (qlo < qhi && std::abs(q[qlo]) < 1e-12) ++qlo;
    if (qhi <= qlo) continue;
    std::vector<std::complex<double>> c(q.begin() + qlo, q.begin() + qhi + 1);
    const int m = static_cast<int>(c.size()) - 1;
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(m, m);
    for (int row = 1; row < m; ++row) companion(row, row - 1) = 1.0;
    for (int row = 0; row < m; ++row) companion(row, m - 1) = -c[row] / c[m];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success) continue;

    // keep the b-a roots nearest magnitude one: they belong to this cluster
    std::vector<std::complex<double>> w;
    for (int k = 0; k < m; ++k) w.push_back(solver.eigenvalues()(k));
    std::sort(w.begin(), w.end(), [](const auto& x, const auto& y) {
      return std::abs(std::log(std::abs(x))) < std::abs(std::log(std::abs(y)));
    });
    w.resize(std::min<size_t>(w.size(), b - a));
    for (auto& root : w) {
      root = polish(q, root);
      const double mag = std::abs(root) * r;
      if (!std::isfinite(mag) || mag < 1e-140 || mag > 1e140) continue;
      roots.push_back(root * r);
    }
  }

  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    const double ma = std::abs(a), mb = std::abs(b);
    if (ma != mb) return ma < mb;
    return std::arg(a) < std::arg(b);
  });
  const double tpow = std::pow(f.t, xl);
  for (auto& u : roots) u *= tpow;
  return roots;
}

std::vector<std::complex<double>> solve_last_coordinate(const Patchwork& f,
                                                        const std::vector<std::complex<double>>& fixed,
                                                        const std::vector<double>& x0) {
  return solve_coordinate(f, fixed, x0, f.ambient_dim() - 1);
}

std::vector<Sample> sample_variety(const Patchwork& f, int count, std::uint64_t seed,
                                   const Box& window) {
  if (count < 0) throw std::invalid_argument("sample_variety: negative count");
  if (count == 0) return {};
  const int N = f.ambient_dim();

  const int chunk = 64;
  std::vector<Sample> out;
  std::uint64_t next_draw = 0;
  int empty_streak = 0;

  while (static_cast<int>(out.size()) < count) {
    std::vector<std::vector<Sample>> batch(chunk);
    parallel_for(chunk, [&](size_t b) {
      const std::uint64_t draw = next_draw + b;
      const int coord = static_cast<int>(draw % static_cast<std::uint64_t>(N));
      Rng rng = Rng::for_index(seed, draw);
      std::vector<double> x0(N);
      for (int k = 0; k < N; ++k) x0[k] = rng.next_in(window.lo, window.hi);
      std::vector<std::complex<double>> fixed(N);
      for (int k = 0; k < N; ++k) {
        if (k == coord) continue;
        fixed[k] = std::polar(std::pow(f.t, x0[k]), rng.next_in(0.0, 2.0 * M_PI));
      }
      std::vector<Sample> local;
      for (const auto& root : solve_coordinate(f, fixed, x0, coord)) {
        Sample s;
        s.z = fixed;
        s.z[coord] = root;
        s.logt = log_image(s.z, f.t);
        s.residual = std::abs(f.eval_rescaled(s.z));
        if (s.residual > 1e-8) continue;
        s.defect = legendre_f(f.weights, s.logt).defect;
        local.push_back(std::move(s));
      }
      batch[b] = std::move(local);
    });
    bool any = false;
    for (int b = 0; b < chunk && static_cast<int>(out.size()) < count; ++b) {
      for (auto& s : batch[b]) {
        any = true;
        if (static_cast<int>(out.size()) < count) out.push_back(std::move(s));
      }
    }
    next_draw += chunk;
    empty_streak = any ? 0 : empty_streak + 1;
    if (empty_streak > 50)
      throw std::runtime_error("sample_variety: no residual-clean roots after retry budget (" +
                               std::to_string(next_draw) + " draws)");
  }
  return out;
}

// ---- distance machinery ----

namespace {

struct CellGeometry {
  std::vector<double> base;          // a point on the affine hull
  Eigen::MatrixXd tangent;           // orthonormal columns spanning the hull
  std::vector<std::vector<double>> ineq_normals;
  std::vector<double> ineq_rhs;
};

struct DistanceOracle {
  std::vector<CellGeometry> cells;
  int dim;

  explicit DistanceOracle(const DualComplex& dc) {
    const Polytope& P = dc.polytope();
    dim = P.ambient_dim();
    const auto& pts = P.points();
    const auto& vf = dc.weights().values_f();
    for (const auto& cell : dc.cells()) {
      CellGeometry g;
      g.base = dc.vertex_positions_f()[cell.vertices[0]];
      const int p0 = cell.support[0];
      Eigen::MatrixXd rows(static_cast<int>(cell.support.size()) - 1, dim);
      for (size_t i = 1; i < cell.support.size(); ++i)
        for (int k = 0; k < dim; ++k)
          rows(static_cast<int>(i) - 1, k) =
              static_cast<double>(pts[cell.support[i]][k] - pts[p0][k]);
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(rows, Eigen::ComputeFullV);
      const auto& sv = svd.singularValues();
      int rank = 0;
      for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > 1e-9 * sv(0)) ++rank;
      g.tangent = svd.matrixV().rightCols(dim - rank);
      for (size_t k = 0; k < pts.size(); ++k) {
        if (std::binary_search(cell.support.begin(), cell.support.end(), static_cast<int>(k)))
          continue;
        std::vector<double> nrm(dim);
        for (int c = 0; c < dim; ++c) nrm[c] = static_cast<double>(pts[k][c] - pts[p0][c]);
        g.ineq_normals.push_back(std::move(nrm));
        g.ineq_rhs.push_back(vf[k] - vf[p0]);
      }
      cells.push_back(std::move(g));
    }
  }

  double distance(const std::vector<double>& x) const {
    Eigen::Map<const Eigen::VectorXd> xv(x.data(), dim);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& g : cells) {
      Eigen::Map<const Eigen::VectorXd> b(g.base.data(), dim);
      Eigen::VectorXd p = b + g.tangent * (g.tangent.transpose() * (xv - b));
      bool feasible = true;
      for (size_t i = 0; i < g.ineq_normals.size() && feasible; ++i) {
        double dot = 0;
        for (int k = 0; k < dim; ++k) dot += p(k) * g.ineq_normals[i][k];
        if (dot > g.ineq_rhs[i] + 1e-9 * (1.0 + std::abs(g.ineq_rhs[i]))) feasible = false;
      }
      if (!feasible) continue;
      best = std::min(best, (xv - p).norm());
    }
    return best;
  }
};

std::vector<std::vector<double>> complex_grid(const DualComplex& dc, const Box& window) {
  std::vector<std::vector<double>> grid;
  const auto& vp = dc.vertex_positions_f();
  const int dim = dc.polytope().ambient_dim();
  auto in_window = [&](const std::vector<double>& x) {
    for (double c : x)
      if (c < window.lo || c > window.hi) return false;
    return true;
  };
  for (int cid : dc.cells_of_dim(dc.n())) {
    const auto& cell = dc.cells()[cid];
    std::vector<std::vector<double>> pts;
    for (int v : cell.vertices) pts.push_back(vp[v]);
    std::vector<double> center(dim, 0.0);
    for (const auto& p : pts)
      for (int k = 0; k < dim; ++k) center[k] += p[k] / static_cast<double>(pts.size());
    // vertices, center, vertex-center blends
    for (const auto& p : pts) {
      if (in_window(p)) grid.push_back(p);
      for (double lam : {0.25, 0.5, 0.75}) {
        std::vector<double> q(dim);
        for (int k = 0; k < dim; ++k) q[k] = lam * p[k] + (1 - lam) * center[k];
        if (in_window(q)) grid.push_back(q);
      }
    }
    if (in_window(center)) grid.push_back(center);
    for (const auto& ray : cell.rays)
      for (double s : {0.5, 1.0, 2.0, 3.0, 4.0}) {
        std::vector<double> q = center;
        for (int k = 0; k < dim; ++k) q[k] += s * static_cast<double>(ray[k]);
        if (in_window(q)) grid.push_back(q);
      }
  }
  return grid;
}

double percentile(std::vector<double> v, double q) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  const double pos = q * (static_cast<double>(v.size()) - 1);
  const size_t i = static_cast<size_t>(pos);
  if (i + 1 >= v.size()) return v.back();
  const double frac = pos - static_cast<double>(i);
  return v[i] * (1 - frac) + v[i + 1] * frac;
}

bool non_increasing_with_slack(const std::vector<double>& s) {
  int soft = 0;
  for (size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i + 1] <= s[i] * (1 + 1e-12)) continue;
    if (s[i + 1] > 1.05 * s[i]) return false;
    ++soft;
  }
  return soft <= 1;
}

}  // namespace

double distance_to_complex(const std::vector<double>& x, const DualComplex& dc) {
  return DistanceOracle(dc).distance(x);
}

ConvergenceReport convergence_report(const Weights& v, const std::vector<double>& t_schedule,
                                     int count, std::uint64_t seed, const Box& window) {
  if (t_schedule.size() < 2)
    throw std::invalid_argument("convergence_report: schedule needs at least 2 entries");
  for (size_t i = 0; i + 1 < t_schedule.size(); ++i)
    if (t_schedule[i + 1] <= t_schedule[i])
      throw std::invalid_argument("convergence_report: schedule must increase");

  auto dc = DualComplex::build(regular_subdivision(v));
  DistanceOracle oracle(dc);
  const auto grid = complex_grid(dc, window);

  ConvergenceReport rep;
  for (double t : t_schedule) {
    Patchwork f(v, t);
    auto samples = sample_variety(f, count, seed, window);
    std::vector<double> dist(samples.size()), defects(samples.size());
    parallel_for(samples.size(), [&](size_t i) {
      dist[i] = oracle.distance(samples[i].logt);
      defects[i] = samples[i].defect;
    });
    TStats st;
    st.t = t;
    st.samples = static_cast<int>(samples.size());
    st.median_distance = percentile(dist, 0.5);
    st.p95_distance = percentile(dist, 0.95);
    st.median_defect = percentile(defects, 0.5);
    st.p95_defect = percentile(defects, 0.95);
    double cov = 0;
    for (const auto& g : grid) {
      double nearest = std::numeric_limits<double>::infinity();
      for (const auto& s : samples) {
        double d2 = 0;
        for (size_t k = 0; k < g.size(); ++k) {
          const double diff = g[k] - s.logt[k];
          d2 += diff * diff;
        }
        nearest = std::min(nearest, d2);
      }
      cov = std::max(cov, std::sqrt(nearest));
    }
    st.coverage = cov;
    rep.per_t.push_back(st);
  }

  std::vector<double> med, p95, cov;
  for (const auto& st : rep.per_t) {
    med.push_back(st.median_distance);
    p95.push_back(st.p95_distance);
    cov.push_back(st.coverage);
  }
  rep.distances_non_increasing = non_increasing_with_slack(med) && non_increasing_with_slack(p95);
  rep.coverage_non_increasing = non_increasing_with_slack(cov);
  rep.pass = rep.distances_non_increasing && rep.coverage_non_increasing;
  return rep;
}

}  // namespace trop
