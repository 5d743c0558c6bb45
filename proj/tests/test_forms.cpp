#include "doctest.h"

#include <cmath>
#include <complex>

#include "trop/cycles.hpp"
#include "trop/forms.hpp"
#include "trop/rng.hpp"

using namespace trop;

namespace {

DualComplex canonical_complex(int n, std::int64_t d) {
  return DualComplex::build(regular_subdivision(Weights::canonical(Polytope::simplex(n, d))));
}

// n-cell of the complex dual to the edge through the two given points.
int edge_cell(const DualComplex& dc, const Point& a, const Point& b) {
  std::vector<int> supp{dc.polytope().index_of(a), dc.polytope().index_of(b)};
  std::sort(supp.begin(), supp.end());
  return dc.cell_id(supp);
}

}  // namespace

TEST_CASE("two-term polynomials: |A| = 1/|i_a - j_a| exactly on the variety") {
  auto dc = canonical_complex(1, 3);
  const Point i{1, 1}, j{1, 2};
  Patchwork full(dc.weights(), 1.0e4);
  auto two = restrict_support(full, {dc.polytope().index_of(i), dc.polytope().index_of(j)});
  Rng rng(5);
  for (int k = 0; k < 25; ++k) {
    std::vector<std::complex<double>> fixed(2);
    fixed[0] = std::polar(std::pow(two.t, rng.next_in(-2.0, 2.0)), rng.next_in(0.0, 2 * M_PI));
    auto roots = solve_coordinate(two, fixed, {0.0, 6.0}, 1);
    REQUIRE_FALSE(roots.empty());
    std::vector<std::complex<double>> z{fixed[0], roots[0]};
    auto a = form_coefficient(two, i, z);
    CHECK(a.alpha == 1);  // the two exponents differ in the second slot
    CHECK(std::abs(a.value) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("face limit on the d=3 curve at t=1e4: |A| within 25% of 1") {
  auto dc = canonical_complex(1, 3);
  const Point i{1, 1}, j{1, 2};
  const int cell = edge_cell(dc, i, j);
  REQUIRE(cell >= 0);
  Patchwork f(dc.weights(), 1.0e4);
  const auto center = cell_representative(dc, cell);
  auto samples = samples_near_cell(f, dc, cell, 40, 17, 0.1, &center);
  REQUIRE(samples.size() == 40);
  for (const auto& s : samples) {
    auto a = form_coefficient(f, i, s.z);
    CHECK(std::abs(a.value) > 0.75);
    CHECK(std::abs(a.value) < 1.25);
  }
}

TEST_CASE("decay away from the cycle") {
  auto dc = canonical_complex(1, 4);
  const Point near{2, 1}, far{1, 1};
  // a face of the sphere cycle of (2,1) whose dual edge avoids (1,1)
  int region = -1;
  const int near_idx = dc.polytope().index_of(near);
  const int far_idx = dc.polytope().index_of(far);
  for (int cid : dc.cells_of_dim(1)) {
    const auto& supp = dc.cells()[cid].support;
    if (std::binary_search(supp.begin(), supp.end(), near_idx) &&
        !std::binary_search(supp.begin(), supp.end(), far_idx) && dc.cells()[cid].bounded) {
      region = cid;
      break;
    }
  }
  REQUIRE(region >= 0);

  SUBCASE("coefficient of the far point decays") {
    auto rep = decay_check(dc, far, region, {1.0e2, 1.0e4, 1.0e6}, 30, 23);
    CHECK(rep.pass);
    CHECK(rep.final_ratio <= 0.1);
  }
  SUBCASE("region containing i is rejected") {
    CHECK_THROWS_AS(decay_check(dc, near, region, {1.0e2, 1.0e4}, 10, 23), std::invalid_argument);
  }
  SUBCASE("two-term control: decay tracks the tropical gap") {
    // Around the region's center the top two terms tie; the i-th term sits
    // gap below, so |A_i| ~ t^{-gap} once subleading terms are negligible.
    auto rep = decay_check(dc, far, region, {1.0e4, 1.0e6}, 30, 29);
    std::vector<double> mid = cell_midpoint(dc, region);
    RatVec xr;
    for (double c : mid) xr.emplace_back(Int(std::llround(c * 16)), Int(16));
    auto lr = legendre(dc.weights(), xr);
    const int far_id = dc.polytope().index_of(far);
    Rat far_val = -dc.weights()[far_id];
    for (size_t k = 0; k < xr.size(); ++k) far_val += xr[k] * dc.polytope().points()[far_id][k];
    const double gap = rat_to_double(lr.value - far_val);
    const double predicted = std::pow(1.0e6 / 1.0e4, -gap);
    const double measured = rep.sup_coefficient.back() / rep.sup_coefficient.front();
    CHECK(measured < 2.0 * predicted);
    CHECK(measured > predicted / 2.0);
  }
}

TEST_CASE("truncation comparison") {
  SUBCASE("d = n+2: truncation is the identity") {
    auto dc = canonical_complex(1, 3);
    auto rep = truncation_compare(dc, {1, 1}, 1.0e4, 20, 3);
    CHECK(rep.pass);
    CHECK(rep.max_rel_diff == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(rep.min_ratio == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("d=4 curve: within 10%, ratio bounded away from zero") {
    auto dc = canonical_complex(1, 4);
    auto rep = truncation_compare(dc, {1, 1}, 1.0e4, 25, 3);
    CHECK(rep.pass);
    CHECK(rep.samples > 0);
  }
}

TEST_CASE("fiber phase") {
  auto dc = canonical_complex(1, 3);
  const Point i{1, 1};
  // bounded 1-cell of the sphere cycle
  int cell = -1;
  const int idx = dc.polytope().index_of(i);
  for (int cid : dc.cells_of_dim(1)) {
    const auto& supp = dc.cells()[cid].support;
    if (dc.cells()[cid].bounded && std::binary_search(supp.begin(), supp.end(), idx)) {
      cell = cid;
      break;
    }
  }
  REQUIRE(cell >= 0);
  const auto mid = cell_midpoint(dc, cell);

  SUBCASE("phase defect decreases and ends below 0.1") {
    auto rep = fiber_phase_check(dc, i, mid, {1.0e2, 1.0e3, 1.0e4}, 48);
    CHECK(rep.pass);
    CHECK(rep.max_phase_ratio.back() <= 0.1);
  }
  SUBCASE("two-term control: residual phase below 1e-6") {
    const auto& supp = dc.cells()[cell].support;
    std::vector<int> pair{supp.front(), supp.back()};
    auto rep = fiber_phase_check(dc, i, mid, {1.0e4}, 48, &pair);
    CHECK(rep.max_phase_ratio.back() <= 1e-6);
    CHECK(rep.max_log_deviation.back() <= 1e-9);
  }
  SUBCASE("base point off the complex is an error") {
    CHECK_THROWS_AS(fiber_phase_check(dc, i, {0.0, 0.0}, {1.0e3}, 16), std::runtime_error);
  }
}

TEST_CASE("frame consistency along variety paths") {
  // (log t)^{-1} d log z equals d log|xi| + i (log t)^{-1} d theta under the
  // normalization |xi| = |z|^{1/log t}; check by finite differences.
  auto dc = canonical_complex(1, 3);
  Patchwork f(dc.weights(), 1.0e3);
  auto samples = sample_variety(f, 10, 77);
  const double lt = std::log(f.t);
  int clean = 0;
  for (const auto& s : samples) {
    const double eps = 1e-6;
    std::vector<std::complex<double>> fixed(2);
    fixed[0] = s.z[0] * std::exp(std::complex<double>(eps, eps));
    double best = std::numeric_limits<double>::infinity();
    std::complex<double> next;
    for (const auto& root : solve_coordinate(f, fixed, s.logt, 1)) {
      const double rel = std::abs(root - s.z[1]) / std::abs(s.z[1]);
      if (rel < best) {
        best = rel;
        next = root;
      }
    }
    if (best > 1e-4) continue;  // near a branch point: continuation ambiguous
    ++clean;
    const std::complex<double> dlog = std::log(next / s.z[1]);  // principal branch, small step
    const double dlogxi = (std::log(std::abs(next)) - std::log(std::abs(s.z[1]))) / lt;
    const double dtheta = std::arg(next / s.z[1]);
    const std::complex<double> lhs = dlog / lt;
    const std::complex<double> rhs(dlogxi, dtheta / lt);
    CHECK(std::abs(lhs - rhs) <= 1e-6 * (1.0 + std::abs(lhs)));
  }
  CHECK(clean >= 5);
}

TEST_CASE("localization partition: every near-cycle sample is claimed") {
  auto dc = canonical_complex(1, 4);
  Patchwork f(dc.weights(), 1.0e4);
  const auto ips = interior_points(dc.polytope());
  for (const auto& i : ips) {
    const int idx = dc.polytope().index_of(i);
    for (int cid : dc.cells_of_dim(1)) {
      const auto& supp = dc.cells()[cid].support;
      if (!std::binary_search(supp.begin(), supp.end(), idx)) continue;
      const auto center = cell_representative(dc, cid);
      auto samples = samples_near_cell(f, dc, cid, 10, 41, 0.1, &center);
      const auto [a, b] = dc.subdivision().edge_endpoints(
          dc.subdivision().face_id(supp));
      const Point other = (a == i) ? b : a;
      for (const auto& s : samples) {
        // frame index restricted to slots where the face exponents differ
        int alpha = -1;
        double best = 0;
        for (int c = 0; c < 2; ++c) {
          if (other[c] == i[c]) continue;
          const double mag = std::abs(f.log_derivative_rescaled(s.z, c));
          if (mag > best) {
            best = mag;
            alpha = c;
          }
        }
        REQUIRE(alpha >= 0);
        auto coeff = form_coefficient(f, i, s.z);
        const double limit = 1.0 / std::abs(static_cast<double>(other[alpha] - i[alpha]));
        CHECK(std::abs(coeff.value) > 0.5 * limit);
      }
    }
  }
}
