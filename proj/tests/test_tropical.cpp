#include "doctest.h"

#include <cmath>

#include "trop/rng.hpp"
#include "trop/weights.hpp"

using namespace trop;

TEST_CASE("canonical weight values") {
  CHECK(canonical_weight({0, 0}) == 0);
  CHECK(canonical_weight({1, 0}) == 2);
  CHECK(canonical_weight({0, 1, 0}) == 2);
  CHECK(canonical_weight({1, 1}) == 6);
  CHECK(canonical_weight({2, 1}) == 14);
}

TEST_CASE("canonical weight is strictly convex along lattice segments") {
  for (int n = 1; n <= 3; ++n) {
    const std::int64_t dmax = n == 1 ? 6 : (n == 2 ? 5 : 4);
    for (std::int64_t d = 2; d <= dmax; ++d) {
      auto P = Polytope::simplex(n, d);
      const auto& pts = P.points();
      for (size_t a = 0; a < pts.size(); ++a)
        for (size_t b = a + 1; b < pts.size(); ++b) {
          Point mid(pts[a].size());
          bool integral = true;
          for (size_t k = 0; k < mid.size(); ++k) {
            const auto s = pts[a][k] + pts[b][k];
            if (s % 2 != 0) { integral = false; break; }
            mid[k] = s / 2;
          }
          if (!integral) continue;
          CHECK(2 * canonical_weight(mid) < canonical_weight(pts[a]) + canonical_weight(pts[b]));
        }
    }
  }
}

TEST_CASE("legendre evaluation: examples") {
  SUBCASE("canonical on simplex d=3") {
    auto v = Weights::canonical(Polytope::simplex(1, 3));
    auto r = legendre(v, RatVec{Rat(0), Rat(0)});
    CHECK(r.value == 0);
    REQUIRE(r.argmax.size() == 1);
    CHECK(v.polytope().points()[r.argmax[0]] == Point{0, 0});
    REQUIRE(r.defect.has_value());
    CHECK(*r.defect == 2);
  }
  SUBCASE("zero weights on unit simplex") {
    auto v = Weights::zero(Polytope::simplex(1, 1));
    auto r = legendre(v, RatVec{Rat(0), Rat(0)});
    CHECK(r.argmax.size() == 3);
    REQUIRE(r.defect.has_value());
    CHECK(*r.defect == 0);

    auto r2 = legendre(v, RatVec{Rat(2), Rat(1)});
    CHECK(r2.value == 2);
    REQUIRE(r2.argmax.size() == 1);
    CHECK(v.polytope().points()[r2.argmax[0]] == Point{1, 0});
    CHECK(*r2.defect == 1);
  }
}

TEST_CASE("legendre is convex and piecewise linear (exact, random rational points)") {
  auto v = Weights::canonical(Polytope::simplex(1, 4));
  Rng rng(2026);
  for (int trial = 0; trial < 200; ++trial) {
    RatVec x, y;
    for (int k = 0; k < 2; ++k) {
      x.emplace_back(Int(static_cast<std::int64_t>(rng.next_below(41)) - 20), Int(1 + rng.next_below(7)));
      y.emplace_back(Int(static_cast<std::int64_t>(rng.next_below(41)) - 20), Int(1 + rng.next_below(7)));
    }
    const Rat lambda(Int(rng.next_below(11)), Int(10));
    RatVec mix(2);
    for (int k = 0; k < 2; ++k) mix[k] = lambda * x[k] + (1 - lambda) * y[k];
    const Rat lhs = legendre(v, mix).value;
    const Rat rhs = lambda * legendre(v, x).value + (1 - lambda) * legendre(v, y).value;
    CHECK(lhs <= rhs);
  }
}

TEST_CASE("float backend agrees with exact backend within 1e-9") {
  auto v = Weights::canonical(Polytope::simplex(2, 4));
  Rng rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    RatVec x;
    std::vector<double> xf;
    for (int k = 0; k < 3; ++k) {
      const Rat c(Int(static_cast<std::int64_t>(rng.next_below(2001)) - 1000), Int(100));
      x.push_back(c);
      xf.push_back(rat_to_double(c));
    }
    auto exact = legendre(v, x);
    auto approx = legendre_f(v, xf);
    CHECK(std::abs(rat_to_double(exact.value) - approx.value) < 1e-9);
    REQUIRE(exact.defect.has_value());
    CHECK(std::abs(rat_to_double(*exact.defect) - approx.defect) < 1e-9);
  }
}

TEST_CASE("legendre rejects bad input") {
  auto v = Weights::canonical(Polytope::simplex(1, 2));
  CHECK_THROWS_AS(legendre(v, RatVec{Rat(0)}), std::invalid_argument);
}
