#include "doctest.h"

#include <algorithm>

#include "trop/lattice.hpp"

using namespace trop;

TEST_CASE("point enumeration on dilated simplices and boxes") {
  auto s11 = Polytope::simplex(1, 1);
  REQUIRE(s11.points() == std::vector<Point>{{0, 0}, {0, 1}, {1, 0}});

  auto s13 = Polytope::simplex(1, 3);
  CHECK(s13.points().size() == 10);

  auto b22 = Polytope::box(2, 2);
  CHECK(b22.points().size() == 9);

  CHECK(std::is_sorted(s13.points().begin(), s13.points().end()));

  // |points| of the dilated simplex is C(d+n+1, n+1)
  for (int n = 1; n <= 3; ++n)
    for (std::int64_t d = 1; d <= 5; ++d) {
      auto p = Polytope::simplex(n, d);
      Int expect = 1, den = 1;
      for (int i = 0; i < n + 1; ++i) {
        expect *= d + n + 1 - i;
        den *= i + 1;
      }
      CHECK(Int(p.points().size()) == expect / den);
    }
}

TEST_CASE("interior points") {
  auto s14 = Polytope::simplex(1, 4);
  CHECK(interior_points(s14) == std::vector<Point>{{1, 1}, {1, 2}, {2, 1}});

  for (int n = 1; n <= 3; ++n) {
    auto p = Polytope::simplex(n, n + 2);
    Point ones(n + 1, 1);
    CHECK(interior_points(p) == std::vector<Point>{ones});
  }

  auto b32 = Polytope::box(3, 2);
  CHECK(interior_points(b32) == std::vector<Point>{{1, 1}, {2, 1}});
}

TEST_CASE("geometric genus matches interior point counts") {
  CHECK(geometric_genus(1, 4) == 3);
  CHECK(geometric_genus(2, 4) == 1);
  CHECK(geometric_genus(2, 5) == 4);
  for (int n = 1; n <= 3; ++n)
    for (std::int64_t d = 1; d <= 8; ++d)
      CHECK(geometric_genus(n, d) == Int(interior_points(Polytope::simplex(n, d)).size()));
}

TEST_CASE("normalized volume of simplices") {
  CHECK(normalized_volume({{0, 0}, {1, 0}, {0, 1}}) == 1);
  CHECK(normalized_volume({{0, 0}, {2, 0}, {0, 1}}) == 2);
  CHECK(normalized_volume({{0, 0}, {1, 0}, {2, 0}}) == 0);
  CHECK_THROWS_AS(normalized_volume({{0, 0}, {1, 0}}), std::invalid_argument);

  // invariance under permutation and translation
  CHECK(normalized_volume({{0, 1}, {2, 0}, {0, 0}}) == 2);
  CHECK(normalized_volume({{5, 5}, {7, 5}, {5, 6}}) == 2);
}

TEST_CASE("descriptor parsing round-trips") {
  auto p = Polytope::parse("simplex:n=2,d=5");
  CHECK(p.ambient_dim() == 3);
  CHECK(p.simplex_degree() == 5);
  CHECK(p.descriptor() == "simplex:n=2,d=5");

  auto b = Polytope::parse("box:3x2");
  CHECK(b.box_a() == 3);
  CHECK(b.box_b() == 2);
  CHECK(b.descriptor() == "box:3x2");

  CHECK_THROWS_AS(Polytope::parse("sphere:1"), std::invalid_argument);
  CHECK_THROWS_AS(Polytope::parse("simplex:n=2"), std::invalid_argument);
}
