#include "doctest.h"

#include <set>

#include "trop/rng.hpp"
#include "trop/subdivision.hpp"

using namespace trop;

namespace {

Int total_volume(const Subdivision& s) {
  Int total = 0;
  for (const auto& c : s.top_cells()) total += cell_normalized_volume(s, c);
  return total;
}

}  // namespace

TEST_CASE("flat lift gives the trivial subdivision") {
  auto v = Weights::zero(Polytope::simplex(1, 2));
  auto s = regular_subdivision(v);
  REQUIRE(s.top_cells().size() == 1);
  CHECK(s.top_cells()[0].support.size() == 6);
  CHECK_FALSE(is_unimodular(s));
  CHECK(total_volume(s) == 4);
}

TEST_CASE("canonical weights on d=3 curve: 9 unimodular triangles") {
  auto v = Weights::canonical(Polytope::simplex(1, 3));
  auto s = regular_subdivision(v);
  CHECK(s.top_cells().size() == 9);
  CHECK(is_unimodular(s));
  CHECK(total_volume(s) == 9);

  auto oracle = brute_force_subdivision(v);
  CHECK(s.same_cells(oracle));
}

TEST_CASE("strictly convex weights on a segment give unit intervals") {
  // n = 0 base case: v(j) = 2 j^2 on [0, d]
  auto P = Polytope::simplex(0, 5);
  RatVec vals;
  for (const auto& p : P.points()) vals.emplace_back(Int(2 * p[0] * p[0]));
  auto s = regular_subdivision(Weights(P, std::move(vals)));
  REQUIRE(s.top_cells().size() == 5);
  for (const auto& c : s.top_cells()) CHECK(c.support.size() == 2);
}

TEST_CASE("canonical d=4 surface: tetrahedra and octahedra") {
  // The canonical weight is the A3 form I + J in three variables; its
  // Delaunay cells are 24 unit tetrahedra plus 10 octahedra, total volume
  // 4^3. Cross-checked against Qhull on the lifted points.
  auto v = Weights::canonical(Polytope::simplex(2, 4));
  auto s = regular_subdivision(v);
  CHECK(s.top_cells().size() == 34);
  CHECK_FALSE(is_unimodular(s));
  int tets = 0, octs = 0;
  for (const auto& c : s.top_cells()) {
    if (c.support.size() == 4) ++tets;
    if (c.support.size() == 6) ++octs;
  }
  CHECK(tets == 24);
  CHECK(octs == 10);
  CHECK(total_volume(s) == 64);

  // The subset-enumeration oracle by definition reports only the strictly
  // dominating simplices, which here are exactly the 24 tetrahedra.
  auto oracle = brute_force_subdivision(v);
  CHECK(oracle.top_cells().size() == 24);
  for (const auto& c : oracle.top_cells()) {
    bool found = false;
    for (const auto& rc : s.top_cells())
      if (rc.support == c.support) found = true;
    CHECK(found);
  }
}

TEST_CASE("oracle equivalence on random generic integer weights") {
  int degenerate = 0;
  for (int n = 1; n <= 2; ++n) {
    for (std::int64_t d = (n == 1 ? 2 : 4); d <= 4; ++d) {
      auto P = Polytope::simplex(n, d);
      int done = 0;
      std::uint64_t draw = 0;
      while (done < 5) {  // smoke quota per polytope; acceptance runs 20
        auto v = Weights::random_integer(P, 1000 + 97 * draw++, 1000);
        auto s = regular_subdivision(v);
        bool generic = true;
        for (const auto& c : s.top_cells())
          if (static_cast<int>(c.support.size()) != P.ambient_dim() + 1) generic = false;
        if (!generic) {
          ++degenerate;
          continue;
        }
        auto oracle = brute_force_subdivision(v);
        CHECK(s.same_cells(oracle));
        CHECK(total_volume(s) == P.normalized_volume());
        ++done;
      }
    }
  }
  CHECK(degenerate < 20);
}

TEST_CASE("volume conservation holds also on degenerate weights") {
  // Tie two cells together on purpose: all weights equal except a corner.
  auto P = Polytope::simplex(1, 3);
  RatVec vals(P.points().size(), Rat(0));
  vals[P.index_of({0, 0})] = -1;
  auto s = regular_subdivision(Weights(P, std::move(vals)));
  CHECK(total_volume(s) == 9);
}

TEST_CASE("edge directions: canonical passes, flat fails") {
  auto good = check_edge_directions(regular_subdivision(Weights::canonical(Polytope::simplex(1, 3))));
  CHECK(good.pass);
  CHECK(good.edge_count > 0);

  auto bad = check_edge_directions(regular_subdivision(Weights::zero(Polytope::simplex(1, 2))));
  CHECK_FALSE(bad.pass);
  bool found = false;
  for (const auto& viol : bad.violations)
    if (viol.a == Point{0, 0} && viol.b == Point{2, 0}) found = true;
  CHECK(found);

  auto good2 = check_edge_directions(regular_subdivision(Weights::canonical(Polytope::simplex(2, 4))));
  CHECK(good2.pass);
}

TEST_CASE("translate restriction") {
  SUBCASE("d = n+2 is the whole polytope") {
    auto s = regular_subdivision(Weights::canonical(Polytope::simplex(1, 3)));
    CHECK(check_translate_restriction(s, {1, 1}));
  }
  SUBCASE("canonical d=4 passes at every interior point") {
    auto s = regular_subdivision(Weights::canonical(Polytope::simplex(1, 4)));
    for (const auto& i : interior_points(s.polytope())) CHECK(check_translate_restriction(s, i));
  }
  SUBCASE("flat subdivision fails") {
    auto s = regular_subdivision(Weights::zero(Polytope::simplex(1, 4)));
    CHECK_FALSE(check_translate_restriction(s, {1, 1}));
  }
  SUBCASE("non-interior point is rejected") {
    auto s = regular_subdivision(Weights::canonical(Polytope::simplex(1, 3)));
    CHECK_THROWS_AS(check_translate_restriction(s, {0, 0}), std::invalid_argument);
  }
}

TEST_CASE("face lattice is face-to-face") {
  for (auto v : {Weights::canonical(Polytope::simplex(1, 4)), Weights::zero(Polytope::simplex(1, 3))}) {
    auto s = regular_subdivision(v);
    for (size_t a = 0; a < s.top_cells().size(); ++a)
      for (size_t b = a + 1; b < s.top_cells().size(); ++b) {
        std::vector<int> common;
        std::set_intersection(s.top_cells()[a].support.begin(), s.top_cells()[a].support.end(),
                              s.top_cells()[b].support.begin(), s.top_cells()[b].support.end(),
                              std::back_inserter(common));
        if (common.empty()) continue;
        CHECK(s.face_id(common) >= 0);
      }
  }
}

TEST_CASE("result does not depend on the exploration start") {
  // Construction is a dual walk; restarting from any weight tilt must give
  // identical cells. Exercise via distinct but equivalent weight scalings.
  auto P = Polytope::simplex(1, 4);
  auto v1 = Weights::canonical(P);
  RatVec scaled;
  for (const auto& r : v1.values()) scaled.push_back(r * 7);
  auto s1 = regular_subdivision(v1);
  auto s2 = regular_subdivision(Weights(P, std::move(scaled)));
  CHECK(s1.same_cells(s2));
}

TEST_CASE("brute force guards") {
  CHECK_THROWS_AS(brute_force_subdivision(Weights::canonical(Polytope::simplex(2, 5))),
                  std::invalid_argument);  // 56 points > 40
}

TEST_CASE("zero weights on the unit simplex: one cell via brute force") {
  auto v = Weights::zero(Polytope::simplex(1, 1));
  auto s = brute_force_subdivision(v);
  REQUIRE(s.top_cells().size() == 1);
  CHECK(s.top_cells()[0].support == std::vector<int>{0, 1, 2});
  CHECK(s.same_cells(regular_subdivision(v)));
}
