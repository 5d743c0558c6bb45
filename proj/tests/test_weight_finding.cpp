#include "doctest.h"

#include "trop/subdivision.hpp"
#include "trop/weight_finding.hpp"

using namespace trop;

namespace {

std::vector<std::vector<int>> tops_of(const Subdivision& s) {
  std::vector<std::vector<int>> out;
  for (const auto& c : s.top_cells()) out.push_back(c.support);
  return out;
}

}  // namespace

TEST_CASE("round-trip: weights recovered for a known regular target") {
  auto v = Weights::canonical(Polytope::simplex(1, 3));
  auto s = regular_subdivision(v);
  auto search = find_weights(s.polytope(), tops_of(s));
  REQUIRE(search.feasible());
  auto s2 = regular_subdivision(*search.weights);
  CHECK(s.same_cells(s2));
}

TEST_CASE("genus targets are LP-realizable with the required star separation") {
  for (std::int64_t g = 1; g <= 3; ++g) {
    auto box = Polytope::box(g + 1, 2);
    auto target = genus_target(box);
    CHECK(target.size() == 4 * static_cast<size_t>(g + 1));
    CHECK(Int(interior_points(box).size()) == g);

    // every triangle has at most one interior vertex
    for (const auto& cell : target) {
      int count = 0;
      for (int idx : cell)
        if (box.strictly_contains(box.points()[idx])) ++count;
      CHECK(count <= 1);
    }

    auto search = find_weights(box, target);
    REQUIRE(search.feasible());
    auto s = regular_subdivision(*search.weights);
    auto got = tops_of(s);
    CHECK(got == target);
    CHECK(is_unimodular(s));
  }
}

TEST_CASE("pinwheel triangulation is non-regular: exact Farkas certificate") {
  auto box = Polytope::box(3, 3);
  auto target = spiral_target(box);
  CHECK(target.size() == 18);
  auto search = find_weights(box, target);
  CHECK_FALSE(search.feasible());
  REQUIRE(search.infeasibility_certificate.has_value());
  // Certificate already verified exactly inside the solver; sanity check
  // that it is not trivial.
  bool nonzero = false;
  for (const auto& y : *search.infeasibility_certificate)
    if (y != 0) nonzero = true;
  CHECK(nonzero);
}

TEST_CASE("malformed targets are rejected") {
  auto box = Polytope::box(2, 2);
  auto target = genus_target(box);
  SUBCASE("gap") {
    auto broken = target;
    broken.pop_back();
    CHECK_THROWS_AS(find_weights(box, broken), std::invalid_argument);
  }
  SUBCASE("duplicate cell") {
    auto broken = target;
    broken.push_back(broken.front());
    CHECK_THROWS_AS(find_weights(box, broken), std::invalid_argument);
  }
  SUBCASE("degenerate cell") {
    auto broken = target;
    broken[0] = {0, 1, 2};  // collinear column points (0,0),(0,1),(0,2)
    CHECK_THROWS_AS(find_weights(box, broken), std::invalid_argument);
  }
}
