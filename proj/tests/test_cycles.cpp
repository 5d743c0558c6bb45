#include "doctest.h"

#include "trop/cycles.hpp"
#include "trop/weight_finding.hpp"

using namespace trop;

namespace {

DualComplex canonical_complex(int n, std::int64_t d) {
  return DualComplex::build(regular_subdivision(Weights::canonical(Polytope::simplex(n, d))));
}

}  // namespace

TEST_CASE("homology ranks") {
  SUBCASE("primitive complex is contractible") {
    auto dc = DualComplex::build(regular_subdivision(Weights::zero(Polytope::simplex(1, 1))));
    CHECK(homology_rank_gf2(dc, 0) == 1);
    CHECK(homology_rank_gf2(dc, 1) == 0);
  }
  SUBCASE("canonical curves: one sphere per interior point") {
    CHECK(homology_rank_gf2(canonical_complex(1, 3), 1) == 1);
    auto dc4 = canonical_complex(1, 4);
    CHECK(homology_rank_gf2(dc4, 1) == 3);
    CHECK(homology_rank_gf2(dc4, 0) == 1);
  }
  SUBCASE("boundary of boundary vanishes") {
    auto dc = canonical_complex(2, 4);
    for (int cid : dc.cells_of_dim(2)) {
      if (!dc.cells()[cid].bounded) continue;
      Chain c{2, {cid}};
      CHECK(boundary(dc, boundary(dc, c)).cells.empty());
    }
  }
}

TEST_CASE("sphere cycles") {
  auto dc = canonical_complex(1, 4);
  SUBCASE("every interior point yields a closed cycle") {
    auto ip = interior_points(dc.polytope());
    REQUIRE(ip.size() == 3);
    for (const auto& i : ip) {
      auto c = sphere_cycle(dc, i);
      CHECK_FALSE(c.cells.empty());
      CHECK(boundary(dc, c).cells.empty());
      // each (n-1)-cell meets an even number of the cycle's n-cells
    }
  }
  SUBCASE("non-interior point rejected") {
    CHECK_THROWS_AS(sphere_cycle(dc, Point{0, 0}), std::invalid_argument);
  }
  SUBCASE("d = n+2: unique cycle around the single interior point") {
    auto dc3 = canonical_complex(1, 3);
    auto c = sphere_cycle(dc3, {1, 1});
    for (int cid : c.cells) {
      const auto& supp = dc3.cells()[cid].support;
      CHECK(std::binary_search(supp.begin(), supp.end(), dc3.polytope().index_of({1, 1})));
    }
    CHECK(boundary(dc3, c).cells.empty());
  }
}

TEST_CASE("enlarged cycles") {
  SUBCASE("d = n+2: the enlarged region is the whole complex") {
    auto dc = canonical_complex(1, 3);
    auto e = enlarged_cycle(dc, {1, 1});
    CHECK(e.class_matches_sphere);
    // every dual vertex is claimed by the single interior point
    CHECK(e.lambda.size() == dc.subdivision().top_cells().size());
    std::set<int> star(e.star_ncells.begin(), e.star_ncells.end());
    for (int cid : dc.cells_of_dim(1)) CHECK(star.count(cid));
  }
  SUBCASE("canonical d=4 curve: nonempty lambda, class preserved") {
    auto dc = canonical_complex(1, 4);
    auto e = enlarged_cycle(dc, {1, 1});
    CHECK_FALSE(e.lambda.empty());
    CHECK(e.class_matches_sphere);
  }
  SUBCASE("restriction failure is an error") {
    auto dc = DualComplex::build(regular_subdivision(Weights::zero(Polytope::simplex(1, 4))));
    CHECK_THROWS_AS(enlarged_cycle(dc, Point{1, 1}), std::invalid_argument);
  }
}

TEST_CASE("cycle class check") {
  SUBCASE("canonical d=4: three independent spanning classes") {
    auto dc = canonical_complex(1, 4);
    auto fam = build_cycle_family(dc);
    auto rep = cycle_class_check(dc, fam);
    CHECK(rep.pass);
    CHECK(rep.homology_rank == 3);
  }
  SUBCASE("duplicated chain breaks independence") {
    auto dc = canonical_complex(1, 4);
    auto fam = build_cycle_family(dc);
    fam.members[1].sphere = fam.members[0].sphere;
    auto rep = cycle_class_check(dc, fam);
    CHECK_FALSE(rep.pass);
    CHECK_FALSE(rep.independent);
  }
  SUBCASE("d = n+2: a single nonzero class") {
    auto dc = canonical_complex(1, 3);
    auto rep = cycle_class_check(dc, build_cycle_family(dc));
    CHECK(rep.pass);
    CHECK(rep.homology_rank == 1);
  }
}

TEST_CASE("coverage") {
  SUBCASE("d = n+2 trivially covered") {
    auto dc = canonical_complex(1, 3);
    auto rep = coverage_check(dc, build_cycle_family(dc), 99);
    CHECK(rep.pass);
  }
  SUBCASE("canonical d=4 curve covered") {
    auto dc = canonical_complex(1, 4);
    auto rep = coverage_check(dc, build_cycle_family(dc), 99);
    CHECK(rep.pass);
    CHECK(rep.points_checked > 1000);
  }
}

TEST_CASE("pairwise intersections") {
  SUBCASE("single cycle: empty matrix") {
    auto dc = canonical_complex(1, 3);
    auto rep = pairwise_intersections(dc, build_cycle_family(dc));
    CHECK(rep.matrix.size() == 1);
    CHECK(rep.at_most_single_contact);
  }
  SUBCASE("canonical d=4 simplex: overlaps allowed and present") {
    auto dc = canonical_complex(1, 4);
    auto rep = pairwise_intersections(dc, build_cycle_family(dc));
    bool any_overlap = false;
    for (size_t a = 0; a < rep.matrix.size(); ++a)
      for (size_t b = a + 1; b < rep.matrix.size(); ++b)
        if (rep.matrix[a][b] == ContactKind::Overlap) any_overlap = true;
    CHECK(any_overlap);
  }
  SUBCASE("genus-2 box target: single-vertex contacts only") {
    auto box = Polytope::box(3, 2);
    auto search = find_weights(box, genus_target(box));
    REQUIRE(search.feasible());
    auto dc = DualComplex::build(regular_subdivision(*search.weights));
    auto fam = build_cycle_family(dc);
    REQUIRE(fam.members.size() == 2);
    auto rep = pairwise_intersections(dc, fam);
    CHECK(rep.at_most_single_contact);
    CHECK(rep.matrix[0][1] == ContactKind::SingleVertex);
  }
}
