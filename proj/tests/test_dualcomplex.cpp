#include "doctest.h"

#include <set>

#include "trop/dualcomplex.hpp"
#include "trop/rng.hpp"

using namespace trop;

namespace {

DualComplex canonical_complex(int n, std::int64_t d) {
  return DualComplex::build(regular_subdivision(Weights::canonical(Polytope::simplex(n, d))));
}

}  // namespace

TEST_CASE("primitive complex of 1 + z1 + z2: one vertex, three rays") {
  auto dc = DualComplex::build(regular_subdivision(Weights::zero(Polytope::simplex(1, 1))));
  REQUIRE(dc.cells_of_dim(0).size() == 1);
  REQUIRE(dc.cells_of_dim(1).size() == 3);
  CHECK(dc.vertex_positions()[0] == RatVec{Rat(0), Rat(0)});

  std::set<Point> ray_dirs;
  for (int cid : dc.cells_of_dim(1)) {
    const auto& cell = dc.cells()[cid];
    CHECK_FALSE(cell.bounded);
    REQUIRE(cell.rays.size() == 1);
    ray_dirs.insert(cell.rays[0]);
    CHECK(cell.weight == 1);
  }
  CHECK(ray_dirs == std::set<Point>{{-1, 0}, {0, -1}, {1, 1}});
}

TEST_CASE("one dual vertex per top cell") {
  auto dc3 = canonical_complex(1, 3);
  CHECK(dc3.cells_of_dim(0).size() == 9);
  auto dc4 = canonical_complex(2, 4);
  CHECK(dc4.cells_of_dim(0).size() == 34);  // 24 tetrahedra + 10 octahedra
}

TEST_CASE("dual vertex positions solve the tie equations") {
  SUBCASE("unit simplex, explicit weights") {
    auto P = Polytope::simplex(1, 1);
    auto vz = Weights::zero(P);
    CHECK(dual_vertex_position(vz, {0, 1, 2}) == RatVec{Rat(0), Rat(0)});
    RatVec w{Rat(0), Rat(2), Rat(2)};  // points (0,0),(0,1),(1,0)
    CHECK(dual_vertex_position(Weights(P, w), {0, 1, 2}) == RatVec{Rat(2), Rat(2)});
  }
  SUBCASE("canonical d=3: every vertex has defect zero and matching argmax") {
    auto dc = canonical_complex(1, 3);
    const auto& s = dc.subdivision();
    for (size_t t = 0; t < s.top_cells().size(); ++t) {
      auto pos = dual_vertex_position(s.weights(), s.top_cells()[t].support);
      CHECK(pos == s.dual_positions()[t]);
      auto lr = legendre(s.weights(), pos);
      REQUIRE(lr.defect.has_value());
      CHECK(*lr.defect == 0);
      CHECK(lr.argmax == s.top_cells()[t].support);
    }
  }
  SUBCASE("non-vertex support is rejected") {
    auto P = Polytope::simplex(1, 2);
    CHECK_THROWS_AS(dual_vertex_position(Weights::canonical(P), {0, 1}), std::invalid_argument);
  }
}

TEST_CASE("balancing") {
  SUBCASE("telescoping triangle") {
    std::vector<OrientedCovector> tri = {
        {{0, 0}, {1, 0}}, {{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}};
    CHECK(covectors_balance(tri));
  }
  SUBCASE("flipped covector fails") {
    std::vector<OrientedCovector> bad = {
        {{0, 0}, {1, 0}}, {{0, 1}, {1, 0}}, {{0, 1}, {0, 0}}};
    CHECK_FALSE(covectors_balance(bad));
  }
  SUBCASE("canonical curves balance at every vertex") {
    for (std::int64_t d = 3; d <= 5; ++d) {
      auto rep = check_balanced(canonical_complex(1, d));
      CHECK(rep.pass);
      CHECK(rep.checked > 0);
    }
  }
  SUBCASE("canonical surface balances, octahedra included") {
    auto rep = check_balanced(canonical_complex(2, 4));
    CHECK(rep.pass);
    CHECK(rep.checked > 0);
  }
  SUBCASE("random weights balance too") {
    auto P = Polytope::simplex(2, 4);
    for (std::uint64_t seed : {3u, 14u}) {
      auto rep = check_balanced(DualComplex::build(
          regular_subdivision(Weights::random_integer(P, seed, 200))));
      CHECK(rep.pass);
    }
  }
}

TEST_CASE("primitive piece count") {
  SUBCASE("unit simplex: one piece") {
    auto dc = DualComplex::build(regular_subdivision(Weights::zero(Polytope::simplex(1, 1))));
    CHECK(primitive_piece_count(dc) == 1);
  }
  SUBCASE("canonical d=3 curve: nine pieces") {
    CHECK(primitive_piece_count(canonical_complex(1, 3)) == 9);
  }
  SUBCASE("non-maximal complex is rejected") {
    auto dc = DualComplex::build(regular_subdivision(Weights::zero(Polytope::simplex(1, 2))));
    CHECK_THROWS_AS(primitive_piece_count(dc), std::invalid_argument);
    CHECK_THROWS_AS(primitive_piece_count(canonical_complex(2, 4)), std::invalid_argument);
  }
}

TEST_CASE("duality invariants") {
  auto dc = canonical_complex(1, 4);
  const int N = dc.polytope().ambient_dim();
  SUBCASE("dimension pairing and incidence") {
    for (const auto& cell : dc.cells()) {
      CHECK(cell.dim + cell.sub_dim == N);
      CHECK_FALSE(cell.vertices.empty());
    }
  }
  SUBCASE("edge differences obey the key-lemma directions") {
    auto edge_rep = check_edge_directions(dc.subdivision());
    CHECK(edge_rep.pass);
  }
  SUBCASE("weights are all 1 on a maximal complex") {
    for (int cid : dc.cells_of_dim(dc.n())) CHECK(dc.cells()[cid].weight == 1);
  }
}

TEST_CASE("boundedness: interior endpoint forces bounded; converse is false") {
  // The interior=>bounded direction holds structurally. The converse
  // claimed in the source material fails: e.g. the edge (1,0)-(0,1) of the
  // canonical d=3 subdivision has both endpoints on the boundary but a
  // bounded dual segment from (2,2) to (4,4).
  auto dc = canonical_complex(1, 3);
  auto rep = boundedness_report(dc);
  CHECK(rep.checked > 0);
  CHECK(rep.interior_but_unbounded.empty());

  const auto& P = dc.polytope();
  std::vector<int> counterexample = {P.index_of({0, 1}), P.index_of({1, 0})};
  std::sort(counterexample.begin(), counterexample.end());
  bool found = false;
  for (const auto& supp : rep.boundary_but_bounded)
    if (supp == counterexample) found = true;
  CHECK(found);

  const int cid = dc.cell_id(counterexample);
  REQUIRE(cid >= 0);
  CHECK(dc.cells()[cid].bounded);
  // its dual segment runs from (2,2) to (4,4)
  std::set<RatVec> ends;
  for (int v : dc.cells()[cid].vertices) ends.insert(dc.vertex_positions()[v]);
  CHECK(ends == std::set<RatVec>{{Rat(2), Rat(2)}, {Rat(4), Rat(4)}});

  for (int n = 1; n <= 2; ++n) {
    auto r = boundedness_report(canonical_complex(n, 4));
    CHECK(r.interior_but_unbounded.empty());
  }
}
