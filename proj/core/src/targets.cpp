#include <algorithm>
#include <set>
#include <stdexcept>

#include "trop/lp.hpp"
#include "trop/subdivision.hpp"
#include "trop/weight_finding.hpp"

namespace trop {

namespace {

std::vector<int> cell_of(const Polytope& P, std::initializer_list<Point> pts) {
  std::vector<int> cell;
  for (const auto& p : pts) {
    const int idx = P.index_of(p);
    if (idx < 0) throw std::logic_error("target cell point outside polytope");
    cell.push_back(idx);
  }
  std::sort(cell.begin(), cell.end());
  return cell;
}

}  // namespace

WeightSearch find_weights(const Polytope& P, const std::vector<std::vector<int>>& target_cells) {
  const int N = P.ambient_dim();
  const auto& pts = P.points();
  const int num_points = static_cast<int>(pts.size());

  // Validate the target: full-dimensional lattice simplices inside P whose
  // volumes add up to the polytope volume.
  if (target_cells.empty()) throw std::invalid_argument("find_weights: empty target");
  Int vol = 0;
  std::set<std::vector<int>> dedup;
  for (const auto& cell : target_cells) {
    if (static_cast<int>(cell.size()) != N + 1)
      throw std::invalid_argument("find_weights: target cell is not an (n+2)-point simplex");
    std::vector<Point> vs;
    for (int idx : cell) {
      if (idx < 0 || idx >= num_points) throw std::invalid_argument("find_weights: bad point index");
      vs.push_back(pts[idx]);
    }
    const Int nv = normalized_volume(vs);
    if (nv == 0) throw std::invalid_argument("find_weights: degenerate target cell");
    std::vector<int> sorted = cell;
    std::sort(sorted.begin(), sorted.end());
    if (!dedup.insert(sorted).second) throw std::invalid_argument("find_weights: duplicate target cell");
    vol += nv;
  }
  if (vol != P.normalized_volume())
    throw std::invalid_argument("find_weights: target volumes do not tile the polytope");

  // Variables: v_p for each lattice point, then (w_sigma, c_sigma) per cell.
  const int num_cells = static_cast<int>(target_cells.size());
  const int num_vars = num_points + num_cells * (N + 1);
  auto wvar = [&](int cell, int k) { return num_points + cell * (N + 1) + k; };
  auto cvar = [&](int cell) { return num_points + cell * (N + 1) + N; };

  std::vector<LpConstraint> cons;
  for (int ci = 0; ci < num_cells; ++ci) {
    std::set<int> members(target_cells[ci].begin(), target_cells[ci].end());
    for (int p = 0; p < num_points; ++p) {
      LpConstraint c;
      c.coeffs.assign(num_vars, Rat(0));
      // <w, p> - c - v_p  (= 0 on the cell, <= -1 off it)
      for (int k = 0; k < N; ++k) c.coeffs[wvar(ci, k)] = Int(pts[p][k]);
      c.coeffs[cvar(ci)] = -1;
      c.coeffs[p] = -1;
      if (members.count(p)) {
        c.equality = true;
        c.rhs = 0;
      } else {
        // v_p - <w,p> + c >= 1
        for (auto& coef : c.coeffs) coef = -coef;
        c.equality = false;
        c.rhs = 1;
      }
      cons.push_back(std::move(c));
    }
  }

  auto lp = lp_feasible(cons, num_vars);
  WeightSearch out;
  if (lp.solution) {
    RatVec values(lp.solution->begin(), lp.solution->begin() + num_points);
    out.weights = Weights(P, std::move(values));
  } else {
    out.infeasibility_certificate = std::move(lp.farkas);
  }
  return out;
}

std::vector<std::vector<int>> genus_target(const Polytope& box_poly) {
  if (box_poly.kind() != PolytopeKind::Box || box_poly.box_b() != 2)
    throw std::invalid_argument("genus_target: expected box(g+1, 2)");
  const std::int64_t cols = box_poly.box_a();
  std::vector<std::vector<int>> cells;
  // Per column [k,k+1] x [0,2]: one long diagonal (k,0)-(k+1,2), so that
  // each triangle touches the middle line y=1 in exactly one vertex.
  for (std::int64_t k = 0; k < cols; ++k) {
    cells.push_back(cell_of(box_poly, {{k, 1}, {k, 0}, {k + 1, 2}}));
    cells.push_back(cell_of(box_poly, {{k, 0}, {k + 1, 0}, {k + 1, 1}}));
    cells.push_back(cell_of(box_poly, {{k, 0}, {k + 1, 1}, {k + 1, 2}}));
    cells.push_back(cell_of(box_poly, {{k, 1}, {k + 1, 2}, {k, 2}}));
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

std::vector<std::vector<int>> spiral_target(const Polytope& box33) {
  if (box33.kind() != PolytopeKind::Box || box33.box_a() != 3 || box33.box_b() != 3)
    throw std::invalid_argument("spiral_target: expected box(3,3)");
  std::vector<std::vector<int>> cells;
  // Four spiral arms: a wedge of four triangles hanging off the long edge
  // (0,0)-(1,2), rotated by (x,y) -> (3-y, x), plus two center triangles.
  // The arms wind around the center in the same rotational sense, which is
  // what obstructs any convex lift.
  auto rot = [](Point p) { return Point{3 - p[1], p[0]}; };
  std::vector<std::vector<Point>> base = {
      {{0, 0}, {0, 1}, {1, 2}},
      {{0, 1}, {0, 2}, {1, 2}},
      {{0, 2}, {0, 3}, {1, 2}},
      {{0, 0}, {1, 1}, {1, 2}},
  };
  for (auto tri : base) {
    for (int r = 0; r < 4; ++r) {
      std::vector<int> cell;
      for (const auto& p : tri) cell.push_back(box33.index_of(p));
      std::sort(cell.begin(), cell.end());
      cells.push_back(std::move(cell));
      for (auto& p : tri) p = rot(p);
    }
  }
  std::vector<Point> inner1 = {{1, 1}, {2, 1}, {1, 2}};
  std::vector<Point> inner2 = {{2, 1}, {2, 2}, {1, 2}};
  for (const auto& tri : {inner1, inner2}) {
    std::vector<int> cell;
    for (const auto& p : tri) cell.push_back(box33.index_of(p));
    std::sort(cell.begin(), cell.end());
    cells.push_back(std::move(cell));
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

}  // namespace trop
