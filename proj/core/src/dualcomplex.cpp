#include "trop/dualcomplex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "trop/linalg.hpp"

namespace trop {

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

}  // namespace

DualComplex DualComplex::build(const Subdivision& s) {
  DualComplex dc;
  dc.sub_ = s;
  const Polytope& P = s.polytope();
  const int N = P.ambient_dim();
  const auto& pts = P.points();

  for (const auto& face : s.faces()) {
    if (face.dim < 1) continue;  // dim-0 subdivision faces are dual to the open regions
    DualCell cell;
    cell.support = face.support;
    cell.sub_dim = face.dim;
    cell.dim = N - face.dim;
    cell.vertices = s.tops_of_face(s.face_id(face.support));
    for (const auto& f : P.facets()) {
      bool on_facet = true;
      for (int pi : cell.support) {
        std::int64_t v = 0;
        for (int k = 0; k < N; ++k) v += f.normal[k] * pts[pi][k];
        if (v != f.offset) {
          on_facet = false;
          break;
        }
      }
      if (on_facet) cell.rays.push_back(f.normal);
    }
    cell.bounded = cell.rays.empty();
    if (face.dim == 1) {
      const auto [a, b] = s.edge_endpoints(s.face_id(face.support));
      std::int64_t g = 0;
      for (size_t k = 0; k < a.size(); ++k) g = gcd64(g, b[k] - a[k]);
      cell.weight = g;
    }
    dc.cells_.push_back(std::move(cell));
  }

  std::sort(dc.cells_.begin(), dc.cells_.end(), [](const DualCell& a, const DualCell& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.support < b.support;
  });
  dc.by_dim_.assign(N, {});
  for (size_t i = 0; i < dc.cells_.size(); ++i) {
    dc.index_[dc.cells_[i].support] = static_cast<int>(i);
    dc.by_dim_[dc.cells_[i].dim].push_back(static_cast<int>(i));
  }

  // Facets: one dimension down, strictly larger subdivision support.
  dc.facets_.assign(dc.cells_.size(), {});
  for (size_t i = 0; i < dc.cells_.size(); ++i) {
    const auto& c = dc.cells_[i];
    if (c.dim == 0) continue;
    for (int j : dc.by_dim_[c.dim - 1]) {
      const auto& f = dc.cells_[j].support;
      if (f.size() <= c.support.size()) continue;
      if (std::includes(f.begin(), f.end(), c.support.begin(), c.support.end()))
        dc.facets_[i].push_back(j);
    }
  }

  dc.vertex_pos_f_.reserve(s.dual_positions().size());
  for (const auto& pos : s.dual_positions()) {
    std::vector<double> f;
    f.reserve(pos.size());
    for (const auto& r : pos) f.push_back(rat_to_double(r));
    dc.vertex_pos_f_.push_back(std::move(f));
  }
  return dc;
}

int DualComplex::cell_id(const std::vector<int>& support) const {
  auto it = index_.find(support);
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> DualComplex::star_of_vertex(int vertex_id) const {
  const auto& top = sub_.top_cells()[vertex_id].support;
  std::vector<int> out;
  for (size_t i = 0; i < cells_.size(); ++i) {
    const auto& supp = cells_[i].support;
    if (std::includes(top.begin(), top.end(), supp.begin(), supp.end()))
      out.push_back(static_cast<int>(i));
  }
  return out;
}

RatVec dual_vertex_position(const Weights& v, const std::vector<int>& support) {
  const Polytope& P = v.polytope();
  const int N = P.ambient_dim();
  const auto& pts = P.points();
  if (support.size() < 2) throw std::invalid_argument("dual_vertex_position: support too small");
  RatMat m;
  RatVec b;
  const int p0 = support[0];
  for (size_t i = 1; i < support.size(); ++i) {
    RatVec row(N);
    for (int k = 0; k < N; ++k) row[k] = Int(pts[support[i]][k]) - Int(pts[p0][k]);
    m.push_back(std::move(row));
    b.push_back(v[support[i]] - v[p0]);
  }
  if (rat_rank(m) != N)
    throw std::invalid_argument("dual_vertex_position: support is not dual to a vertex");
  auto sol = rat_solve(std::move(m), std::move(b));
  if (!sol) throw std::logic_error("dual_vertex_position: inconsistent tie equations");
  return *sol;
}

bool covectors_balance(const std::vector<OrientedCovector>& covectors) {
  if (covectors.empty()) return true;
  std::vector<std::int64_t> sum(covectors[0].tail.size(), 0);
  for (const auto& c : covectors)
    for (size_t k = 0; k < sum.size(); ++k) sum[k] += c.head[k] - c.tail[k];
  for (auto v : sum)
    if (v != 0) return false;
  return true;
}

BalanceReport check_balanced(const DualComplex& dc) {
  BalanceReport rep;
  const Subdivision& s = dc.subdivision();
  const int N = dc.polytope().ambient_dim();
  if (N < 2) return rep;  // no (n-1)-cells for curves of dimension 0

  for (int cid : dc.cells_of_dim(dc.n() - 1)) {
    const DualCell& g = dc.cells()[cid];
    ++rep.checked;
    bool ok = true;

    // Boundary edges of the dual polygon.
    std::vector<int> edge_faces;
    for (int fid : s.faces_of_dim(1)) {
      const auto& es = s.faces()[fid].support;
      if (std::includes(g.support.begin(), g.support.end(), es.begin(), es.end()))
        edge_faces.push_back(fid);
    }

    // Walk the polygon boundary: each polygon vertex meets exactly two
    // boundary edges.
    std::map<Point, std::vector<int>> at_vertex;
    for (int fid : edge_faces) {
      auto [a, b] = s.edge_endpoints(fid);
      at_vertex[a].push_back(fid);
      at_vertex[b].push_back(fid);
    }
    for (const auto& [p, inc] : at_vertex)
      if (inc.size() != 2) ok = false;

    std::vector<OrientedCovector> covectors;
    if (ok && !edge_faces.empty()) {
      const Point start = at_vertex.begin()->first;
      Point cur = start;
      int prev_edge = -1;
      do {
        const auto& inc = at_vertex[cur];
        const int eid = (inc[0] != prev_edge) ? inc[0] : inc[1];
        auto [a, b] = s.edge_endpoints(eid);
        const Point next = (a == cur) ? b : a;
        covectors.push_back({cur, next});
        cur = next;
        prev_edge = eid;
      } while (cur != start && covectors.size() <= edge_faces.size());
      if (covectors.size() != edge_faces.size()) ok = false;
    }

    // Covector conditions on each adjacent n-cell.
    if (ok) {
      for (int fid : edge_faces) {
        const int ncell = dc.cell_id(s.faces()[fid].support);
        const DualCell& f = dc.cells()[ncell];
        auto [a, b] = s.edge_endpoints(fid);
        Point diff(a.size());
        std::int64_t gg = 0;
        for (size_t k = 0; k < a.size(); ++k) {
          diff[k] = b[k] - a[k];
          gg = gcd64(gg, diff[k]);
        }
        if (gg != f.weight) ok = false;  // c_F / w(F) must be primitive
        // Kernel parallel to F: the covector annihilates differences of
        // incident vertex positions and every recession ray.
        const auto& vp = dc.vertex_positions();
        for (size_t vi = 1; vi < f.vertices.size() && ok; ++vi) {
          Rat dot = 0;
          for (size_t k = 0; k < diff.size(); ++k)
            dot += (vp[f.vertices[vi]][k] - vp[f.vertices[0]][k]) * diff[k];
          if (dot != 0) ok = false;
        }
        for (const auto& ray : f.rays) {
          std::int64_t dot = 0;
          for (size_t k = 0; k < diff.size(); ++k) dot += ray[k] * diff[k];
          if (dot != 0) ok = false;
        }
      }
    }

    if (ok) ok = covectors_balance(covectors);
    if (!ok) {
      rep.pass = false;
      rep.failing.push_back(g.support);
    }
  }
  return rep;
}

Int primitive_piece_count(const DualComplex& dc) {
  const Subdivision& s = dc.subdivision();
  if (!is_unimodular(s))
    throw std::invalid_argument("primitive_piece_count: complex is not maximal");
  const auto& pts = dc.polytope().points();
  for (const auto& top : s.top_cells()) {
    std::vector<Point> vs;
    for (int i : top.support) vs.push_back(pts[i]);
    if (normalized_volume(vs) != 1)
      throw std::logic_error("primitive_piece_count: non-primitive dual vertex");
  }
  const Int count = Int(s.top_cells().size());
  if (count != dc.polytope().normalized_volume())
    throw std::logic_error("primitive_piece_count: count mismatch against (n+1)! vol");
  return count;
}

BoundednessReport boundedness_report(const DualComplex& dc) {
  BoundednessReport rep;
  const Polytope& P = dc.polytope();
  for (int cid : dc.cells_of_dim(dc.n())) {
    const DualCell& f = dc.cells()[cid];
    ++rep.checked;
    const auto [a, b] = dc.subdivision().edge_endpoints(
        dc.subdivision().face_id(f.support));
    const bool any_interior = P.strictly_contains(a) || P.strictly_contains(b);
    if (any_interior && !f.bounded) rep.interior_but_unbounded.push_back(f.support);
    if (!any_interior && f.bounded) rep.boundary_but_bounded.push_back(f.support);
  }
  return rep;
}

}  // namespace trop
