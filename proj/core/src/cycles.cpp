#include "trop/cycles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "trop/gf2.hpp"
#include "trop/rng.hpp"

namespace trop {

namespace {

// Local indexing of the bounded cells of one degree.
struct BoundedIndex {
  std::vector<int> cells;        // dual-cell ids, ascending
  std::map<int, int> local;      // id -> local column

  explicit BoundedIndex(const DualComplex& dc, int degree) {
    for (int cid : dc.cells_of_dim(degree))
      if (dc.cells()[cid].bounded) {
        local[cid] = static_cast<int>(cells.size());
        cells.push_back(cid);
      }
  }
};

Gf2Matrix boundary_matrix(const DualComplex& dc, const BoundedIndex& rows, const BoundedIndex& cols) {
  Gf2Matrix m(static_cast<int>(rows.cells.size()), static_cast<int>(cols.cells.size()));
  for (size_t c = 0; c < cols.cells.size(); ++c)
    for (int f : dc.cell_facets()[cols.cells[c]]) {
      auto it = rows.local.find(f);
      if (it != rows.local.end()) m.set(it->second, static_cast<int>(c));
    }
  return m;
}

int interior_index_of(const DualComplex& dc, const Point& i) {
  const Polytope& P = dc.polytope();
  const int idx = P.index_of(i);
  for (int k : P.interior_indices())
    if (k == idx) return idx;
  throw std::invalid_argument("point is not an interior lattice point");
}

}  // namespace

Chain boundary(const DualComplex& dc, const Chain& c) {
  std::set<int> acc;
  for (int cid : c.cells)
    for (int f : dc.cell_facets()[cid]) {
      if (!dc.cells()[f].bounded) continue;
      auto [it, inserted] = acc.insert(f);
      if (!inserted) acc.erase(it);
    }
  Chain out;
  out.degree = c.degree - 1;
  out.cells.assign(acc.begin(), acc.end());
  return out;
}

Chain sphere_cycle(const DualComplex& dc, const Point& i) {
  const int idx = interior_index_of(dc, i);
  Chain out;
  out.degree = dc.n();
  for (int cid : dc.cells_of_dim(dc.n())) {
    const auto& supp = dc.cells()[cid].support;
    if (std::binary_search(supp.begin(), supp.end(), idx)) out.cells.push_back(cid);
  }
  return out;
}

int homology_rank_gf2(const DualComplex& dc, int k) {
  const int n = dc.n();
  if (k < 0 || k > n) return 0;
  BoundedIndex ck(dc, k);
  const int dim_ck = static_cast<int>(ck.cells.size());
  int rank_dk = 0;
  if (k >= 1) {
    BoundedIndex rows(dc, k - 1);
    rank_dk = boundary_matrix(dc, rows, ck).rank();
  }
  int rank_dk1 = 0;
  if (k + 1 <= n) {
    BoundedIndex cols(dc, k + 1);
    rank_dk1 = boundary_matrix(dc, ck, cols).rank();
  }
  return dim_ck - rank_dk - rank_dk1;
}

EnlargedCycle enlarged_cycle(const DualComplex& dc, const Point& i) {
  const Polytope& P = dc.polytope();
  const Subdivision& s = dc.subdivision();
  const int idx = interior_index_of(dc, i);

  EnlargedCycle out;
  out.center = i;
  out.center_index = idx;
  out.sphere = sphere_cycle(dc, i);

  std::set<int> interior(P.interior_indices().begin(), P.interior_indices().end());

  if (P.kind() == PolytopeKind::DilatedSimplex) {
    if (!check_translate_restriction(s, i))
      throw std::invalid_argument("enlarged_cycle: translate restriction fails at this point");
    const int N = P.ambient_dim();
    std::int64_t i0 = 0;
    for (auto c : i) i0 += c;
    auto in_translate = [&](const Point& p) {
      std::int64_t sum = 0;
      for (int k = 0; k < N; ++k) {
        if (p[k] < i[k] - 1) return false;
        sum += p[k];
      }
      return sum <= i0 + 1;
    };
    for (size_t t = 0; t < s.top_cells().size(); ++t) {
      const auto& supp = s.top_cells()[t].support;
      bool ok = true;
      for (int p : supp) {
        if (!in_translate(P.points()[p]) || (interior.count(p) && p != idx)) {
          ok = false;
          break;
        }
      }
      if (ok) out.lambda.push_back(static_cast<int>(t));
    }
  } else {
    // Box polytopes: a piece belongs to i when i is its unique interior
    // vertex (the translate machinery is simplex-specific).
    for (size_t t = 0; t < s.top_cells().size(); ++t) {
      const auto& supp = s.top_cells()[t].support;
      bool has_i = false, other = false;
      for (int p : supp) {
        if (p == idx) has_i = true;
        else if (interior.count(p)) other = true;
      }
      if (has_i && !other) out.lambda.push_back(static_cast<int>(t));
    }
  }

  std::set<int> stars;
  for (int v : out.lambda)
    for (int cid : dc.star_of_vertex(v))
      if (dc.cells()[cid].dim == dc.n()) stars.insert(cid);
  out.star_ncells.assign(stars.begin(), stars.end());

  // The enlarged region must carry exactly the sphere class: the cycle
  // space of the closed enlarged subcomplex is one-dimensional (and then
  // automatically spanned by the sphere cycle, which lies in it).
  std::set<int> region(out.sphere.cells.begin(), out.sphere.cells.end());
  region.insert(out.star_ncells.begin(), out.star_ncells.end());
  BoundedIndex rows(dc, dc.n() - 1);
  std::vector<int> cols;
  for (int cid : region)
    if (dc.cells()[cid].bounded) cols.push_back(cid);
  Gf2Matrix m(static_cast<int>(rows.cells.size()), static_cast<int>(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c)
    for (int f : dc.cell_facets()[cols[c]]) {
      auto it = rows.local.find(f);
      if (it != rows.local.end()) m.set(it->second, static_cast<int>(c));
    }
  const auto kernel = m.kernel_basis();
  const bool sphere_is_cycle = boundary(dc, out.sphere).cells.empty();
  out.class_matches_sphere = sphere_is_cycle && kernel.size() == 1;
  return out;
}

CycleFamily build_cycle_family(const DualComplex& dc) {
  CycleFamily fam;
  for (const auto& i : interior_points(dc.polytope()))
    fam.members.push_back(enlarged_cycle(dc, i));
  return fam;
}

ClassCheckReport cycle_class_check(const DualComplex& dc, const CycleFamily& fam) {
  ClassCheckReport rep;
  rep.homology_rank = homology_rank_gf2(dc, dc.n());

  rep.each_is_cycle = true;
  for (const auto& m : fam.members)
    if (!boundary(dc, m.sphere).cells.empty()) rep.each_is_cycle = false;

  // In a top-degree complex there are no boundaries, so classes are the
  // cycles themselves; independence is the GF(2) rank of the chain matrix.
  BoundedIndex ncells(dc, dc.n());
  Gf2Matrix chains(static_cast<int>(fam.members.size()), static_cast<int>(ncells.cells.size()));
  for (size_t r = 0; r < fam.members.size(); ++r)
    for (int cid : fam.members[r].sphere.cells) {
      auto it = ncells.local.find(cid);
      if (it != ncells.local.end()) chains.set(static_cast<int>(r), it->second);
    }
  const int rank = chains.rank();
  rep.independent = rank == static_cast<int>(fam.members.size());
  rep.spanning = rank == rep.homology_rank;
  rep.pass = rep.each_is_cycle && rep.independent && rep.spanning;
  return rep;
}

namespace {

struct CellSampler {
  const DualComplex& dc;
  std::vector<std::vector<double>> vertex_pos;

  explicit CellSampler(const DualComplex& d) : dc(d), vertex_pos(d.vertex_positions_f()) {}

  std::vector<double> representative(int cid) const {
    const auto& cell = dc.cells()[cid];
    const size_t dim = vertex_pos.empty() ? 0 : vertex_pos[0].size();
    std::vector<double> x(dim, 0.0);
    for (int v : cell.vertices)
      for (size_t k = 0; k < dim; ++k) x[k] += vertex_pos[v][k];
    for (auto& c : x) c /= static_cast<double>(cell.vertices.size());
    for (const auto& ray : cell.rays)
      for (size_t k = 0; k < dim; ++k) x[k] += static_cast<double>(ray[k]);
    return x;
  }

  std::vector<double> random_point(int cid, Rng& rng) const {
    const auto& cell = dc.cells()[cid];
    const size_t dim = vertex_pos[0].size();
    std::vector<double> x(dim, 0.0);
    double total = 0.0;
    std::vector<double> mu(cell.vertices.size());
    for (auto& m : mu) {
      m = rng.next_unit() + 1e-9;
      total += m;
    }
    for (size_t vi = 0; vi < cell.vertices.size(); ++vi)
      for (size_t k = 0; k < dim; ++k) x[k] += mu[vi] / total * vertex_pos[cell.vertices[vi]][k];
    for (const auto& ray : cell.rays) {
      const double lam = rng.next_in(0.0, 3.0);
      for (size_t k = 0; k < dim; ++k) x[k] += lam * static_cast<double>(ray[k]);
    }
    return x;
  }

  // Nearest incident vertex ids (with ties) for a point on the given cell.
  std::vector<int> nearest_vertices(int cid, const std::vector<double>& x) const {
    const auto& cell = dc.cells()[cid];
    double best = -1.0;
    std::vector<double> dist(cell.vertices.size());
    for (size_t vi = 0; vi < cell.vertices.size(); ++vi) {
      double d2 = 0.0;
      for (size_t k = 0; k < x.size(); ++k) {
        const double diff = x[k] - vertex_pos[cell.vertices[vi]][k];
        d2 += diff * diff;
      }
      dist[vi] = std::sqrt(d2);
      if (best < 0 || dist[vi] < best) best = dist[vi];
    }
    std::vector<int> out;
    for (size_t vi = 0; vi < cell.vertices.size(); ++vi)
      if (dist[vi] <= best + 1e-9 * (1.0 + best)) out.push_back(cell.vertices[vi]);
    return out;
  }
};

}  // namespace

CoverageReport coverage_check(const DualComplex& dc, const CycleFamily& fam,
                              std::uint64_t seed, int points_per_cell) {
  CoverageReport rep;

  std::set<int> lambda_union;
  std::set<int> sphere_union;
  for (const auto& m : fam.members) {
    lambda_union.insert(m.lambda.begin(), m.lambda.end());
    sphere_union.insert(m.sphere.cells.begin(), m.sphere.cells.end());
  }

  // Region level: each vertex-Voronoi region lies in the union of the
  // enlarged cycles.
  const size_t vertex_count = dc.vertex_positions().size();
  for (size_t v = 0; v < vertex_count; ++v) {
    ++rep.regions_checked;
    if (lambda_union.count(static_cast<int>(v))) continue;
    bool all_cells_covered = true;
    for (int cid : dc.star_of_vertex(static_cast<int>(v)))
      if (dc.cells()[cid].dim == dc.n() && !sphere_union.count(cid)) all_cells_covered = false;
    if (!all_cells_covered) ++rep.region_failures;
  }

  // Point level: barycenters of every cell plus random points per n-cell.
  CellSampler sampler(dc);
  auto covered = [&](int cid, const std::vector<double>& x) {
    const auto& supp = dc.cells()[cid].support;
    for (int e : sphere_union) {
      const auto& es = dc.cells()[e].support;
      if (std::includes(supp.begin(), supp.end(), es.begin(), es.end())) return true;
    }
    for (int v : sampler.nearest_vertices(cid, x))
      if (lambda_union.count(v)) return true;
    return false;
  };

  for (size_t cid = 0; cid < dc.cells().size(); ++cid) {
    ++rep.points_checked;
    if (!covered(static_cast<int>(cid), sampler.representative(static_cast<int>(cid))))
      ++rep.point_failures;
  }
  for (int cid : dc.cells_of_dim(dc.n())) {
    Rng rng = Rng::for_index(seed, static_cast<std::uint64_t>(cid));
    for (int k = 0; k < points_per_cell; ++k) {
      ++rep.points_checked;
      if (!covered(cid, sampler.random_point(cid, rng))) ++rep.point_failures;
    }
  }

  rep.pass = rep.region_failures == 0 && rep.point_failures == 0;
  return rep;
}

PairwiseReport pairwise_intersections(const DualComplex& dc, const CycleFamily& fam) {
  PairwiseReport rep;
  const size_t m = fam.members.size();
  rep.matrix.assign(m, std::vector<ContactKind>(m, ContactKind::Disjoint));

  for (size_t a = 0; a < m; ++a) {
    for (size_t b = a + 1; b < m; ++b) {
      const auto& A = fam.members[a];
      const auto& B = fam.members[b];
      std::set<int> sphere_a(A.sphere.cells.begin(), A.sphere.cells.end());
      std::set<int> sphere_b(B.sphere.cells.begin(), B.sphere.cells.end());
      std::set<int> lam_a(A.lambda.begin(), A.lambda.end());
      std::set<int> lam_b(B.lambda.begin(), B.lambda.end());

      bool overlap = false;
      // shared sphere n-cells
      for (int c : sphere_a)
        if (sphere_b.count(c)) overlap = true;
      // a full sphere cell of one meets the Voronoi piece of the other
      auto sphere_hits_lambda = [&](const std::set<int>& sphere, const std::set<int>& lam) {
        for (int c : sphere)
          for (int v : dc.cells()[c].vertices)
            if (lam.count(v)) return true;
        return false;
      };
      if (sphere_hits_lambda(sphere_a, lam_b) || sphere_hits_lambda(sphere_b, lam_a)) overlap = true;
      for (int v : lam_a)
        if (lam_b.count(v)) overlap = true;

      if (overlap) {
        rep.matrix[a][b] = rep.matrix[b][a] = ContactKind::Overlap;
        rep.at_most_single_contact = false;
        continue;
      }

      // Point contacts: shared endpoints of sphere cells, or a Voronoi wall
      // on an n-cell joining a lambda vertex of each.
      std::set<std::pair<int, int>> contacts;  // (0, vertex) or (1, ncell)
      std::set<int> verts_a, verts_b;
      for (int c : sphere_a) verts_a.insert(dc.cells()[c].vertices.begin(), dc.cells()[c].vertices.end());
      for (int c : sphere_b) verts_b.insert(dc.cells()[c].vertices.begin(), dc.cells()[c].vertices.end());
      for (int v : verts_a)
        if (verts_b.count(v)) contacts.insert({0, v});
      for (int cid : dc.cells_of_dim(dc.n())) {
        bool has_a = false, has_b = false;
        for (int v : dc.cells()[cid].vertices) {
          if (lam_a.count(v)) has_a = true;
          if (lam_b.count(v)) has_b = true;
        }
        if (has_a && has_b) contacts.insert({1, cid});
      }

      ContactKind kind = contacts.empty() ? ContactKind::Disjoint
                   : contacts.size() == 1 ? ContactKind::SingleVertex
                                          : ContactKind::MultiVertex;
      if (kind == ContactKind::MultiVertex) rep.at_most_single_contact = false;
      rep.matrix[a][b] = rep.matrix[b][a] = kind;
    }
  }
  return rep;
}

}  // namespace trop
