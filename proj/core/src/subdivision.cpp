#include "trop/subdivision.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "trop/linalg.hpp"

namespace trop {

namespace {

RatVec to_rat(const Point& p) {
  RatVec v;
  v.reserve(p.size());
  for (auto c : p) v.emplace_back(Int(c));
  return v;
}

Rat dot(const RatVec& a, const Point& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

int affine_dim_rat(const std::vector<RatVec>& pts) {
  if (pts.empty()) return -1;
  RatMat diffs;
  for (size_t i = 1; i < pts.size(); ++i) {
    RatVec row(pts[0].size());
    for (size_t k = 0; k < row.size(); ++k) row[k] = pts[i][k] - pts[0][k];
    diffs.push_back(std::move(row));
  }
  if (diffs.empty()) return 0;
  return rat_rank(std::move(diffs));
}

struct FacetLocal {
  std::vector<int> support;  // indices into the local point list
  RatVec outward;
};

// Facets of conv(pts) when pts affinely spans the full ambient space Q^m.
std::vector<FacetLocal> facets_fulldim(const std::vector<RatVec>& pts) {
  const int m = static_cast<int>(pts[0].size());
  const int count = static_cast<int>(pts.size());
  std::vector<FacetLocal> out;

  if (m == 1) {
    int lo = 0, hi = 0;
    for (int i = 1; i < count; ++i) {
      if (pts[i][0] < pts[lo][0]) lo = i;
      if (pts[i][0] > pts[hi][0]) hi = i;
    }
    out.push_back({{lo}, {Rat(-1)}});
    out.push_back({{hi}, {Rat(1)}});
    return out;
  }

  auto normal_of = [&](const std::vector<int>& subset) -> std::optional<RatVec> {
    RatMat diffs;
    for (size_t i = 1; i < subset.size(); ++i) {
      RatVec row(m);
      for (int k = 0; k < m; ++k) row[k] = pts[subset[i]][k] - pts[subset[0]][k];
      diffs.push_back(std::move(row));
    }
    auto ns = rat_nullspace(std::move(diffs));
    if (ns.size() != 1) return std::nullopt;  // subset does not span a hyperplane
    return ns[0];
  };

  auto try_facet = [&](const std::vector<int>& subset, std::set<std::vector<int>>& seen) {
    auto eta_opt = normal_of(subset);
    if (!eta_opt) return;
    RatVec eta = *eta_opt;
    const RatVec& base = pts[subset[0]];
    bool pos = false, neg = false;
    std::vector<int> support;
    for (int i = 0; i < count; ++i) {
      Rat side = 0;
      for (int k = 0; k < m; ++k) side += eta[k] * (pts[i][k] - base[k]);
      if (side > 0) pos = true;
      else if (side < 0) neg = true;
      else support.push_back(i);
      if (pos && neg) return;
    }
    if (pos) for (auto& c : eta) c = -c;  // outward: everything on the <= side
    if (seen.insert(support).second) out.push_back({std::move(support), std::move(eta)});
  };

  std::set<std::vector<int>> seen;
  if (count == m + 1) {
    std::vector<int> all(count);
    for (int i = 0; i < count; ++i) all[i] = i;
    for (int drop = 0; drop < count; ++drop) {
      std::vector<int> subset;
      for (int i = 0; i < count; ++i)
        if (i != drop) subset.push_back(i);
      try_facet(subset, seen);
    }
    return out;
  }

  // General position-free enumeration over m-subsets.
  std::vector<int> subset(m);
  auto rec = [&](auto&& self, int start, int chosen) -> void {
    if (chosen == m) {
      try_facet(subset, seen);
      return;
    }
    for (int i = start; i <= count - (m - chosen); ++i) {
      subset[chosen] = i;
      self(self, i + 1, chosen + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

// Injective affine map of pts onto full-dimensional local coordinates
// (Gram coordinates against a row basis of the difference span).
std::vector<RatVec> local_coords(const std::vector<RatVec>& pts) {
  RatMat diffs;
  for (size_t i = 1; i < pts.size(); ++i) {
    RatVec row(pts[0].size());
    for (size_t k = 0; k < row.size(); ++k) row[k] = pts[i][k] - pts[0][k];
    diffs.push_back(std::move(row));
  }
  // Independent rows via greedy rank growth.
  RatMat basis;
  int rank = 0;
  for (auto& row : diffs) {
    RatMat probe = basis;
    probe.push_back(row);
    const int r = rat_rank(probe);
    if (r > rank) {
      basis.push_back(row);
      rank = r;
    }
  }
  std::vector<RatVec> local(pts.size(), RatVec(rank, Rat(0)));
  for (size_t i = 0; i < pts.size(); ++i)
    for (int b = 0; b < rank; ++b) {
      Rat s = 0;
      for (size_t k = 0; k < pts[0].size(); ++k) s += (pts[i][k] - pts[0][k]) * basis[b][k];
      local[i][b] = s;
    }
  return local;
}

std::vector<FacetLocal> facet_supports_any_dim(const std::vector<RatVec>& pts) {
  const int m = affine_dim_rat(pts);
  if (m <= 0) return {};
  if (m == static_cast<int>(pts[0].size())) return facets_fulldim(pts);
  return facets_fulldim(local_coords(pts));
}

}  // namespace

int affine_dim(const std::vector<Point>& points) {
  std::vector<RatVec> pts;
  pts.reserve(points.size());
  for (const auto& p : points) pts.push_back(to_rat(p));
  return affine_dim_rat(pts);
}

std::vector<FacetData> facets_of(const std::vector<Point>& points) {
  std::vector<RatVec> pts;
  pts.reserve(points.size());
  for (const auto& p : points) pts.push_back(to_rat(p));
  std::vector<FacetData> out;
  for (auto& f : facets_fulldim(pts)) out.push_back({std::move(f.support), std::move(f.outward)});
  return out;
}

std::vector<std::vector<int>> all_faces_of(const std::vector<Point>& points) {
  std::vector<RatVec> pts;
  pts.reserve(points.size());
  for (const auto& p : points) pts.push_back(to_rat(p));

  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> out;

  auto rec = [&](auto&& self, const std::vector<int>& idxs) -> void {
    if (!seen.insert(idxs).second) return;
    out.push_back(idxs);
    std::vector<RatVec> sub;
    sub.reserve(idxs.size());
    for (int i : idxs) sub.push_back(pts[i]);
    const int m = affine_dim_rat(sub);
    if (m <= 0) return;
    if (static_cast<int>(idxs.size()) == m + 1) {
      // Simplex: faces are exactly the nonempty subsets.
      const int full = 1 << idxs.size();
      for (int mask = 1; mask < full - 1; ++mask) {
        std::vector<int> f;
        for (size_t b = 0; b < idxs.size(); ++b)
          if (mask & (1 << b)) f.push_back(idxs[b]);
        if (seen.insert(f).second) out.push_back(std::move(f));
      }
      return;
    }
    for (auto& facet : facet_supports_any_dim(sub)) {
      std::vector<int> global;
      global.reserve(facet.support.size());
      for (int li : facet.support) global.push_back(idxs[li]);
      self(self, global);
    }
  };

  std::vector<int> all(points.size());
  for (size_t i = 0; i < points.size(); ++i) all[i] = static_cast<int>(i);
  rec(rec, all);
  return out;
}

int Subdivision::face_id(const std::vector<int>& support) const {
  auto it = face_index_.find(support);
  return it == face_index_.end() ? -1 : it->second;
}

std::pair<Point, Point> Subdivision::edge_endpoints(int face_id) const {
  const Cell& f = faces_[face_id];
  if (f.dim != 1) throw std::invalid_argument("edge_endpoints: not a 1-face");
  const auto& pts = polytope_.points();
  // Support indices ascend lexicographically, hence monotonically along the
  // edge; the extremes are first and last.
  return {pts[f.support.front()], pts[f.support.back()]};
}

bool Subdivision::same_cells(const Subdivision& other) const {
  if (!(polytope_ == other.polytope_)) return false;
  if (tops_.size() != other.tops_.size()) return false;
  for (size_t i = 0; i < tops_.size(); ++i)
    if (tops_[i].support != other.tops_[i].support) return false;
  return true;
}

Subdivision make_subdivision(const Weights& v, std::vector<Cell> tops, std::vector<RatVec> duals) {
  Subdivision s;
  s.polytope_ = v.polytope();
  s.weights_ = v;

  std::vector<size_t> order(tops.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return tops[a].support < tops[b].support; });
  for (size_t i : order) {
    s.tops_.push_back(std::move(tops[i]));
    s.dual_pos_.push_back(std::move(duals[i]));
  }

  const auto& pts = s.polytope_.points();
  std::set<std::vector<int>> face_set;
  for (const auto& top : s.tops_) {
    std::vector<Point> cell_pts;
    cell_pts.reserve(top.support.size());
    for (int i : top.support) cell_pts.push_back(pts[i]);
    for (auto& local : all_faces_of(cell_pts)) {
      std::vector<int> global;
      global.reserve(local.size());
      for (int li : local) global.push_back(top.support[li]);
      std::sort(global.begin(), global.end());
      face_set.insert(std::move(global));
    }
  }

  for (auto& supp : face_set) {
    Cell f;
    f.support = supp;
    std::vector<Point> fp;
    for (int i : supp) fp.push_back(pts[i]);
    f.dim = affine_dim(fp);
    s.faces_.push_back(std::move(f));
  }
  std::sort(s.faces_.begin(), s.faces_.end(), [](const Cell& a, const Cell& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.support < b.support;
  });

  const int dim_count = s.polytope_.ambient_dim() + 1;
  s.faces_by_dim_.assign(dim_count, {});
  for (size_t i = 0; i < s.faces_.size(); ++i) {
    s.face_index_[s.faces_[i].support] = static_cast<int>(i);
    s.faces_by_dim_[s.faces_[i].dim].push_back(static_cast<int>(i));
  }

  s.tops_of_face_.assign(s.faces_.size(), {});
  for (size_t fi = 0; fi < s.faces_.size(); ++fi) {
    const auto& fs = s.faces_[fi].support;
    for (size_t ti = 0; ti < s.tops_.size(); ++ti) {
      const auto& ts = s.tops_[ti].support;
      if (std::includes(ts.begin(), ts.end(), fs.begin(), fs.end()))
        s.tops_of_face_[fi].push_back(static_cast<int>(ti));
    }
  }
  return s;
}

Subdivision regular_subdivision(const Weights& v) {
  const Polytope& P = v.polytope();
  const int N = P.ambient_dim();
  const auto& A = P.points();
  if (static_cast<int>(A.size()) < N + 1)
    throw std::invalid_argument("regular_subdivision: domain has fewer than n+2 points");

  auto lval = [&](const RatVec& w, int k) {
    Rat s = -v[k];
    for (int c = 0; c < N; ++c) s += w[c] * A[k][c];
    return s;
  };

  auto support_points = [&](const std::vector<int>& supp) {
    std::vector<RatVec> pts;
    pts.reserve(supp.size());
    for (int i : supp) pts.push_back(to_rat(A[i]));
    return pts;
  };

  // Raise the argmax to full dimension: rotate the supporting hyperplane
  // about the current tie set until a new point joins.
  RatVec w(N, Rat(0));
  LegendreResult res = legendre(v, w);
  while (true) {
    auto pts = support_points(res.argmax);
    if (affine_dim_rat(pts) == N) break;
    RatMat diffs;
    for (size_t i = 1; i < pts.size(); ++i) {
      RatVec row(N);
      for (int k = 0; k < N; ++k) row[k] = pts[i][k] - pts[0][k];
      diffs.push_back(std::move(row));
    }
    std::vector<RatVec> candidates;
    if (diffs.empty()) {
      for (int k = 0; k < N; ++k) {
        RatVec e(N, Rat(0));
        e[k] = 1;
        candidates.push_back(std::move(e));
      }
    } else {
      candidates = rat_nullspace(std::move(diffs));
    }
    const int s0 = res.argmax[0];
    bool stepped = false;
    for (auto& u : candidates) {
      for (int flip = 0; flip < 2 && !stepped; ++flip) {
        if (flip) for (auto& c : u) c = -c;
        bool have = false;
        Rat best_s;
        for (size_t k = 0; k < A.size(); ++k) {
          if (std::binary_search(res.argmax.begin(), res.argmax.end(), static_cast<int>(k))) continue;
          Rat rate = dot(u, A[k]) - dot(u, A[s0]);
          if (rate <= 0) continue;
          Rat step = (res.value - lval(w, static_cast<int>(k))) / rate;
          if (!have || step < best_s) {
            best_s = step;
            have = true;
          }
        }
        if (have) {
          for (int c = 0; c < N; ++c) w[c] += best_s * u[c];
          stepped = true;
        }
      }
      if (stepped) break;
    }
    if (!stepped) throw std::logic_error("regular_subdivision: could not raise support dimension");
    res = legendre(v, w);
  }

  // Breadth-first walk over dual vertices through shared facets.
  std::map<std::vector<int>, RatVec> visited;
  std::deque<std::vector<int>> queue;
  visited[res.argmax] = w;
  queue.push_back(res.argmax);

  while (!queue.empty()) {
    const std::vector<int> S = queue.front();
    queue.pop_front();
    const RatVec at = visited[S];
    const Rat top_value = lval(at, S[0]);
    auto pts = support_points(S);
    for (auto& facet : facets_fulldim(pts)) {
      const RatVec& u = facet.outward;
      const int t0 = S[facet.support[0]];
      const Rat r0 = dot(u, A[t0]);
      bool have = false;
      Rat best_s;
      for (size_t k = 0; k < A.size(); ++k) {
        if (std::binary_search(S.begin(), S.end(), static_cast<int>(k))) continue;
        Rat rate = dot(u, A[k]) - r0;
        if (rate <= 0) continue;
        Rat step = (top_value - lval(at, static_cast<int>(k))) / rate;
        if (!have || step < best_s) {
          best_s = step;
          have = true;
        }
      }
      if (!have) continue;  // boundary facet: unbounded dual edge
      RatVec next = at;
      for (int c = 0; c < N; ++c) next[c] += best_s * u[c];
      LegendreResult nres = legendre(v, next);
      if (visited.emplace(nres.argmax, next).second) queue.push_back(nres.argmax);
    }
  }

  std::vector<Cell> tops;
  std::vector<RatVec> duals;
  for (auto& [supp, pos] : visited) {
    tops.push_back({supp, N});
    duals.push_back(pos);
  }
  return make_subdivision(v, std::move(tops), std::move(duals));
}

Subdivision brute_force_subdivision(const Weights& v) {
  const Polytope& P = v.polytope();
  const int N = P.ambient_dim();
  const auto& A = P.points();
  if (A.size() > 40) throw std::invalid_argument("brute_force_subdivision: size guard exceeded (> 40 points)");
  if (static_cast<int>(A.size()) < N + 1)
    throw std::invalid_argument("brute_force_subdivision: domain has fewer than n+2 points");

  std::vector<Cell> tops;
  std::vector<RatVec> duals;

  std::vector<int> subset(N + 1);
  auto consider = [&]() {
    // Solve <x, p> - c = v(p) on the subset; unknowns (x, c).
    RatMat m;
    RatVec b;
    for (int i = 0; i < N + 1; ++i) {
      RatVec row(N + 1);
      for (int k = 0; k < N; ++k) row[k] = Int(A[subset[i]][k]);
      row[N] = -1;
      m.push_back(std::move(row));
      b.push_back(v[subset[i]]);
    }
    if (rat_rank(m) != N + 1) return;  // affinely dependent
    auto sol = rat_solve(std::move(m), std::move(b));
    if (!sol) return;
    RatVec x(sol->begin(), sol->begin() + N);
    const Rat c = (*sol)[N];
    for (size_t k = 0; k < A.size(); ++k) {
      if (std::binary_search(subset.begin(), subset.end(), static_cast<int>(k))) continue;
      Rat val = -v[static_cast<int>(k)];
      for (int t = 0; t < N; ++t) val += x[t] * A[k][t];
      if (val >= c) return;  // not strictly dominated
    }
    tops.push_back({subset, N});
    duals.push_back(std::move(x));
  };

  auto rec = [&](auto&& self, int start, int chosen) -> void {
    if (chosen == N + 1) {
      consider();
      return;
    }
    for (int i = start; i <= static_cast<int>(A.size()) - (N + 1 - chosen); ++i) {
      subset[chosen] = i;
      self(self, i + 1, chosen + 1);
    }
  };
  rec(rec, 0, 0);
  return make_subdivision(v, std::move(tops), std::move(duals));
}

bool is_unimodular(const Subdivision& s) {
  const int N = s.polytope().ambient_dim();
  const auto& pts = s.polytope().points();
  for (const auto& cell : s.top_cells()) {
    if (static_cast<int>(cell.support.size()) != N + 1) return false;
    std::vector<Point> vs;
    for (int i : cell.support) vs.push_back(pts[i]);
    if (normalized_volume(vs) != 1) return false;
  }
  return true;
}

EdgeDirectionReport check_edge_directions(const Subdivision& s) {
  EdgeDirectionReport rep;
  for (int fid : s.faces_of_dim(1)) {
    ++rep.edge_count;
    auto [a, b] = s.edge_endpoints(fid);
    int plus = 0, minus = 0, other = 0;
    for (size_t k = 0; k < a.size(); ++k) {
      const auto d = b[k] - a[k];
      if (d == 1) ++plus;
      else if (d == -1) ++minus;
      else if (d != 0) ++other;
    }
    const bool ok = other == 0 && ((plus == 1 && minus == 0) || (plus == 0 && minus == 1) ||
                                   (plus == 1 && minus == 1));
    if (!ok) rep.violations.push_back({a, b});
  }
  rep.pass = rep.violations.empty();
  return rep;
}

namespace {

std::vector<std::vector<int>> fan_triangulate(const std::vector<RatVec>& pts, const std::vector<int>& idxs) {
  std::vector<RatVec> sub;
  sub.reserve(idxs.size());
  for (int i : idxs) sub.push_back(pts[i]);
  const int m = affine_dim_rat(sub);
  if (static_cast<int>(idxs.size()) == m + 1) return {idxs};
  const int apex = idxs[0];  // lex-min of a lex-sorted support: a hull vertex
  std::vector<std::vector<int>> out;
  for (auto& facet : facet_supports_any_dim(sub)) {
    std::vector<int> global;
    global.reserve(facet.support.size());
    bool has_apex = false;
    for (int li : facet.support) {
      if (idxs[li] == apex) has_apex = true;
      global.push_back(idxs[li]);
    }
    if (has_apex) continue;
    for (auto& tau : fan_triangulate(pts, global)) {
      std::vector<int> simplex;
      simplex.push_back(apex);
      simplex.insert(simplex.end(), tau.begin(), tau.end());
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

}  // namespace

Int cell_normalized_volume(const Subdivision& s, const Cell& c) {
  const auto& pts = s.polytope().points();
  const int N = s.polytope().ambient_dim();
  if (c.dim != N) throw std::invalid_argument("cell_normalized_volume: not a top cell");
  if (static_cast<int>(c.support.size()) == N + 1) {
    std::vector<Point> vs;
    for (int i : c.support) vs.push_back(pts[i]);
    return normalized_volume(vs);
  }
  std::vector<RatVec> all;
  all.reserve(pts.size());
  for (const auto& p : pts) all.push_back(to_rat(p));
  Int total = 0;
  for (auto& simplex : fan_triangulate(all, c.support)) {
    std::vector<Point> vs;
    for (int i : simplex) vs.push_back(pts[i]);
    total += normalized_volume(vs);
  }
  return total;
}

bool check_translate_restriction(const Subdivision& s, const Point& i) {
  const Polytope& P = s.polytope();
  if (P.kind() != PolytopeKind::DilatedSimplex)
    throw std::invalid_argument("check_translate_restriction: polytope is not a dilated simplex");
  const int idx = P.index_of(i);
  bool interior = false;
  for (int k : P.interior_indices())
    if (k == idx) interior = true;
  if (idx < 0 || !interior)
    throw std::invalid_argument("check_translate_restriction: point is not interior");

  const int N = P.ambient_dim();
  std::int64_t i0 = 0;
  for (auto c : i) i0 += c;
  auto inside = [&](const Point& p) {
    std::int64_t sum = 0;
    for (int k = 0; k < N; ++k) {
      if (p[k] < i[k] - 1) return false;
      sum += p[k];
    }
    return sum <= i0 + 1;
  };

  Int covered = 0;
  for (const auto& cell : s.top_cells()) {
    bool in = true;
    for (int pi : cell.support)
      if (!inside(P.points()[pi])) {
        in = false;
        break;
      }
    if (in) covered += cell_normalized_volume(s, cell);
  }
  Int expected = 1;
  for (int k = 0; k < N; ++k) expected *= (N + 1);  // (n+2)^(n+1)
  return covered == expected;
}

}  // namespace trop
