#include "trop/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "trop/linalg.hpp"

namespace trop {

std::string point_to_string(const Point& p) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ")";
  return os.str();
}

Polytope Polytope::simplex(int n, std::int64_t d) {
  if (n < 0 || d < 1) throw std::invalid_argument("simplex requires n >= 0, d >= 1");
  Polytope p;
  p.kind_ = PolytopeKind::DilatedSimplex;
  p.dim_ = n + 1;
  p.d_ = d;
  p.finalize();
  return p;
}

Polytope Polytope::box(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw std::invalid_argument("box requires a, b >= 1");
  Polytope p;
  p.kind_ = PolytopeKind::Box;
  p.dim_ = 2;
  p.a_ = a;
  p.b_ = b;
  p.finalize();
  return p;
}

Polytope Polytope::parse(const std::string& descriptor) {
  const auto colon = descriptor.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("bad polytope descriptor: " + descriptor);
  const std::string kind = descriptor.substr(0, colon);
  const std::string rest = descriptor.substr(colon + 1);
  if (kind == "simplex") {
    int n = -1;
    std::int64_t d = -1;
    std::istringstream is(rest);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("bad simplex descriptor: " + descriptor);
      const std::string key = tok.substr(0, eq);
      const long long val = std::stoll(tok.substr(eq + 1));
      if (key == "n") n = static_cast<int>(val);
      else if (key == "d") d = val;
      else throw std::invalid_argument("unknown simplex parameter: " + key);
    }
    if (n < 0 || d < 1) throw std::invalid_argument("simplex descriptor needs n and d: " + descriptor);
    return simplex(n, d);
  }
  if (kind == "box") {
    const auto x = rest.find('x');
    if (x == std::string::npos) throw std::invalid_argument("bad box descriptor: " + descriptor);
    return box(std::stoll(rest.substr(0, x)), std::stoll(rest.substr(x + 1)));
  }
  throw std::invalid_argument("unknown polytope kind: " + kind);
}

void Polytope::finalize() {
  // Facets first; point enumeration and interiority reuse them.
  facets_.clear();
  if (kind_ == PolytopeKind::DilatedSimplex) {
    for (int a = 0; a < dim_; ++a) {
      Facet f;
      f.normal.assign(dim_, 0);
      f.normal[a] = -1;
      f.offset = 0;
      facets_.push_back(std::move(f));
    }
    Facet top;
    top.normal.assign(dim_, 1);
    top.offset = d_;
    facets_.push_back(std::move(top));
  } else {
    const std::int64_t bounds[2] = {a_, b_};
    for (int a = 0; a < 2; ++a) {
      Facet lo, hi;
      lo.normal.assign(2, 0);
      hi.normal.assign(2, 0);
      lo.normal[a] = -1;
      lo.offset = 0;
      hi.normal[a] = 1;
      hi.offset = bounds[a];
      facets_.push_back(std::move(lo));
      facets_.push_back(std::move(hi));
    }
  }

  points_.clear();
  Point cur(dim_, 0);
  // Lexicographic enumeration by recursive descent over coordinates.
  auto rec = [&](auto&& self, int coord) -> void {
    if (coord == dim_) {
      points_.push_back(cur);
      return;
    }
    std::int64_t hi;
    if (kind_ == PolytopeKind::DilatedSimplex) {
      std::int64_t used = std::accumulate(cur.begin(), cur.begin() + coord, std::int64_t{0});
      hi = d_ - used;
    } else {
      hi = coord == 0 ? a_ : b_;
    }
    for (std::int64_t v = 0; v <= hi; ++v) {
      cur[coord] = v;
      self(self, coord + 1);
    }
    cur[coord] = 0;
  };
  rec(rec, 0);
  std::sort(points_.begin(), points_.end());

  interior_.clear();
  for (size_t i = 0; i < points_.size(); ++i)
    if (strictly_contains(points_[i])) interior_.push_back(static_cast<int>(i));
}

int Polytope::index_of(const Point& p) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), p);
  if (it == points_.end() || *it != p) return -1;
  return static_cast<int>(it - points_.begin());
}

bool Polytope::contains(const Point& p) const {
  if (static_cast<int>(p.size()) != dim_) return false;
  for (const auto& f : facets_) {
    std::int64_t s = 0;
    for (int k = 0; k < dim_; ++k) s += f.normal[k] * p[k];
    if (s > f.offset) return false;
  }
  return true;
}

bool Polytope::strictly_contains(const Point& p) const {
  if (static_cast<int>(p.size()) != dim_) return false;
  for (const auto& f : facets_) {
    std::int64_t s = 0;
    for (int k = 0; k < dim_; ++k) s += f.normal[k] * p[k];
    if (s >= f.offset) return false;
  }
  return true;
}

Int Polytope::normalized_volume() const {
  if (kind_ == PolytopeKind::DilatedSimplex) {
    Int v = 1;
    for (int k = 0; k < dim_; ++k) v *= d_;
    return v;
  }
  return Int(2) * a_ * b_;
}

std::string Polytope::descriptor() const {
  std::ostringstream os;
  if (kind_ == PolytopeKind::DilatedSimplex)
    os << "simplex:n=" << n() << ",d=" << d_;
  else
    os << "box:" << a_ << "x" << b_;
  return os.str();
}

std::vector<Point> enumerate_points(const Polytope& p) { return p.points(); }

std::vector<Point> interior_points(const Polytope& p) {
  std::vector<Point> out;
  out.reserve(p.interior_indices().size());
  for (int i : p.interior_indices()) out.push_back(p.points()[i]);
  return out;
}

Int geometric_genus(int n, std::int64_t d) {
  if (n < 1 || d < 1) throw std::invalid_argument("geometric_genus requires n >= 1, d >= 1");
  // C(d-1, n+1)
  const std::int64_t k = n + 1;
  if (d - 1 < k) return 0;
  Int num = 1, den = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    num *= (d - 1 - i);
    den *= (i + 1);
  }
  return num / den;
}

Int normalized_volume(const std::vector<Point>& vertices) {
  if (vertices.empty()) throw std::invalid_argument("normalized_volume: no points");
  const size_t dim = vertices[0].size();
  if (vertices.size() != dim + 1)
    throw std::invalid_argument("normalized_volume: expected N+1 points in Z^N");
  IntMat m(dim, std::vector<Int>(dim));
  for (size_t r = 0; r < dim; ++r)
    for (size_t c = 0; c < dim; ++c) m[r][c] = Int(vertices[r + 1][c]) - Int(vertices[0][c]);
  Int det = int_det(m);
  return det < 0 ? Int(-det) : det;
}

}  // namespace trop
