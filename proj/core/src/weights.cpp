#include "trop/weights.hpp"

#include <limits>
#include <stdexcept>

#include "trop/rng.hpp"

namespace trop {

Int canonical_weight(const Point& j) {
  Int s = 0, q = 0;
  for (auto c : j) {
    s += Int(c) * c;
    q += c;
  }
  return s + q * q;
}

Weights::Weights(Polytope polytope, RatVec values) : polytope_(std::move(polytope)), values_(std::move(values)) {
  if (values_.size() != polytope_.points().size())
    throw std::invalid_argument("weight vector size does not match lattice point count");
  values_f_.reserve(values_.size());
  for (const auto& r : values_) values_f_.push_back(rat_to_double(r));
}

Weights Weights::canonical(const Polytope& p) {
  RatVec v;
  v.reserve(p.points().size());
  for (const auto& pt : p.points()) v.emplace_back(canonical_weight(pt));
  return Weights(p, std::move(v));
}

Weights Weights::zero(const Polytope& p) {
  return Weights(p, RatVec(p.points().size(), Rat(0)));
}

Weights Weights::random_integer(const Polytope& p, std::uint64_t seed, std::int64_t hi) {
  Rng rng(seed);
  RatVec v;
  v.reserve(p.points().size());
  for (size_t i = 0; i < p.points().size(); ++i)
    v.emplace_back(Int(static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(hi + 1)))));
  return Weights(p, std::move(v));
}

LegendreResult legendre(const Weights& v, const RatVec& x) {
  const auto& pts = v.polytope().points();
  if (pts.empty()) throw std::invalid_argument("legendre: empty domain");
  if (static_cast<int>(x.size()) != v.polytope().ambient_dim())
    throw std::invalid_argument("legendre: dimension mismatch");
  LegendreResult res;
  bool have_second = false;
  Rat second;
  for (size_t i = 0; i < pts.size(); ++i) {
    Rat val = -v[static_cast<int>(i)];
    for (size_t k = 0; k < x.size(); ++k) val += x[k] * pts[i][k];
    if (res.argmax.empty() || val > res.value) {
      if (!res.argmax.empty()) {
        second = res.value;
        have_second = true;
      }
      res.value = val;
      res.argmax.assign(1, static_cast<int>(i));
    } else if (val == res.value) {
      res.argmax.push_back(static_cast<int>(i));
      second = val;
      have_second = true;
    } else if (!have_second || val > second) {
      second = val;
      have_second = true;
    }
  }
  if (have_second) res.defect = res.value - second;
  return res;
}

LegendreResultF legendre_f(const Weights& v, const std::vector<double>& x) {
  const auto& pts = v.polytope().points();
  if (pts.empty()) throw std::invalid_argument("legendre_f: empty domain");
  LegendreResultF res;
  res.value = -std::numeric_limits<double>::infinity();
  double second = -std::numeric_limits<double>::infinity();
  const auto& vf = v.values_f();
  for (size_t i = 0; i < pts.size(); ++i) {
    double val = -vf[i];
    for (size_t k = 0; k < x.size(); ++k) val += x[k] * static_cast<double>(pts[i][k]);
    if (val > res.value) {
      second = res.value;
      res.value = val;
      res.argmax = static_cast<int>(i);
    } else if (val > second) {
      second = val;
    }
  }
  res.defect = res.value - second;  // +inf for one-point domains
  return res;
}

}  // namespace trop
