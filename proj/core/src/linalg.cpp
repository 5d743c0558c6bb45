#include "trop/linalg.hpp"

#include <cassert>

namespace trop {

Int int_det(IntMat m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  assert(m[0].size() == n);
  Int sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

// Row echelon form; returns pivot columns. Augmented columns (>= split) are
// never chosen as pivots.
std::vector<int> echelon(RatMat& m, size_t split) {
  std::vector<int> pivots;
  const size_t rows = m.size();
  if (rows == 0) return pivots;
  size_t r = 0;
  for (size_t c = 0; c < split && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    const Rat inv = m[r][c];
    for (size_t j = c; j < m[r].size(); ++j) m[r][j] /= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rat f = m[i][c];
      for (size_t j = c; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

}  // namespace

int rat_rank(RatMat m) {
  if (m.empty()) return 0;
  return static_cast<int>(echelon(m, m[0].size()).size());
}

std::optional<RatVec> rat_solve(RatMat a, RatVec b) {
  const size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  assert(b.size() == rows);
  for (size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  const auto pivots = echelon(a, cols);
  // Inconsistency: a zero row with nonzero rhs.
  for (size_t i = pivots.size(); i < rows; ++i)
    if (a[i][cols] != 0) return std::nullopt;
  RatVec x(cols, Rat(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
  return x;
}

std::vector<RatVec> rat_nullspace(RatMat a) {
  if (a.empty()) return {};
  const size_t cols = a[0].size();
  const auto pivots = echelon(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(cols, Rat(0));
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace trop
