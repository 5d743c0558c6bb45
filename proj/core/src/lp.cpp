#include "trop/lp.hpp"

#include <cassert>
#include <stdexcept>

namespace trop {

namespace {

// Dense Phase-I tableau. Columns: x+ (n), x- (n), surplus (one per
// inequality), artificial (one per row). Objective: minimize the sum of
// artificials.
struct Tableau {
  int rows, cols;
  std::vector<RatVec> a;  // rows x (cols + 1), last column = rhs
  RatVec obj;             // reduced-cost row, size cols + 1 (last = -objective value)
  std::vector<int> basis;

  void pivot(int r, int c) {
    const Rat p = a[r][c];
    for (auto& v : a[r]) v /= p;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rat f = a[i][c];
      for (int j = 0; j <= cols; ++j) a[i][j] -= f * a[r][j];
    }
    if (obj[c] != 0) {
      const Rat f = obj[c];
      for (int j = 0; j <= cols; ++j) obj[j] -= f * a[r][j];
    }
    basis[r] = c;
  }
};

}  // namespace

LpResult lp_feasible(const std::vector<LpConstraint>& constraints, int num_vars) {
  const int m = static_cast<int>(constraints.size());
  int num_ineq = 0;
  for (const auto& c : constraints)
    if (!c.equality) ++num_ineq;

  const int col_xp = 0;
  const int col_xm = num_vars;
  const int col_s = 2 * num_vars;
  const int col_art = col_s + num_ineq;
  const int cols = col_art + m;

  Tableau t;
  t.rows = m;
  t.cols = cols;
  t.a.assign(m, RatVec(cols + 1, Rat(0)));
  t.obj.assign(cols + 1, Rat(0));
  t.basis.assign(m, -1);

  int si = 0;
  for (int i = 0; i < m; ++i) {
    const auto& c = constraints[i];
    assert(static_cast<int>(c.coeffs.size()) == num_vars);
    const bool flip = c.rhs < 0;
    const Rat sign = flip ? Rat(-1) : Rat(1);
    for (int j = 0; j < num_vars; ++j) {
      t.a[i][col_xp + j] = sign * c.coeffs[j];
      t.a[i][col_xm + j] = -sign * c.coeffs[j];
    }
    if (!c.equality) {
      t.a[i][col_s + si] = -sign;  // a.x - s = b
      ++si;
    }
    t.a[i][cols] = sign * c.rhs;
    t.a[i][col_art + i] = 1;
    t.basis[i] = col_art + i;
  }

  // Phase-I objective: sum of artificials; price out the basis.
  for (int j = 0; j <= cols; ++j) {
    Rat s = 0;
    for (int i = 0; i < m; ++i) s += t.a[i][j];
    t.obj[j] = (j >= col_art && j < cols ? Rat(1) : Rat(0)) - s;
  }

  int degenerate_streak = 0;
  while (true) {
    // Entering column: Dantzig, Bland after stalls.
    int enter = -1;
    if (degenerate_streak < 16) {
      Rat best = 0;
      for (int j = 0; j < col_art; ++j)
        if (t.obj[j] < best) {
          best = t.obj[j];
          enter = j;
        }
    } else {
      for (int j = 0; j < col_art; ++j)
        if (t.obj[j] < 0) {
          enter = j;
          break;
        }
    }
    if (enter < 0) break;

    int leave = -1;
    Rat best_ratio;
    for (int i = 0; i < m; ++i) {
      if (t.a[i][enter] <= 0) continue;
      const Rat ratio = t.a[i][cols] / t.a[i][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && t.basis[i] < t.basis[leave])) {
        best_ratio = ratio;
        leave = i;
      }
    }
    if (leave < 0) break;  // unbounded phase-I direction: cannot happen, bail safely
    const bool degenerate = (t.a[leave][cols] == 0);
    degenerate_streak = degenerate ? degenerate_streak + 1 : 0;
    t.pivot(leave, enter);
  }

  LpResult out;
  const Rat objective = -t.obj[cols];
  if (objective == 0) {
    RatVec xp(num_vars, Rat(0)), xm(num_vars, Rat(0));
    for (int i = 0; i < m; ++i) {
      const int b = t.basis[i];
      if (b >= col_xp && b < col_xm) xp[b - col_xp] = t.a[i][cols];
      else if (b >= col_xm && b < col_s) xm[b - col_xm] = t.a[i][cols];
    }
    RatVec x(num_vars);
    for (int j = 0; j < num_vars; ++j) x[j] = xp[j] - xm[j];
    out.solution = std::move(x);
    return out;
  }

  // Infeasible: multipliers y_i = 1 - reduced cost of artificial i, adjusted
  // for the row sign flips applied above.
  RatVec y(m);
  for (int i = 0; i < m; ++i) {
    const Rat yi = Rat(1) - t.obj[col_art + i];
    y[i] = constraints[i].rhs < 0 ? -yi : yi;
  }
  // Exact verification: y^T A = 0, y^T b > 0, y >= 0 on inequality rows.
  RatVec yta(num_vars, Rat(0));
  Rat ytb = 0;
  bool ok = true;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < num_vars; ++j) yta[j] += y[i] * constraints[i].coeffs[j];
    ytb += y[i] * constraints[i].rhs;
    if (!constraints[i].equality && y[i] < 0) ok = false;
  }
  for (const auto& v : yta)
    if (v != 0) ok = false;
  if (!(ytb > 0)) ok = false;
  if (!ok) throw std::logic_error("lp_feasible: certificate verification failed");
  out.farkas = std::move(y);
  return out;
}

}  // namespace trop
