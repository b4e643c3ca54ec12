#include "lcoarea/linprog.hpp"

#include <algorithm>
#include <cmath>

namespace lcoarea {

namespace {

using Real = long double;
constexpr Real kPivotEps = 1e-11L;

struct Tableau {
  // Rows 0..m-1 are constraints, row m is the objective being minimized.
  // Column layout: n structural, m surplus, m artificial, then the rhs.
  std::vector<std::vector<Real>> t;
  std::vector<int> basis;  // basic column per row
  int m = 0, n = 0;

  int cols() const { return n + 2 * m + 1; }
  int rhs() const { return cols() - 1; }

  void pivot(int row, int col) {
    const Real piv = t[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
    for (int j = 0; j < cols(); ++j) t[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] /= piv;
    for (int i = 0; i <= m; ++i) {
      if (i == row) continue;
      const Real f = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
      if (f == 0.0L) continue;
      for (int j = 0; j < cols(); ++j) {
        t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
            f * t[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)];
      }
    }
    basis[static_cast<std::size_t>(row)] = col;
  }

  // Bland: entering = lowest-index column with a negative reduced cost;
  // leaving = lowest-index basic variable among the tightest ratios.
  bool iterate(int allowed_cols) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < allowed_cols; ++j) {
        if (t[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] < -kPivotEps) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Real best = 0.0L;
      for (int i = 0; i < m; ++i) {
        const Real a = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter)];
        if (a <= kPivotEps) continue;
        const Real ratio = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(rhs())] / a;
        if (leave < 0 || ratio < best - kPivotEps ||
            (ratio < best + kPivotEps &&
             basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;  // unbounded
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult solve_covering_lp(const std::vector<std::vector<double>>& A,
                           const std::vector<double>& b, const std::vector<double>& c) {
  const int m = static_cast<int>(A.size());
  const int n = static_cast<int>(c.size());
  if (static_cast<int>(b.size()) != m) throw InputError("lp: rhs size mismatch");
  for (const auto& row : A) {
    if (static_cast<int>(row.size()) != n) throw InputError("lp: matrix width mismatch");
  }
  if (m == 0) return LpResult{0.0, std::vector<double>(static_cast<std::size_t>(n), 0.0)};

  Tableau tb;
  tb.m = m;
  tb.n = n;
  tb.t.assign(static_cast<std::size_t>(m + 1), std::vector<Real>(static_cast<std::size_t>(tb.cols()), 0.0L));
  tb.basis.assign(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    auto& row = tb.t[static_cast<std::size_t>(i)];
    // b >= 0 keeps the artificial start basis feasible.
    const Real sign = b[static_cast<std::size_t>(i)] >= 0.0 ? 1.0L : -1.0L;
    for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = sign * static_cast<Real>(A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    row[static_cast<std::size_t>(n + i)] = -sign;                 // surplus
    row[static_cast<std::size_t>(n + m + i)] = 1.0L;              // artificial
    row[static_cast<std::size_t>(tb.rhs())] = sign * static_cast<Real>(b[static_cast<std::size_t>(i)]);
    tb.basis[static_cast<std::size_t>(i)] = n + m + i;
  }

  // Phase 1: minimize the artificial sum.
  auto& obj = tb.t[static_cast<std::size_t>(m)];
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < tb.cols(); ++j) {
      obj[static_cast<std::size_t>(j)] -= tb.t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  if (!tb.iterate(tb.cols() - 1)) throw InternalError("lp: phase 1 unbounded");
  if (std::abs(static_cast<double>(obj[static_cast<std::size_t>(tb.rhs())])) > 1e-7) {
    throw InfeasibleError("lp: infeasible program");
  }
  // Drive any residual artificial out of the basis; a row with no
  // structural pivot is redundant and stays put harmlessly at zero.
  for (int i = 0; i < m; ++i) {
    if (tb.basis[static_cast<std::size_t>(i)] < n + m) continue;
    for (int j = 0; j < n + m; ++j) {
      if (std::abs(static_cast<double>(tb.t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])) >
          static_cast<double>(kPivotEps)) {
        tb.pivot(i, j);
        break;
      }
    }
  }

  // Phase 2: swap in the real objective, zero out artificial columns.
  std::fill(obj.begin(), obj.end(), 0.0L);
  for (int j = 0; j < n; ++j) obj[static_cast<std::size_t>(j)] = static_cast<Real>(c[static_cast<std::size_t>(j)]);
  for (int i = 0; i < m; ++i) {
    const int bj = tb.basis[static_cast<std::size_t>(i)];
    const Real coeff = obj[static_cast<std::size_t>(bj)];
    if (coeff == 0.0L) continue;
    for (int j = 0; j < tb.cols(); ++j) {
      obj[static_cast<std::size_t>(j)] -= coeff * tb.t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  for (int i = 0; i < m; ++i) {
    tb.t[static_cast<std::size_t>(m)][static_cast<std::size_t>(n + m + i)] = 1.0L;  // forbid artificials
  }
  if (!tb.iterate(n + m)) throw InternalError("lp: covering objective unbounded");

  LpResult res;
  res.x.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < m; ++i) {
    const int bj = tb.basis[static_cast<std::size_t>(i)];
    if (bj < n) {
      res.x[static_cast<std::size_t>(bj)] =
          std::max(0.0, static_cast<double>(tb.t[static_cast<std::size_t>(i)][static_cast<std::size_t>(tb.rhs())]));
    }
  }
  long double value = 0.0L;
  for (int j = 0; j < n; ++j) value += static_cast<Real>(c[static_cast<std::size_t>(j)]) * static_cast<Real>(res.x[static_cast<std::size_t>(j)]);
  res.value = static_cast<double>(value);
  return res;
}

LpResult enumerate_covering_lp(const std::vector<std::vector<double>>& A,
                               const std::vector<double>& b, const std::vector<double>& c) {
  const int m = static_cast<int>(A.size());
  const int n = static_cast<int>(c.size());
  if (m > 6 || n > 20) throw SizeError("basic-solution enumeration limited to 6 constraints / 20 variables");
  if (m == 0) return LpResult{0.0, std::vector<double>(static_cast<std::size_t>(n), 0.0)};
  const int total = n + m;  // structural + surplus columns of [A | -I]

  LpResult best;
  best.value = kInf;

  // Every size-m column subset; solve B y = b by Gaussian elimination.
  std::vector<int> pick(static_cast<std::size_t>(m), 0);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == m) {
      std::vector<std::vector<long double>> B(static_cast<std::size_t>(m),
                                              std::vector<long double>(static_cast<std::size_t>(m + 1), 0.0L));
      for (int i = 0; i < m; ++i) {
        for (int k = 0; k < m; ++k) {
          const int col = pick[static_cast<std::size_t>(k)];
          B[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
              col < n ? static_cast<long double>(A[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)])
                      : (col - n == i ? -1.0L : 0.0L);
        }
        B[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)] = static_cast<long double>(b[static_cast<std::size_t>(i)]);
      }
      // Partial-pivot elimination; singular bases are skipped.
      bool singular = false;
      for (int col = 0; col < m && !singular; ++col) {
        int piv = -1;
        long double mx = 1e-12L;
        for (int r = col; r < m; ++r) {
          const long double v = std::abs(static_cast<double>(B[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]));
          if (v > mx) {
            mx = v;
            piv = r;
          }
        }
        if (piv < 0) {
          singular = true;
          break;
        }
        std::swap(B[static_cast<std::size_t>(col)], B[static_cast<std::size_t>(piv)]);
        for (int r = 0; r < m; ++r) {
          if (r == col) continue;
          const long double f = B[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] /
                                B[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
          if (f == 0.0L) continue;
          for (int j = col; j <= m; ++j) {
            B[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -=
                f * B[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
          }
        }
      }
      if (!singular) {
        std::vector<double> x(static_cast<std::size_t>(total), 0.0);
        bool feasible = true;
        long double value = 0.0L;
        for (int k = 0; k < m; ++k) {
          const long double v = B[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)] /
                                B[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
          if (v < -1e-9L) {
            feasible = false;
            break;
          }
          const int col = pick[static_cast<std::size_t>(k)];
          x[static_cast<std::size_t>(col)] = std::max(0.0, static_cast<double>(v));
          if (col < n) value += static_cast<long double>(c[static_cast<std::size_t>(col)]) * v;
        }
        if (feasible && static_cast<double>(value) < best.value) {
          best.value = static_cast<double>(value);
          best.x.assign(x.begin(), x.begin() + n);
        }
      }
      return;
    }
    for (int cidx = start; cidx <= total - (m - depth); ++cidx) {
      pick[static_cast<std::size_t>(depth)] = cidx;
      rec(cidx + 1, depth + 1);
    }
  };
  rec(0, 0);
  if (std::isinf(best.value)) throw InfeasibleError("enumeration: no feasible basic solution");
  return best;
}

}  // namespace lcoarea
