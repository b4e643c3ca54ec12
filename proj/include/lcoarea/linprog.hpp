#pragma once

#include <vector>

#include "lcoarea/common.hpp"

namespace lcoarea {

/// Solution of   min c.x  s.t.  A x >= b, x >= 0.
struct LpResult {
  double value = 0.0;
  std::vector<double> x;
};

/// Dense two-phase primal simplex in long double with Bland's pivoting
/// rule (deterministic, cycle-free). Covering programs with c >= 0 and
/// b >= 0 are always feasible and bounded, which is the only regime the
/// callers use. InfeasibleError otherwise.
LpResult solve_covering_lp(const std::vector<std::vector<double>>& A,
                           const std::vector<double>& b, const std::vector<double>& c);

/// Independent exact route for small instances: enumerates every basic
/// solution of [A | -I] and takes the best feasible one. The optimum of a
/// pointed feasible LP sits at a vertex, so this equals the simplex value.
/// SizeError beyond 6 constraints / 20 variables.
LpResult enumerate_covering_lp(const std::vector<std::vector<double>>& A,
                               const std::vector<double>& b, const std::vector<double>& c);

}  // namespace lcoarea
