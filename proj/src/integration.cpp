#include "lcoarea/integration.hpp"

#include <algorithm>
#include <cmath>

namespace lcoarea {

double upper_integral_finite(const std::map<std::string, double>& f, const FiniteMeasure& mu) {
  double total = 0.0;
  for (const auto& [id, mass] : mu.atoms) {
    if (mass < 0.0) throw InputError("negative atom mass at " + id);
    if (mass == 0.0) continue;
    const auto it = f.find(id);
    if (it == f.end()) throw InputError("f undefined on positive-mass atom " + id);
    const double v = it->second;
    if (v < 0.0) throw InputError("f must be nonnegative at " + id);
    if (v == 0.0) continue;  // 0 * inf = 0
    total += v * mass;
  }
  return total;
}

bool leq_with_tol(double a, double b, double tol) {
  if (std::isinf(b)) return true;
  if (std::isinf(a)) return false;
  return a <= b + tol;
}

WeightedIntegral weighted_causal_integral_delta(const FiniteSpace& space,
                                                const std::vector<double>& f, double s,
                                                double delta, std::span<const int> pool,
                                                IntegralMethod method,
                                                const IntegralLimits& limits) {
  if (static_cast<int>(f.size()) != space.size()) {
    throw InputError("f must assign a value to every universe point");
  }
  for (double v : f) {
    if (v < 0.0 || std::isnan(v)) throw InputError("f must take values in [0, inf]");
  }
  WeightedIntegral result;
  result.cover.delta = delta;
  result.cover.s = s;

  std::vector<int> support;
  for (int i = 0; i < space.size(); ++i) {
    if (f[static_cast<std::size_t>(i)] > 0.0) support.push_back(i);
  }
  if (support.empty()) return result;
  if (static_cast<int>(support.size()) > limits.max_support) {
    throw SizeError("weighted integral: support exceeds limit");
  }

  // Def 2.11 admits diam <= delta.
  auto candidates = candidate_diamonds(space, delta, pool, false, DiamBound::inclusive);
  if (static_cast<int>(candidates.size()) > limits.max_candidates) {
    throw SizeError("weighted integral: candidate pool exceeds limit");
  }

  std::vector<int> support_pos(static_cast<std::size_t>(space.size()), -1);
  for (std::size_t i = 0; i < support.size(); ++i) {
    support_pos[static_cast<std::size_t>(support[i])] = static_cast<int>(i);
  }
  std::vector<double> cost(candidates.size());
  std::vector<std::uint64_t> mask(candidates.size());
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    cost[c] = rho(s, candidates[c]);
    mask[c] = 0;
    for (int m : candidates[c].members) {
      const int pos = support_pos[static_cast<std::size_t>(m)];
      if (pos >= 0) mask[c] |= std::uint64_t{1} << pos;
    }
  }

  // Zero-cost diamonds satisfy their constraints for free: assign each the
  // largest demand it sees and drop those points from the program.
  std::vector<bool> satisfied(support.size(), false);
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    if (cost[c] != 0.0 || mask[c] == 0) continue;
    double need = 0.0;
    bool fresh = false;
    for (std::size_t i = 0; i < support.size(); ++i) {
      if (mask[c] >> i & 1) {
        need = std::max(need, f[static_cast<std::size_t>(support[i])]);
        if (!satisfied[i]) fresh = true;
        satisfied[i] = true;
      }
    }
    if (fresh) {
      result.cover.items.push_back({need, candidates[c]});
    }
  }

  std::vector<int> remaining;
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (!satisfied[i]) remaining.push_back(support[i]);
  }
  if (remaining.empty()) return result;

  // A remaining point inside no finite-cost candidate makes the infimum
  // empty; an infinite demand has no finite-weight majorant either.
  std::vector<int> live;  // candidate indices entering the LP
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    if (cost[c] > 0.0 && !std::isinf(cost[c]) && mask[c] != 0) live.push_back(static_cast<int>(c));
  }
  for (int x : remaining) {
    const int pos = support_pos[static_cast<std::size_t>(x)];
    const bool covered = std::any_of(live.begin(), live.end(), [&](int c) {
      return mask[static_cast<std::size_t>(c)] >> pos & 1;
    });
    if (!covered || std::isinf(f[static_cast<std::size_t>(x)])) {
      result.value = kInf;
      result.cover.items.clear();
      return result;
    }
  }

  std::vector<std::vector<double>> A(remaining.size(), std::vector<double>(live.size(), 0.0));
  std::vector<double> b(remaining.size());
  std::vector<double> c_vec(live.size());
  for (std::size_t r = 0; r < remaining.size(); ++r) {
    const int pos = support_pos[static_cast<std::size_t>(remaining[r])];
    b[r] = f[static_cast<std::size_t>(remaining[r])];
    for (std::size_t j = 0; j < live.size(); ++j) {
      A[r][j] = (mask[static_cast<std::size_t>(live[j])] >> pos & 1) ? 1.0 : 0.0;
    }
  }
  for (std::size_t j = 0; j < live.size(); ++j) c_vec[j] = cost[static_cast<std::size_t>(live[j])];

  const LpResult lp = method == IntegralMethod::lp ? solve_covering_lp(A, b, c_vec)
                                                   : enumerate_covering_lp(A, b, c_vec);
  result.value = lp.value;
  for (std::size_t j = 0; j < live.size(); ++j) {
    if (lp.x[j] > 1e-12) {
      result.cover.items.push_back({lp.x[j], candidates[static_cast<std::size_t>(live[j])]});
    }
  }
  return result;
}

PhiValue phi_delta(const CausalMap& map, std::span<const int> target, double s, double t,
                   double delta, std::span<const int> pool, const CoverLimits& limits) {
  const FiniteSpace& X = map.domain();
  PhiValue out;
  out.s = s;
  out.t = t;
  out.delta = delta;
  if (static_cast<int>(target.size()) > limits.max_target) {
    throw SizeError("phi_delta: target exceeds limit");
  }
  auto candidates = candidate_diamonds(X, delta, pool, false, DiamBound::strict);
  if (static_cast<int>(candidates.size()) > limits.max_candidates) {
    throw SizeError("phi_delta: candidate pool exceeds limit");
  }

  std::vector<int> target_pos(static_cast<std::size_t>(X.size()), -1);
  for (std::size_t i = 0; i < target.size(); ++i) {
    target_pos[static_cast<std::size_t>(target[i])] = static_cast<int>(i);
  }
  std::vector<SetCoverItem> items;
  items.reserve(candidates.size());
  for (const auto& d : candidates) {
    const CausalDiamond img = map.image_diamond(d.p, d.q);
    std::uint64_t m = 0;
    for (int x : d.members) {
      const int pos = target_pos[static_cast<std::size_t>(x)];
      if (pos >= 0) m |= std::uint64_t{1} << pos;
    }
    items.push_back({rho(s, img) * rho(t, d), m});
  }
  const std::uint64_t full = target.size() == 64
                                 ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << target.size()) - 1;
  const SetCoverSolution sc = exact_set_cover(items, full, static_cast<int>(target.size()));
  out.value = sc.cost;
  out.witness.s = t;
  out.witness.delta = delta;
  out.witness.certificate = Certificate::exact;
  out.witness.cost = sc.cost;
  for (int c : sc.chosen) out.witness.items.push_back({1.0, candidates[static_cast<std::size_t>(c)]});
  return out;
}

CoareaChainReport check_coarea_chain(const CausalMap& map, std::span<const int> target,
                                     double s, double t, double delta, double delta0,
                                     std::span<const int> pool, double tolerance,
                                     const CoverLimits& limits) {
  if (!(0.0 <= t && t <= s)) throw InputError("coarea chain requires 0 <= t <= s");
  if (!(delta > 0.0) || delta > delta0) throw InputError("coarea chain requires 0 < delta <= delta0");
  const FiniteSpace& X = map.domain();
  const FiniteSpace& Y = map.codomain();

  CoareaChainReport rep;
  rep.s = s;
  rep.t = t;
  rep.delta = delta;
  rep.delta0 = delta0;
  rep.tolerance = tolerance;

  const TlipVerdict tlip = tlip_estimate(map);
  rep.tlip = tlip.tlip;
  rep.eta = controlling_eta_at(map, delta);

  // V^s_delta(E) over the shared pool.
  const auto x_candidates = candidate_diamonds(X, delta, pool, false, DiamBound::strict);
  rep.v_witness = cover_value_exact(X, target, x_candidates, s, delta, limits);
  rep.v_s_delta = rep.v_witness.cost;

  // Phi^{t, s-t}.
  rep.phi_witness = phi_delta(map, target, t, s - t, delta, pool, limits);
  rep.phi = rep.phi_witness.value;

  // Fiber measures on the codomain universe at scale delta0.
  const auto fiber_candidates = candidate_diamonds(X, delta0, pool, false, DiamBound::strict);
  std::vector<double> g(static_cast<std::size_t>(Y.size()), 0.0);
  for (int y = 0; y < Y.size(); ++y) {
    std::vector<int> fiber;
    for (int x : target) {
      if (map.apply(x) == y) fiber.push_back(x);
    }
    const CoverSolution sol =
        cover_value_exact(X, fiber, fiber_candidates, s - t, delta0, limits);
    g[static_cast<std::size_t>(y)] = sol.cost;
    rep.fiber_values.emplace_back(y, sol.cost);
  }

  // Weighted integral over Y at scale eta(delta).
  const auto y_pool = Y.all_indices();
  const WeightedIntegral wi =
      weighted_causal_integral_delta(Y, g, t, rep.eta, y_pool, IntegralMethod::lp);
  rep.lhs = wi.value;
  rep.lhs_witness = wi.cover;

  const double cst = std::pow(tlip.tlip, t) * omega(s - t) * omega(t) / omega(s);
  rep.constant = cst;
  rep.rhs = std::isinf(rep.v_s_delta) ? kInf : cst * rep.v_s_delta;

  rep.step1_holds = leq_with_tol(rep.phi, rep.rhs, tolerance);
  rep.step2_holds = leq_with_tol(rep.lhs, rep.phi, tolerance);
  rep.end_to_end_holds = leq_with_tol(rep.lhs, rep.rhs, tolerance);
  return rep;
}

}  // namespace lcoarea
