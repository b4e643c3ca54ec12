#include "lcoarea/measure.hpp"

#include <algorithm>
#include <cmath>
#include <bit>
#include <numbers>

namespace lcoarea {

double omega(double n) {
  if (n < 0.0) throw InputError("omega: dimension must be nonnegative");
  if (n == 0.0) return 1.0;
  const double log_pi = std::log(std::numbers::pi);
  const double log_w = 0.5 * (n - 1.0) * log_pi - std::log(n) -
                       std::lgamma(0.5 * (n + 1.0)) - (n - 1.0) * std::numbers::ln2;
  return std::exp(log_w);
}

double rho(double s, double tau, bool nonempty) {
  if (!nonempty) return 0.0;
  if (std::isinf(tau)) return kInf;
  if (s == 0.0) return 1.0;  // 0^0 := 1 on nonempty diamonds
  if (tau == 0.0) return 0.0;
  return omega(s) * std::pow(tau, s);
}

double rho(double s, const CausalDiamond& d) { return rho(s, d.tau, d.nonempty); }

double canonical_sum(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  double total = 0.0;
  for (double v : values) total += v;
  return total;
}

std::vector<CausalDiamond> candidate_diamonds(const FiniteSpace& space, double delta,
                                              std::span<const int> pool,
                                              bool require_timelike, DiamBound bound) {
  for (int i : pool) {
    if (i < 0 || i >= space.size()) throw InputError("pool index out of range");
  }
  std::vector<CausalDiamond> out;
  for (std::size_t a = 0; a < pool.size(); ++a) {
    for (std::size_t b = 0; b < pool.size(); ++b) {
      const int p = pool[a];
      const int q = pool[b];
      if (p == q || !space.le(p, q)) continue;
      if (require_timelike && !space.ll(p, q)) continue;
      CausalDiamond d = space.diamond(p, q);
      const bool fits = bound == DiamBound::strict ? d.diam < delta : d.diam <= delta;
      if (fits) out.push_back(std::move(d));
    }
  }
  return out;
}

std::vector<CausalDiamond> chronological_candidates(const FiniteSpace& space, double delta,
                                                    std::span<const int> pool) {
  std::vector<CausalDiamond> out;
  for (std::size_t a = 0; a < pool.size(); ++a) {
    for (std::size_t b = 0; b < pool.size(); ++b) {
      const int p = pool[a];
      const int q = pool[b];
      if (p == q || !space.ll(p, q)) continue;
      CausalDiamond d = space.chronological_diamond(p, q);
      if (d.nonempty && d.diam <= delta) out.push_back(std::move(d));
    }
  }
  return out;
}

namespace {

struct CoverState {
  const std::vector<SetCoverItem>* items;
  std::vector<std::vector<int>> covering;  // per point: items containing it
  double best_cost = kInf;
  std::vector<int> best_chosen;
  std::vector<int> chosen;
  int n_points = 0;
};

// Admissible lower bound for completing `uncovered`: each point is charged
// the cheapest cost-share cost(S)/|S ∩ uncovered| over sets containing it.
double completion_bound(const CoverState& st, std::uint64_t uncovered) {
  double bound = 0.0;
  for (int x = 0; x < st.n_points; ++x) {
    if (!(uncovered >> x & 1)) continue;
    double cheapest = kInf;
    for (int c : st.covering[static_cast<std::size_t>(x)]) {
      const auto& item = (*st.items)[static_cast<std::size_t>(c)];
      const int fresh = std::popcount(item.mask & uncovered);
      if (fresh > 0) cheapest = std::min(cheapest, item.cost / fresh);
    }
    if (std::isinf(cheapest)) return kInf;
    bound += cheapest;
  }
  return bound;
}

void branch(CoverState& st, std::uint64_t uncovered, double cost) {
  if (uncovered == 0) {
    if (cost < st.best_cost) {
      st.best_cost = cost;
      st.best_chosen = st.chosen;
    }
    return;
  }
  const double bound = completion_bound(st, uncovered);
  if (std::isinf(bound) || cost + bound >= st.best_cost) return;

  // Branch on the uncovered point with the fewest usable candidates.
  int pick = -1;
  int fewest = std::numeric_limits<int>::max();
  for (int x = 0; x < st.n_points; ++x) {
    if (!(uncovered >> x & 1)) continue;
    int usable = 0;
    for (int c : st.covering[static_cast<std::size_t>(x)]) {
      if ((*st.items)[static_cast<std::size_t>(c)].mask & uncovered) ++usable;
    }
    if (usable < fewest) {
      fewest = usable;
      pick = x;
    }
  }
  for (int c : st.covering[static_cast<std::size_t>(pick)]) {
    const auto& item = (*st.items)[static_cast<std::size_t>(c)];
    st.chosen.push_back(c);
    branch(st, uncovered & ~item.mask, cost + item.cost);
    st.chosen.pop_back();
  }
}

}  // namespace

SetCoverSolution exact_set_cover(const std::vector<SetCoverItem>& items,
                                 std::uint64_t full_mask, int n_points) {
  if (n_points > 64) throw SizeError("set cover supports at most 64 target points");
  SetCoverSolution sol;
  if (full_mask == 0) return sol;

  CoverState st;
  st.items = &items;
  st.n_points = n_points;
  st.covering.resize(static_cast<std::size_t>(n_points));
  std::uint64_t zero_mask = 0;
  std::vector<int> zero_chosen;
  for (std::size_t c = 0; c < items.size(); ++c) {
    if (std::isinf(items[c].cost)) continue;  // rho = inf never covers finitely
    if (items[c].cost == 0.0) {
      // Free candidates are taken whenever they cover something new.
      if (items[c].mask & full_mask & ~zero_mask) {
        zero_mask |= items[c].mask;
        zero_chosen.push_back(static_cast<int>(c));
      }
      continue;
    }
    for (int x = 0; x < n_points; ++x) {
      if (items[c].mask >> x & 1) st.covering[static_cast<std::size_t>(x)].push_back(static_cast<int>(c));
    }
  }

  branch(st, full_mask & ~zero_mask, 0.0);
  if (std::isinf(st.best_cost)) {
    sol.cost = kInf;
    return sol;
  }
  sol.chosen = zero_chosen;
  sol.chosen.insert(sol.chosen.end(), st.best_chosen.begin(), st.best_chosen.end());
  std::sort(sol.chosen.begin(), sol.chosen.end());
  std::vector<double> costs;
  costs.reserve(sol.chosen.size());
  for (int c : sol.chosen) costs.push_back(items[static_cast<std::size_t>(c)].cost);
  sol.cost = canonical_sum(std::move(costs));
  return sol;
}

namespace {

std::uint64_t target_mask(const CausalDiamond& d, const std::vector<int>& target_pos) {
  std::uint64_t mask = 0;
  for (int m : d.members) {
    const int pos = target_pos[static_cast<std::size_t>(m)];
    if (pos >= 0) mask |= std::uint64_t{1} << pos;
  }
  return mask;
}

CoverSolution assemble(const std::vector<CausalDiamond>& candidates,
                       const SetCoverSolution& sc, double s, double delta,
                       Certificate cert) {
  CoverSolution out;
  out.s = s;
  out.delta = delta;
  out.certificate = cert;
  out.cost = sc.cost;
  for (int c : sc.chosen) {
    out.items.push_back({1.0, candidates[static_cast<std::size_t>(c)]});
  }
  return out;
}

}  // namespace

CoverSolution cover_value_exact(const FiniteSpace& space, std::span<const int> target,
                                const std::vector<CausalDiamond>& candidates, double s,
                                double delta, const CoverLimits& limits) {
  if (static_cast<int>(target.size()) > limits.max_target) {
    throw SizeError("cover_value_exact: target exceeds " + std::to_string(limits.max_target) +
                    " points; use the greedy method");
  }
  if (static_cast<int>(candidates.size()) > limits.max_candidates) {
    throw SizeError("cover_value_exact: candidate pool exceeds " +
                    std::to_string(limits.max_candidates) + "; use the greedy method");
  }
  std::vector<int> target_pos(static_cast<std::size_t>(space.size()), -1);
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (target[i] < 0 || target[i] >= space.size()) throw InputError("target index out of range");
    target_pos[static_cast<std::size_t>(target[i])] = static_cast<int>(i);
  }
  std::vector<SetCoverItem> items;
  items.reserve(candidates.size());
  for (const auto& d : candidates) {
    items.push_back({rho(s, d), target_mask(d, target_pos)});
  }
  const std::uint64_t full = target.size() == 64
                                 ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << target.size()) - 1;
  const SetCoverSolution sc = exact_set_cover(items, full, static_cast<int>(target.size()));
  return assemble(candidates, sc, s, delta, Certificate::exact);
}

CoverSolution cover_value_greedy(const FiniteSpace& space, std::span<const int> target,
                                 const std::vector<CausalDiamond>& candidates, double s,
                                 double delta) {
  if (target.size() > 64) throw SizeError("greedy cover supports at most 64 target points");
  std::vector<int> target_pos(static_cast<std::size_t>(space.size()), -1);
  for (std::size_t i = 0; i < target.size(); ++i) {
    target_pos[static_cast<std::size_t>(target[i])] = static_cast<int>(i);
  }
  std::vector<double> costs(candidates.size());
  std::vector<std::uint64_t> masks(candidates.size());
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    costs[c] = rho(s, candidates[c]);
    masks[c] = target_mask(candidates[c], target_pos);
  }
  const std::uint64_t full = target.size() == 64
                                 ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << target.size()) - 1;
  std::uint64_t uncovered = full;
  SetCoverSolution sc;
  while (uncovered != 0) {
    int pick = -1;
    double pick_ratio = kInf;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (std::isinf(costs[c])) continue;
      const int fresh = std::popcount(masks[c] & uncovered);
      if (fresh == 0) continue;
      const double ratio = costs[c] / fresh;
      bool better = ratio < pick_ratio;
      if (!better && ratio == pick_ratio && pick >= 0) {
        const auto& cur = candidates[c];
        const auto& old = candidates[static_cast<std::size_t>(pick)];
        if (cur.diam != old.diam) {
          better = cur.diam < old.diam;
        } else {
          const auto key = [&space](const CausalDiamond& d) {
            return std::make_pair(space.point(d.p).id, space.point(d.q).id);
          };
          better = key(cur) < key(old);
        }
      }
      if (better) {
        pick = static_cast<int>(c);
        pick_ratio = ratio;
      }
    }
    if (pick < 0) {  // some target point is uncoverable
      SetCoverSolution failed;
      failed.cost = kInf;
      return assemble(candidates, failed, s, delta, Certificate::greedy);
    }
    sc.chosen.push_back(pick);
    uncovered &= ~masks[static_cast<std::size_t>(pick)];
  }
  std::sort(sc.chosen.begin(), sc.chosen.end());
  std::vector<double> picked;
  for (int c : sc.chosen) picked.push_back(costs[static_cast<std::size_t>(c)]);
  sc.cost = canonical_sum(std::move(picked));
  return assemble(candidates, sc, s, delta, Certificate::greedy);
}

MeasureEstimate estimate_measure(const FiniteSpace& space, std::span<const int> target,
                                 double s, const std::vector<double>& schedule,
                                 CoverMethod method, std::span<const int> pool,
                                 double tolerance, const CoverLimits& limits) {
  for (std::size_t i = 1; i < schedule.size(); ++i) {
    if (!(schedule[i] < schedule[i - 1])) {
      throw InputError("estimate_measure: schedule must be strictly decreasing");
    }
  }
  MeasureEstimate est;
  est.s = s;
  est.schedule = schedule;
  est.tolerance = tolerance;
  est.certificate = method == CoverMethod::exact ? Certificate::exact : Certificate::greedy;
  for (double delta : schedule) {
    const auto candidates = candidate_diamonds(space, delta, pool, false, DiamBound::strict);
    const CoverSolution sol = method == CoverMethod::exact
                                  ? cover_value_exact(space, target, candidates, s, delta, limits)
                                  : cover_value_greedy(space, target, candidates, s, delta);
    est.values.push_back(sol.cost);
  }
  if (method == CoverMethod::greedy) {
    // A cover found at a smaller delta is admissible at every larger one,
    // so the best-found value at each scale is the running minimum from
    // the small-delta end.
    for (std::size_t i = est.values.size(); i-- > 1;) {
      est.values[i - 1] = std::min(est.values[i - 1], est.values[i]);
    }
  }
  for (std::size_t i = 1; i < est.values.size(); ++i) {
    if (est.values[i] < est.values[i - 1]) {
      throw InternalError("estimate_measure: values not monotone under refinement");
    }
  }
  if (est.values.size() >= 2) {
    const double a = est.values[est.values.size() - 2];
    const double b = est.values.back();
    est.converged = std::isinf(a) ? std::isinf(b) : std::abs(b - a) <= tolerance;
  }
  return est;
}

CoverSolution strong_measure_value(const FiniteSpace& space, std::span<const int> target,
                                   double delta, std::span<const int> pool, double s,
                                   const CoverLimits& limits) {
  const auto candidates = chronological_candidates(space, delta, pool);
  if (static_cast<int>(candidates.size()) > limits.max_candidates) {
    throw SizeError("strong_measure_value: candidate pool exceeds limit");
  }
  if (static_cast<int>(target.size()) > limits.max_target) {
    throw SizeError("strong_measure_value: target exceeds limit");
  }
  return cover_value_exact(space, target, candidates, s, delta, limits);
}

CoverSolution minkowski_null_tiling(const MinkDiamond& diamond, int k) {
  if (diamond.p.size() != 2 || diamond.q.size() != 2) {
    throw UnsupportedError("null tiling requires spatial dimension 1");
  }
  if (!mink::ll(diamond.p, diamond.q)) {
    throw InputError("null tiling requires a timelike vertex pair");
  }
  if (k < 1) throw InputError("null tiling requires k >= 1");
  const NullRect r = to_null_rect(diamond);
  const double du = (r.u1 - r.u0) / k;
  const double dv = (r.v1 - r.v0) / k;
  CoverSolution out;
  out.s = 2.0;
  out.certificate = Certificate::structured;
  std::vector<double> costs;
  costs.reserve(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const NullRect tile{r.u0 + i * du, r.u0 + (i + 1) * du,
                          r.v0 + j * dv, r.v0 + (j + 1) * dv};
      const MinkDiamond t = from_null_rect(tile);
      CausalDiamond d;
      d.tau = t.tau();
      d.diam = t.diam();
      d.nonempty = true;
      d.vertices = std::make_pair(t.p, t.q);
      costs.push_back(rho(2.0, d));
      out.items.push_back({1.0, std::move(d)});
      out.delta = std::max(out.delta, out.items.back().diamond.diam);
    }
  }
  out.cost = canonical_sum(std::move(costs));
  return out;
}

}  // namespace lcoarea
