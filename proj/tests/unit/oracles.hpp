#pragma once

// Independent brute-force oracles for the test suites. Nothing here shares
// a code path with the solvers it checks.

#include <algorithm>
#include <array>
#include <functional>
#include <vector>

#include "lcoarea/measure.hpp"

namespace lcoarea::oracle {

/// Minimum-cost cover by full subset enumeration (candidates <= 20).
inline double brute_force_cover(const std::vector<double>& costs,
                                const std::vector<std::uint64_t>& masks,
                                std::uint64_t full_mask) {
  const std::size_t n = costs.size();
  if (n > 20) throw SizeError("brute force limited to 20 candidates");
  double best = kInf;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << n); ++pick) {
    std::uint64_t covered = 0;
    std::vector<double> used;
    for (std::size_t c = 0; c < n; ++c) {
      if (pick >> c & 1) {
        covered |= masks[c];
        used.push_back(costs[c]);
      }
    }
    if ((covered & full_mask) != full_mask) continue;
    best = std::min(best, canonical_sum(std::move(used)));
  }
  return best;
}

/// Cover oracle over diamond candidates relative to a target list.
inline double brute_force_cover(const FiniteSpace& space, const std::vector<int>& target,
                                const std::vector<CausalDiamond>& candidates, double s) {
  std::vector<int> pos(static_cast<std::size_t>(space.size()), -1);
  for (std::size_t i = 0; i < target.size(); ++i) {
    pos[static_cast<std::size_t>(target[i])] = static_cast<int>(i);
  }
  std::vector<double> costs;
  std::vector<std::uint64_t> masks;
  for (const auto& d : candidates) {
    costs.push_back(rho(s, d));
    std::uint64_t m = 0;
    for (int x : d.members) {
      if (pos[static_cast<std::size_t>(x)] >= 0) {
        m |= std::uint64_t{1} << pos[static_cast<std::size_t>(x)];
      }
    }
    masks.push_back(m);
  }
  const std::uint64_t full = target.size() >= 64 ? ~std::uint64_t{0}
                                                 : (std::uint64_t{1} << target.size()) - 1;
  return brute_force_cover(costs, masks, full);
}

/// Longest path in a DAG by exhaustive walk enumeration (small graphs).
inline double brute_force_longest_path(int n, const std::vector<std::array<double, 3>>& edges,
                                       int src, int dst) {
  double best = -1.0;
  std::vector<std::vector<std::pair<int, double>>> adj(static_cast<std::size_t>(n));
  for (const auto& e : edges) {
    adj[static_cast<std::size_t>(e[0])].push_back({static_cast<int>(e[1]), e[2]});
  }
  std::function<void(int, double)> walk = [&](int v, double len) {
    if (v == dst) best = std::max(best, len);
    for (const auto& [w, c] : adj[static_cast<std::size_t>(v)]) walk(w, len + c);
  };
  walk(src, 0.0);
  return best < 0.0 ? 0.0 : best;
}

}  // namespace lcoarea::oracle
