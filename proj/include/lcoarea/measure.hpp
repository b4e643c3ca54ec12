#pragma once

#include <span>

#include "lcoarea/space.hpp"

namespace lcoarea {

/// Normalizing volume of the unit causal diamond:
///   omega_N = pi^((N-1)/2) / (N * Gamma((N+1)/2) * 2^(N-1))   for N > 0,
/// evaluated through lgamma for stability. omega_0 := 1 by convention
/// (the formula divides by N), so that rho_0 acts as a counting weight
/// and the coarea constant collapses to (TLip U)^t when s = t.
double omega(double n);

/// rho_s of a diamond with the given tau:
///   empty -> 0; tau = inf -> inf; s > 0, tau = 0 -> 0;
///   s = 0, nonempty -> 1 (0^0 := 1); otherwise omega_s * tau^s.
double rho(double s, double tau, bool nonempty);
double rho(double s, const CausalDiamond& d);

enum class DiamBound { strict, inclusive };  // diam < delta vs diam <= delta

/// All J(p,q) with p < q drawn from the pool whose member diameter passes
/// the delta bound (plain measure covers use the strict bound; weighted
/// covers the inclusive one). require_timelike keeps only p << q pairs.
std::vector<CausalDiamond> candidate_diamonds(const FiniteSpace& space, double delta,
                                              std::span<const int> pool,
                                              bool require_timelike,
                                              DiamBound bound = DiamBound::strict);

/// Chronological candidates I(p,q), p << q, membership by the strict
/// relation, nonempty only, diam <= delta (the strong measure convention).
std::vector<CausalDiamond> chronological_candidates(const FiniteSpace& space, double delta,
                                                    std::span<const int> pool);

enum class Certificate { exact, greedy, structured };

struct CoverSolution {
  struct Item {
    double weight = 1.0;
    CausalDiamond diamond;
  };
  std::vector<Item> items;
  double cost = 0.0;
  double delta = 0.0;
  double s = 0.0;
  Certificate certificate = Certificate::exact;
};

struct CoverLimits {
  int max_target = 20;
  int max_candidates = 200;
};

/// Generic minimum-cost set cover over bitmasks (targets <= 64).
/// Branch and bound; the bound charges every uncovered point the cheapest
/// amortized cost cost(S)/|S ∩ uncovered| over sets containing it, which
/// never exceeds the cost of completing the cover. Infinite-cost items are
/// dropped; cost = inf with no chosen items when no cover exists.
struct SetCoverItem {
  double cost = 0.0;
  std::uint64_t mask = 0;
};
struct SetCoverSolution {
  double cost = 0.0;
  std::vector<int> chosen;  // indices into items, ascending
};
SetCoverSolution exact_set_cover(const std::vector<SetCoverItem>& items,
                                 std::uint64_t full_mask, int n_points);

/// Minimum of sum rho_s(J_i) over subfamilies of `candidates` covering
/// `target` (the inner infimum of the Lorentzian Hausdorff pre-measure at
/// fixed delta). Exact branch-and-bound; equals full subset enumeration on
/// small instances. SizeError beyond the limits directs callers to greedy.
CoverSolution cover_value_exact(const FiniteSpace& space, std::span<const int> target,
                                const std::vector<CausalDiamond>& candidates, double s,
                                double delta, const CoverLimits& limits = {});

/// Greedy upper bound: repeatedly picks the candidate with minimal
/// rho_s per newly covered point; ties break by smaller diameter, then by
/// lexicographic vertex ids. Never below the exact value.
CoverSolution cover_value_greedy(const FiniteSpace& space, std::span<const int> target,
                                 const std::vector<CausalDiamond>& candidates, double s,
                                 double delta);

enum class CoverMethod { exact, greedy };

struct MeasureEstimate {
  double s = 0.0;
  std::vector<double> schedule;  // strictly decreasing deltas
  std::vector<double> values;    // best cover value per delta
  bool converged = false;
  double tolerance = 0.0;
  Certificate certificate = Certificate::exact;
};

/// Best cover value per schedule entry. Exact values are non-decreasing as
/// delta shrinks (a cover at a smaller delta is admissible at any larger
/// one); greedy values are smoothed to the best cover found at or below
/// each scale so the same postcondition holds.
MeasureEstimate estimate_measure(const FiniteSpace& space, std::span<const int> target,
                                 double s, const std::vector<double>& schedule,
                                 CoverMethod method, std::span<const int> pool,
                                 double tolerance = 1e-9, const CoverLimits& limits = {});

/// Strong (chronological) measure value M^s_delta: the same covering
/// optimization over I(p,q) candidates with rho_s(I(p,q)) = omega_s tau^s
/// and membership by <<.
CoverSolution strong_measure_value(const FiniteSpace& space, std::span<const int> target,
                                   double delta, std::span<const int> pool, double s,
                                   const CoverLimits& limits = {});

/// Structured witness cover for the volume theorem in R^{1,1}: in null
/// coordinates the diamond is an axis-aligned square; k^2 congruent tiles
/// each have tau/k, so the total cost k^2 * omega_2 (tau/k)^2 collapses to
/// omega_2 tau^2 exactly. Requires p << q and spatial dimension 1.
CoverSolution minkowski_null_tiling(const MinkDiamond& diamond, int k);

/// Sums a set of costs in ascending order so equal families reported by
/// different routes agree bit-for-bit.
double canonical_sum(std::vector<double> values);

}  // namespace lcoarea
