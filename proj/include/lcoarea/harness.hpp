#pragma once

#include "lcoarea/backends.hpp"
#include "lcoarea/covering.hpp"
#include "lcoarea/integration.hpp"
#include "lcoarea/json_io.hpp"

namespace lcoarea {

struct ExperimentConfig {
  std::shared_ptr<const FiniteSpace> X;
  std::shared_ptr<const FiniteSpace> Y;
  std::vector<int> mapping;
  std::vector<int> target;  // E
  std::vector<int> pool;    // X-side vertex pool shared by every cover
  double s = 1.0;
  double t = 1.0;
  double delta = 3.0;
  double delta0 = 3.0;
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  std::string source = "explicit";

  CausalMap map() const { return CausalMap(X, Y, mapping); }
};

/// Config document: either {"generator": {"seed": K}} or explicit
/// {"x": {...}|{"file": p}, "y": ..., "map": {"table": {...}}|{"rule": r},
/// "e": [...], "pool": [...], "s", "t", "delta", "delta0", "tolerance"}.
ExperimentConfig config_from_json(const nlohmann::json& doc);

struct CoareaReport {
  ExperimentConfig config;
  bool aborted = false;
  std::string abort_reason;
  PreservationVerdict preservation;
  TlipVerdict tlip;
  CoareaChainReport chain;
  double slack = 0.0;  // rhs - lhs
  bool passed = false;
};

/// End-to-end fixed-scale coarea experiment: runs the map verdicts, aborts
/// with them when they fail, otherwise evaluates the full chain and the
/// constant (TLip U)^t omega_{s-t} omega_t / omega_s.
CoareaReport run_coarea_experiment(const ExperimentConfig& cfg);

ordered_json to_json(const CoareaReport& report);

/// Reports for a batch of seeds, merged in seed order. Instances run
/// concurrently up to thread_cap().
std::vector<CoareaReport> run_coarea_batch(const std::vector<std::uint64_t>& seeds,
                                           double tolerance = 1e-9);

/// Seeded random instance for the coarea property suite: X is a layered
/// Minkowski set in R^{1,1} (levels are spacelike, so fibers are
/// antichains), Y a timelike chain on R^{1,0}, U the level quotient.
/// Instances are resampled until every related pair is timelike with
/// eccentricity diam/tau at most 3.
ExperimentConfig random_coarea_instance(std::uint64_t seed);

/// Structured null-tiling values for the R^{1,1} diamond of the given tau
/// at each scale of the schedule; every value equals omega_2 tau^2.
MeasureEstimate run_minkowski_volume_experiment(double tau, const std::vector<double>& schedule);

struct DensityDiagnostic {
  double s = 0.0;
  double epsilon = 0.0;
  int samples = 0;
  int violations = 0;
  double fraction = 0.0;
};

/// For sampled x in E and the smallest pool diamond J containing x,
/// evaluates V^s_delta(E ∩ J) at the smallest feasible delta and counts
/// violations of V <= (1+epsilon) rho_s(J). Diagnostic only; the lemma it
/// shadows is an a.e. statement in the limit.
DensityDiagnostic density_diagnostic(const FiniteSpace& space, std::span<const int> target,
                                     double s, double epsilon, int samples,
                                     std::uint64_t seed);

struct StrongVsCausalReport {
  double s = 0.0;
  double delta = 0.0;
  double v_delta = 0.0;  // V^s_delta on the ambient instance
  double m_delta = 0.0;  // M^s_delta on the ambient instance
  bool ge_holds = false;
  struct EpsEntry {
    double eps = 0.0;
    double m_eps_delta = 0.0;
    double bound = 0.0;  // (eps - 1) + V^s_delta
    bool holds = false;
    int infeasible_estimations = 0;
  };
  std::vector<EpsEntry> entries;
  std::vector<Event> ambient;  // pushed vertices added to the pool
  CoverSolution v_witness;
  CoverSolution m_witness;
};

/// Strong-vs-causal comparison on a Minkowski-embedded chain: builds the
/// ambient pool from chronological estimations of the optimal causal
/// cover (per-diamond eps2 chosen so the rho_s increments sum below
/// eps - 1), then checks M^s_delta >= V^s_delta and
/// M^s_{eps delta} <= (eps - 1) + V^s_delta.
StrongVsCausalReport strong_vs_causal_test(const std::vector<Event>& chain, double s,
                                           double delta, const std::vector<double>& eps_list,
                                           const CoverLimits& limits = {});

ordered_json to_json(const FiniteSpace& ambient_space, const StrongVsCausalReport& r);

struct CoveringDemo {
  std::vector<Event> targets;
  VitaliCertificate certificate;
  VitaliVerification verification;
};

/// Seeded Vitali demo: a sprinkled target set in the unit diamond of
/// R^{1,1} covered by n anchored timelike diamonds with eccentricity at
/// most ecc_max, selected and then re-verified.
CoveringDemo covering_demo(std::uint64_t seed, int n_diamonds, double ecc_max,
                           int witness_samples);

}  // namespace lcoarea
