#pragma once

#include <memory>

#include "lcoarea/measure.hpp"

namespace lcoarea {

/// Future-directed causal curve given by ordered samples, either as
/// Minkowski coordinates (piecewise-linear interpolation between samples)
/// or as indices into a finite space (purely discrete chain).
class CausalCurve {
 public:
  static CausalCurve from_events(std::vector<Event> samples);
  static CausalCurve from_space(std::shared_ptr<const FiniteSpace> space,
                                std::vector<int> samples);

  bool minkowski() const { return space_ == nullptr; }
  int sample_count() const;

  double tau(int i, int j) const;
  double dist(int i, int j) const;
  Event event(int i) const;  // Minkowski curves only
  const std::vector<int>& indices() const { return idx_; }
  const FiniteSpace* space() const { return space_.get(); }

  /// Max pairwise distance among samples i..j — the member diameter of the
  /// covering diamond J(sample_i, sample_j) along the chain.
  double segment_diam(int i, int j) const;

 private:
  CausalCurve() = default;
  std::vector<Event> events_;
  std::shared_ptr<const FiniteSpace> space_;
  std::vector<int> idx_;
};

struct TauLengthResult {
  double value = 0.0;
  std::vector<double> per_level;
};

/// tau-length: the infimum over partitions of sum tau(gamma(t_i),
/// gamma(t_{i+1})). Minkowski curves anchor partitions to the samples and
/// refine dyadically up to `refinement_levels` (per-level sums are
/// non-increasing by the reverse triangle inequality); discrete chains
/// take the exact minimum over all sub-partitions by dynamic programming.
TauLengthResult tau_length(const CausalCurve& curve, int refinement_levels = 6);

/// V^1-style cover value of the curve at scale delta: the cheapest family
/// of sample-pair diamonds J(gamma_i, gamma_j), diam < delta, whose
/// parameter intervals [i,j] cover the whole range (so the family covers
/// the curve image, not just the sample set). rho_1 = tau makes the cost
/// of a partition exactly its tau-sum. A single sample admits no p < q
/// diamond, so its value is +inf.
CoverSolution v1_of_curve(const CausalCurve& curve, double delta);

}  // namespace lcoarea
