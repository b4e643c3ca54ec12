#include "lcoarea/curves.hpp"

#include <algorithm>
#include <cmath>

namespace lcoarea {

CausalCurve CausalCurve::from_events(std::vector<Event> samples) {
  if (samples.size() < 1) throw InputError("curve needs at least one sample");
  CausalCurve c;
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    if (!mink::le(samples[i], samples[i + 1])) {
      throw InputError("non-causal consecutive pair at sample " + std::to_string(i));
    }
  }
  bool constant = true;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (samples[i] != samples[0]) constant = false;
  }
  if (samples.size() > 1 && constant) throw InputError("curve must be non-constant");
  c.events_ = std::move(samples);
  return c;
}

CausalCurve CausalCurve::from_space(std::shared_ptr<const FiniteSpace> space,
                                    std::vector<int> samples) {
  if (!space) throw InputError("curve needs a space");
  if (samples.size() < 1) throw InputError("curve needs at least one sample");
  for (int i : samples) {
    if (i < 0 || i >= space->size()) throw InputError("curve sample out of range");
  }
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    if (!space->le(samples[i], samples[i + 1])) {
      throw InputError("non-causal consecutive pair at sample " + std::to_string(i));
    }
  }
  bool constant = true;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (samples[i] != samples[0]) constant = false;
  }
  if (samples.size() > 1 && constant) throw InputError("curve must be non-constant");
  CausalCurve c;
  c.space_ = std::move(space);
  c.idx_ = std::move(samples);
  return c;
}

int CausalCurve::sample_count() const {
  return static_cast<int>(minkowski() ? events_.size() : idx_.size());
}

double CausalCurve::tau(int i, int j) const {
  if (minkowski()) {
    return mink::tau(events_[static_cast<std::size_t>(i)], events_[static_cast<std::size_t>(j)]);
  }
  return space_->tau(idx_[static_cast<std::size_t>(i)], idx_[static_cast<std::size_t>(j)]);
}

double CausalCurve::dist(int i, int j) const {
  if (minkowski()) {
    return mink::dist(events_[static_cast<std::size_t>(i)], events_[static_cast<std::size_t>(j)]);
  }
  return space_->dist(idx_[static_cast<std::size_t>(i)], idx_[static_cast<std::size_t>(j)]);
}

Event CausalCurve::event(int i) const {
  if (!minkowski()) throw UnsupportedError("coordinate access on a discrete curve");
  return events_[static_cast<std::size_t>(i)];
}

double CausalCurve::segment_diam(int i, int j) const {
  if (minkowski()) {
    // Closed form: the vertex pair realizes the diameter of the solid
    // diamond, and the interpolated arc stays inside it.
    return dist(i, j);
  }
  double d = 0.0;
  for (int a = i; a <= j; ++a) {
    for (int b = a + 1; b <= j; ++b) d = std::max(d, dist(a, b));
  }
  return d;
}

TauLengthResult tau_length(const CausalCurve& curve, int refinement_levels) {
  const int n = curve.sample_count();
  TauLengthResult out;
  if (n < 2) {
    out.per_level = {0.0};
    return out;
  }
  if (!curve.minkowski()) {
    // Exact infimum over sub-partitions anchored to the samples: shortest
    // path over tau weights.
    std::vector<double> best(static_cast<std::size_t>(n), kInf);
    best[0] = 0.0;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) {
        best[static_cast<std::size_t>(j)] =
            std::min(best[static_cast<std::size_t>(j)],
                     best[static_cast<std::size_t>(i)] + curve.tau(i, j));
      }
    }
    out.value = best[static_cast<std::size_t>(n - 1)];
    out.per_level = {out.value};
    return out;
  }
  if (refinement_levels < 0) throw InputError("refinement levels must be nonnegative");
  for (int level = 0; level <= refinement_levels; ++level) {
    const int pieces = 1 << level;
    double sum = 0.0;
    for (int seg = 0; seg + 1 < n; ++seg) {
      const Event a = curve.event(seg);
      const Event b = curve.event(seg + 1);
      Event prev = a;
      for (int k = 1; k <= pieces; ++k) {
        Event mid(a.size());
        const double w = static_cast<double>(k) / pieces;
        for (std::size_t c = 0; c < a.size(); ++c) mid[c] = (1.0 - w) * a[c] + w * b[c];
        sum += mink::tau(prev, mid);
        prev = std::move(mid);
      }
    }
    out.per_level.push_back(sum);
  }
  out.value = *std::min_element(out.per_level.begin(), out.per_level.end());
  return out;
}

CoverSolution v1_of_curve(const CausalCurve& curve, double delta) {
  const int n = curve.sample_count();
  CoverSolution out;
  out.s = 1.0;
  out.delta = delta;
  out.certificate = Certificate::exact;
  if (n < 2) {
    // No p < q pair exists, so an isolated sample is uncoverable.
    out.cost = kInf;
    return out;
  }

  struct Interval {
    int i, j;
    double cost;
  };
  std::vector<Interval> intervals;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (curve.segment_diam(i, j) >= delta) continue;
      const double c = curve.tau(i, j);
      if (std::isinf(c)) continue;
      intervals.push_back({i, j, c});
    }
  }

  // Cheapest interval cover of [0, n-1]: from any reached position a, an
  // interval [i, j] with i <= a < j extends coverage to j.
  std::vector<double> best(static_cast<std::size_t>(n), kInf);
  std::vector<int> via(static_cast<std::size_t>(n), -1);
  std::vector<int> from(static_cast<std::size_t>(n), -1);
  best[0] = 0.0;
  for (int a = 0; a + 1 < n; ++a) {
    if (std::isinf(best[static_cast<std::size_t>(a)])) continue;
    for (std::size_t k = 0; k < intervals.size(); ++k) {
      const auto& iv = intervals[k];
      if (iv.i > a || iv.j <= a) continue;
      const double cand = best[static_cast<std::size_t>(a)] + iv.cost;
      if (cand < best[static_cast<std::size_t>(iv.j)]) {
        best[static_cast<std::size_t>(iv.j)] = cand;
        via[static_cast<std::size_t>(iv.j)] = static_cast<int>(k);
        from[static_cast<std::size_t>(iv.j)] = a;
      }
    }
  }
  out.cost = best[static_cast<std::size_t>(n - 1)];
  if (std::isinf(out.cost)) return out;

  std::vector<int> chosen;
  for (int at = n - 1; at != 0; at = from[static_cast<std::size_t>(at)]) {
    chosen.push_back(via[static_cast<std::size_t>(at)]);
  }
  std::reverse(chosen.begin(), chosen.end());
  std::vector<double> costs;
  for (int k : chosen) {
    const auto& iv = intervals[static_cast<std::size_t>(k)];
    CausalDiamond d;
    d.p = iv.i;
    d.q = iv.j;
    d.tau = curve.tau(iv.i, iv.j);
    d.diam = curve.segment_diam(iv.i, iv.j);
    d.nonempty = true;
    if (curve.minkowski()) d.vertices = std::make_pair(curve.event(iv.i), curve.event(iv.j));
    out.items.push_back({1.0, std::move(d)});
    costs.push_back(iv.cost);
  }
  out.cost = canonical_sum(std::move(costs));
  return out;
}

}  // namespace lcoarea
