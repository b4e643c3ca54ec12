#pragma once

#include <memory>

#include "lcoarea/space.hpp"

namespace lcoarea {

/// Point map between two finite spaces, stored as an index table.
class CausalMap {
 public:
  CausalMap(std::shared_ptr<const FiniteSpace> domain,
            std::shared_ptr<const FiniteSpace> codomain, std::vector<int> mapping);

  const FiniteSpace& domain() const { return *domain_; }
  const FiniteSpace& codomain() const { return *codomain_; }
  std::shared_ptr<const FiniteSpace> domain_ptr() const { return domain_; }
  std::shared_ptr<const FiniteSpace> codomain_ptr() const { return codomain_; }
  int apply(int i) const { return mapping_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& mapping() const { return mapping_; }

  /// Image diamond J(U(p), U(q)) in the codomain.
  CausalDiamond image_diamond(int p, int q) const;

 private:
  std::shared_ptr<const FiniteSpace> domain_;
  std::shared_ptr<const FiniteSpace> codomain_;
  std::vector<int> mapping_;
};

/// Timelike-Lipschitz verdict. Not an exception: negative examples are
/// first-class outputs. tlip is the attained sup of tau ratios over
/// timelike pairs (0 when there are none); a causal pair with tau_X = 0
/// and tau_Y > 0 breaks the property and is returned as the witness.
struct TlipVerdict {
  bool timelike_lipschitz = true;
  double tlip = 0.0;
  std::optional<std::pair<int, int>> witness;
  std::optional<std::pair<int, int>> attained_at;
};

TlipVerdict tlip_estimate(const CausalMap& map);

struct PreservationVerdict {
  bool preserving = true;
  bool image_inclusion = true;
  std::optional<std::pair<int, int>> order_witness;
  std::optional<std::pair<int, int>> inclusion_witness;
  bool passed() const { return preserving && image_inclusion; }
};

/// Checks p <= q  =>  U(p) <= U(q) over all pairs, plus the inclusion
/// U(J(p,q)) subset of J(U(p),U(q)) on every diamond.
PreservationVerdict check_causality_preserving(const CausalMap& map);

/// Empirical controlling modulus at one scale:
///   eta(delta) = max diam_Y J(U(p),U(q)) over p < q with diam_X J(p,q) < delta,
/// 0 when no pair qualifies.
double controlling_eta_at(const CausalMap& map, double delta);

/// eta over a grid of scales; monotone in delta by construction.
std::vector<std::pair<double, double>> controlling_modulus(const CausalMap& map,
                                                           const std::vector<double>& delta_grid);

/// A map bundle built from an analytic rule applied to coordinate points:
/// the materialized domain, codomain and index table.
struct CausalMapBundle {
  std::shared_ptr<const FiniteSpace> domain;
  std::shared_ptr<const FiniteSpace> codomain;
  std::vector<int> mapping;

  CausalMap map() const { return CausalMap(domain, codomain, mapping); }
};

/// "scale:lambda" — x -> lambda x on Minkowski points (TLip = lambda).
CausalMapBundle make_scaling_map(const std::vector<Event>& points, double lambda);

/// "pad_zero" — isometric embedding R^{1,n} -> R^{1,n+1} with a zero
/// trailing coordinate (TLip = 1).
CausalMapBundle make_pad_zero_map(const std::vector<Event>& points);

/// "drop_time_to_line" — (t, x) -> t onto R^{1,0}; causality preserving
/// but not timelike Lipschitz whenever a null pair exists.
CausalMapBundle make_time_projection_map(const std::vector<Event>& points);

/// Named-rule dispatcher for the JSON interface ("scale:2", "pad_zero",
/// "drop_time_to_line").
CausalMapBundle make_rule_map(const std::string& rule, const std::vector<Event>& points);

}  // namespace lcoarea
