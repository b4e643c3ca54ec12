#pragma once

#include <nlohmann/json.hpp>

#include "lcoarea/space.hpp"

namespace lcoarea {

/// Sampling region in R^{1,n}: an axis-aligned box or a causal diamond.
struct Region {
  enum class Kind { box, diamond };
  Kind kind = Kind::diamond;
  Event lo, hi;  // box corners (time-first), kind == box
  Event p, q;    // diamond vertices, kind == diamond

  int dim() const;
  double volume() const;  // InputError when empty / non-causal

  static Region unit_diamond(int spatial_dim);
  static Region box(Event lo, Event hi);
  static Region diamond(Event p, Event q);
};

struct SprinkleConfig {
  int dim = 2;  // N = 1 + n
  Region region = Region::unit_diamond(1);
  double intensity = 100.0;  // expected points per unit volume
  std::uint64_t seed = 0;
};

/// Poisson(intensity * volume) points uniform in the region; the same seed
/// always reproduces the same point set.
std::vector<Event> sprinkle_points(const SprinkleConfig& cfg);

/// Sprinkled points with relations, tau and d induced from the ambient
/// Minkowski structure. Point ids are "s0", "s1", ...
FiniteSpace sprinkle(const SprinkleConfig& cfg);

struct WeightedEdge {
  int from = 0;
  int to = 0;
  double weight = 0.0;
  bool chronological = false;  // required true iff weight > 0
};

/// tau(x,y) = max total weight over directed paths x -> y, 0 if
/// unreachable. The output satisfies the reverse triangle inequality along
/// every chain by construction. Cycles are an InputError carrying a
/// witness walk.
std::vector<std::vector<double>> longest_path_tau(int n, const std::vector<WeightedEdge>& edges);

/// Parses the causal-set JSON document (see README for the schema), closes
/// <= transitively, then runs verify_axioms and rejects on any failure.
FiniteSpace parse_space(const nlohmann::json& doc);

/// Same parse without the axiom gate, for callers that want to report the
/// violations instead of rejecting the document.
FiniteSpace parse_space_unchecked(const nlohmann::json& doc);

/// Serializes a coordinate-backed space in the same document format
/// (relations/tau/metric in from-coords mode).
nlohmann::ordered_json space_to_json(const FiniteSpace& space);

}  // namespace lcoarea
