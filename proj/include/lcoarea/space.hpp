#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcoarea/geometry.hpp"

namespace lcoarea {

struct Point {
  std::string id;
  std::optional<Event> coords;  // time-first, present for coordinate backends
};

enum class BackendTag { explicit_tables, minkowski_coords };

/// Causal diamond J(p,q) of a finite space, with its cached invariants.
/// `members` lists every universe point x with p <= x <= q; `diam` is the
/// max pairwise background distance over members. Analytic diamonds (no
/// member list) carry `vertices` and set `nonempty` explicitly.
struct CausalDiamond {
  int p = -1;
  int q = -1;
  double tau = 0.0;
  double diam = 0.0;
  bool nonempty = false;
  std::vector<int> members;
  std::optional<std::pair<Event, Event>> vertices;
};

/// A finite Lorentzian pre-length space: an immutable queryable oracle for
/// (d, <=, <<, tau) over an indexed point universe. Construction closes <=
/// transitively; all queries are read-only and safe to run concurrently.
class FiniteSpace {
 public:
  /// Relations, tau and d induced from Minkowski coordinates.
  static FiniteSpace from_coords_minkowski(std::vector<Point> points);

  /// Explicit tables. `le` is closed transitively (reflexivity is added);
  /// `ll` defaults to (le && tau > 0) when not provided. Only structural
  /// shape is validated here; axiom content is verify_axioms' job.
  static FiniteSpace from_tables(std::vector<Point> points,
                                 std::vector<std::vector<bool>> le,
                                 std::vector<std::vector<double>> tau,
                                 std::vector<std::vector<double>> dist,
                                 std::optional<std::vector<std::vector<bool>>> ll = std::nullopt);

  int size() const { return static_cast<int>(points_.size()); }
  const Point& point(int i) const { return points_[static_cast<std::size_t>(i)]; }
  const std::vector<Point>& points() const { return points_; }
  BackendTag backend() const { return backend_; }

  /// Index of a point id; InputError if absent.
  int index_of(const std::string& id) const;

  bool le(int i, int j) const { return le_[idx(i, j)] != 0; }
  bool ll(int i, int j) const { return ll_[idx(i, j)] != 0; }
  double tau(int i, int j) const { return tau_[idx(i, j)]; }
  double dist(int i, int j) const { return dist_[idx(i, j)]; }

  /// J(p,q) with members, cached tau(p,q) and member diameter.
  /// p not<= q yields the empty diamond.
  CausalDiamond diamond(int p, int q) const;

  /// I(p,q) = {x : p << x << q} wrapped in the same record; tau and the
  /// diameter are the chronological cover data of the strong measure.
  CausalDiamond chronological_diamond(int p, int q) const;

  std::vector<int> all_indices() const;

 private:
  FiniteSpace() = default;
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * points_.size() + static_cast<std::size_t>(j);
  }
  void close_transitively();

  std::vector<Point> points_;
  std::vector<std::uint8_t> le_;
  std::vector<std::uint8_t> ll_;
  std::vector<double> tau_;
  std::vector<double> dist_;
  BackendTag backend_ = BackendTag::explicit_tables;
};

enum class CausalityClass { none, chronological, causal };

struct AxiomCheck {
  std::string axiom;
  bool passed = true;
  std::vector<std::string> witness;  // point ids of the first failing tuple
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  CausalityClass causality_class = CausalityClass::none;
  bool all_passed() const;
};

/// Checks every pre-length-space axiom clause on the sampled points
/// (nullptr sample = the whole universe): reflexivity and transitivity of
/// <=, transitivity of <<, << subset of <=, tau positivity iff <<, tau = 0
/// off <=, the reverse triangle inequality, and that d is a metric.
/// Irreflexivity of << and antisymmetry of <= feed causality_class.
/// Deterministic: identical space and sample give an identical report.
AxiomReport verify_axioms(const FiniteSpace& space,
                          const std::vector<int>* sample = nullptr);

/// Same, with the sample given as ids; unknown ids are an InputError.
AxiomReport verify_axioms_ids(const FiniteSpace& space,
                              const std::vector<std::string>& sample_ids);

const char* to_string(CausalityClass c);

}  // namespace lcoarea
