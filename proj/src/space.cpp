#include "lcoarea/space.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

namespace lcoarea {

namespace {

// Relative slack for floating comparisons of derived quantities (tau and d
// computed through sqrt). Exact-table entries compare exactly in practice
// because the slack is far below any hand-written violation.
double slack(double scale) { return 1e-12 * std::max(1.0, scale); }

void require_unique_ids(const std::vector<Point>& pts) {
  std::unordered_set<std::string> seen;
  for (const auto& p : pts) {
    if (!seen.insert(p.id).second) {
      throw InputError("duplicate point id: " + p.id);
    }
  }
}

}  // namespace

FiniteSpace FiniteSpace::from_coords_minkowski(std::vector<Point> points) {
  require_unique_ids(points);
  const std::size_t n = points.size();
  std::size_t dim = 0;
  for (const auto& p : points) {
    if (!p.coords) throw InputError("point " + p.id + " lacks coordinates");
    if (dim == 0) dim = p.coords->size();
    if (p.coords->size() != dim || dim == 0) {
      throw InputError("inconsistent coordinate dimension at point " + p.id);
    }
  }
  FiniteSpace s;
  s.points_ = std::move(points);
  s.backend_ = BackendTag::minkowski_coords;
  s.le_.assign(n * n, 0);
  s.ll_.assign(n * n, 0);
  s.tau_.assign(n * n, 0.0);
  s.dist_.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Event& a = *s.points_[i].coords;
      const Event& b = *s.points_[j].coords;
      const std::size_t k = i * n + j;
      s.le_[k] = (i == j) || mink::le(a, b);
      s.ll_[k] = mink::ll(a, b);
      s.tau_[k] = mink::tau(a, b);
      s.dist_[k] = mink::dist(a, b);
    }
  }
  return s;
}

FiniteSpace FiniteSpace::from_tables(std::vector<Point> points,
                                     std::vector<std::vector<bool>> le,
                                     std::vector<std::vector<double>> tau,
                                     std::vector<std::vector<double>> dist,
                                     std::optional<std::vector<std::vector<bool>>> ll) {
  require_unique_ids(points);
  const std::size_t n = points.size();
  auto check_square = [n](std::size_t rows, auto& t, const char* name) {
    if (rows != n) throw InputError(std::string(name) + " table is not n x n");
    for (const auto& row : t) {
      if (row.size() != n) throw InputError(std::string(name) + " table is not n x n");
    }
  };
  check_square(le.size(), le, "le");
  check_square(tau.size(), tau, "tau");
  check_square(dist.size(), dist, "dist");
  if (ll) check_square(ll->size(), *ll, "ll");

  FiniteSpace s;
  s.points_ = std::move(points);
  s.backend_ = BackendTag::explicit_tables;
  s.le_.assign(n * n, 0);
  s.ll_.assign(n * n, 0);
  s.tau_.assign(n * n, 0.0);
  s.dist_.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t k = i * n + j;
      s.le_[k] = le[i][j] || i == j;
      s.tau_[k] = tau[i][j];
      if (s.tau_[k] < 0.0) throw InputError("negative tau entry");
      s.dist_[k] = dist[i][j];
    }
  }
  s.close_transitively();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t k = i * n + j;
      s.ll_[k] = ll ? (*ll)[i][j] : (s.le_[k] && s.tau_[k] > 0.0);
    }
  }
  return s;
}

void FiniteSpace::close_transitively() {
  const std::size_t n = points_.size();
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!le_[i * n + m]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (le_[m * n + j]) le_[i * n + j] = 1;
      }
    }
  }
}

int FiniteSpace::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].id == id) return static_cast<int>(i);
  }
  throw InputError("point id not in universe: " + id);
}

CausalDiamond FiniteSpace::diamond(int p, int q) const {
  CausalDiamond d;
  d.p = p;
  d.q = q;
  d.tau = le(p, q) ? tau(p, q) : 0.0;
  if (points_[static_cast<std::size_t>(p)].coords && points_[static_cast<std::size_t>(q)].coords) {
    d.vertices = std::make_pair(*points_[static_cast<std::size_t>(p)].coords,
                                *points_[static_cast<std::size_t>(q)].coords);
  }
  if (!le(p, q)) return d;
  for (int x = 0; x < size(); ++x) {
    if (le(p, x) && le(x, q)) d.members.push_back(x);
  }
  d.nonempty = !d.members.empty();
  for (std::size_t a = 0; a < d.members.size(); ++a) {
    for (std::size_t b = a + 1; b < d.members.size(); ++b) {
      d.diam = std::max(d.diam, dist(d.members[a], d.members[b]));
    }
  }
  return d;
}

CausalDiamond FiniteSpace::chronological_diamond(int p, int q) const {
  CausalDiamond d;
  d.p = p;
  d.q = q;
  d.tau = ll(p, q) ? tau(p, q) : 0.0;
  if (!ll(p, q)) return d;
  for (int x = 0; x < size(); ++x) {
    if (ll(p, x) && ll(x, q)) d.members.push_back(x);
  }
  d.nonempty = !d.members.empty();
  for (std::size_t a = 0; a < d.members.size(); ++a) {
    for (std::size_t b = a + 1; b < d.members.size(); ++b) {
      d.diam = std::max(d.diam, dist(d.members[a], d.members[b]));
    }
  }
  return d;
}

std::vector<int> FiniteSpace::all_indices() const {
  std::vector<int> v(static_cast<std::size_t>(size()));
  for (int i = 0; i < size(); ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

bool AxiomReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const AxiomCheck& c) { return c.passed; });
}

const char* to_string(CausalityClass c) {
  switch (c) {
    case CausalityClass::none: return "none";
    case CausalityClass::chronological: return "chronological";
    case CausalityClass::causal: return "causal";
  }
  return "none";
}

AxiomReport verify_axioms(const FiniteSpace& s, const std::vector<int>* sample) {
  std::vector<int> all;
  if (!sample) {
    all = s.all_indices();
    sample = &all;
  }
  for (int i : *sample) {
    if (i < 0 || i >= s.size()) throw InputError("sample index out of range");
  }
  const std::vector<int>& pts = *sample;

  AxiomReport report;
  report.checks.reserve(12);  // references below must stay valid
  auto add = [&report](const char* name) -> AxiomCheck& {
    report.checks.push_back(AxiomCheck{name, true, {}});
    return report.checks.back();
  };
  auto fail = [&s](AxiomCheck& c, std::initializer_list<int> witness) {
    if (!c.passed) return;  // keep the first witness
    c.passed = false;
    for (int w : witness) c.witness.push_back(s.point(w).id);
  };

  AxiomCheck& le_refl = add("le_reflexive");
  AxiomCheck& le_trans = add("le_transitive");
  AxiomCheck& ll_trans = add("ll_transitive");
  AxiomCheck& ll_in_le = add("ll_subset_le");
  AxiomCheck& tau_iff = add("tau_positive_iff_ll");
  AxiomCheck& tau_zero = add("tau_zero_off_le");
  AxiomCheck& rev_tri = add("reverse_triangle");
  AxiomCheck& d_identity = add("metric_identity");
  AxiomCheck& d_sym = add("metric_symmetry");
  AxiomCheck& d_tri = add("metric_triangle");
  AxiomCheck& ll_irrefl = add("ll_irreflexive");
  AxiomCheck& le_antisym = add("le_antisymmetric");

  for (int x : pts) {
    if (!s.le(x, x)) fail(le_refl, {x});
    if (s.ll(x, x)) fail(ll_irrefl, {x});
    if (s.dist(x, x) != 0.0) fail(d_identity, {x});
  }
  for (int x : pts) {
    for (int y : pts) {
      if (s.ll(x, y) && !s.le(x, y)) fail(ll_in_le, {x, y});
      if ((s.tau(x, y) > 0.0) != s.ll(x, y)) fail(tau_iff, {x, y});
      if (!s.le(x, y) && s.tau(x, y) != 0.0) fail(tau_zero, {x, y});
      if (s.dist(x, y) != s.dist(y, x)) fail(d_sym, {x, y});
      if (x != y) {
        if (s.dist(x, y) <= 0.0) fail(d_identity, {x, y});
        if (s.le(x, y) && s.le(y, x)) fail(le_antisym, {x, y});
      }
    }
  }
  for (int x : pts) {
    for (int y : pts) {
      for (int z : pts) {
        if (s.le(x, y) && s.le(y, z) && !s.le(x, z)) fail(le_trans, {x, y, z});
        if (s.ll(x, y) && s.ll(y, z) && !s.ll(x, z)) fail(ll_trans, {x, y, z});
        if (s.le(x, y) && s.le(y, z)) {
          const double lhs = s.tau(x, z);
          const double rhs = s.tau(x, y) + s.tau(y, z);
          if (lhs < rhs - slack(rhs)) fail(rev_tri, {x, y, z});
        }
        const double dd = s.dist(x, y) + s.dist(y, z);
        if (s.dist(x, z) > dd + slack(dd)) fail(d_tri, {x, y, z});
      }
    }
  }

  const bool chronological = ll_irrefl.passed;
  const bool causal = chronological && le_antisym.passed;
  report.causality_class = causal ? CausalityClass::causal
                                  : (chronological ? CausalityClass::chronological
                                                   : CausalityClass::none);
  return report;
}

AxiomReport verify_axioms_ids(const FiniteSpace& s, const std::vector<std::string>& ids) {
  std::vector<int> sample;
  sample.reserve(ids.size());
  for (const auto& id : ids) sample.push_back(s.index_of(id));
  return verify_axioms(s, &sample);
}

}  // namespace lcoarea
