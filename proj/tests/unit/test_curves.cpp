#include <cmath>

#include "doctest.h"
#include "lcoarea/backends.hpp"
#include "lcoarea/curves.hpp"

using namespace lcoarea;

TEST_CASE("tau length of a straight timelike segment is T at every level") {
  const CausalCurve gamma = CausalCurve::from_events({{0, 0}, {3, 0}});
  const TauLengthResult r = tau_length(gamma, 5);
  CHECK(r.value == doctest::Approx(3.0).epsilon(1e-12));
  for (double v : r.per_level) CHECK(v == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("discrete three-chain tau length by dynamic programming") {
  std::vector<std::vector<bool>> le{{1, 1, 1}, {0, 1, 1}, {0, 0, 1}};
  std::vector<std::vector<double>> tau{{0, 1, 2}, {0, 0, 1}, {0, 0, 0}};
  std::vector<std::vector<double>> d{{0, 1, 2}, {1, 0, 1}, {2, 1, 0}};
  auto space = std::make_shared<FiniteSpace>(FiniteSpace::from_tables(
      {{"a", std::nullopt}, {"b", std::nullopt}, {"c", std::nullopt}}, le, tau, d));
  const CausalCurve gamma = CausalCurve::from_space(space, {0, 1, 2});
  const TauLengthResult r = tau_length(gamma);
  CHECK(r.value == doctest::Approx(2.0));  // min over {a,c} and {a,b,c} partitions
}

TEST_CASE("piecewise curve: refinement across the kink") {
  const CausalCurve gamma = CausalCurve::from_events({{0, 0}, {1, 0.9}, {2, 0}});
  const TauLengthResult r = tau_length(gamma, 6);
  const double expect = 2.0 * std::sqrt(1.0 - 0.81);
  CHECK(r.value == doctest::Approx(expect).epsilon(1e-12));
  CHECK(r.value == doctest::Approx(0.8717797887081348).epsilon(1e-12));
  // Levels are non-increasing by the reverse triangle inequality.
  for (std::size_t i = 1; i < r.per_level.size(); ++i) {
    CHECK(r.per_level[i] <= r.per_level[i - 1] + 1e-12);
  }
}

TEST_CASE("non-causal consecutive samples are rejected") {
  CHECK_THROWS_AS(CausalCurve::from_events({{0, 0}, {1, 2}}), InputError);
  CHECK_THROWS_AS(CausalCurve::from_events({{0, 0}, {0, 0}}), InputError);  // constant
}

TEST_CASE("v1 of the five-sample straight chain") {
  std::vector<Event> pts;
  for (int k = 0; k <= 4; ++k) pts.push_back({static_cast<double>(k), 0.0});
  const CausalCurve gamma = CausalCurve::from_events(pts);

  // delta = 1.5 admits only consecutive sub-diamonds; four of them.
  const CoverSolution fine = v1_of_curve(gamma, 1.5);
  CHECK(fine.cost == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(fine.items.size() == 4);

  // Large delta covers with the single end-to-end diamond at equal cost.
  const CoverSolution coarse = v1_of_curve(gamma, 10.0);
  CHECK(coarse.cost == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(coarse.items.size() == 1);
}

TEST_CASE("a single sample is uncoverable") {
  const CausalCurve point = CausalCurve::from_events({{0, 0}});
  CHECK(std::isinf(v1_of_curve(point, 1.0).cost));
}

TEST_CASE("v1 equals tau length on straight chains and never exceeds it") {
  Rng rng(44);
  for (int rep = 0; rep < 40; ++rep) {
    const int n = 5 + static_cast<int>(rng.integer(46));  // 5..50 samples
    const double step = rng.uniform(0.2, 1.0);
    std::vector<Event> pts;
    for (int k = 0; k < n; ++k) pts.push_back({step * k, 0.0});
    const CausalCurve gamma = CausalCurve::from_events(pts);
    const double delta = step * 1.5;
    const double length = tau_length(gamma, 3).value;
    const double v1 = v1_of_curve(gamma, delta).cost;
    CHECK(v1 == doctest::Approx(length).epsilon(1e-9));
  }

  // Random causal walks: v1 <= tau length at any delta above the max gap.
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 3 + static_cast<int>(rng.integer(10));
    std::vector<Event> pts{{0.0, rng.uniform(-0.2, 0.2)}};
    double max_gap = 0.0;
    for (int k = 1; k < n; ++k) {
      const double dt = rng.uniform(0.2, 1.0);
      const double dx = rng.uniform(-0.9, 0.9) * dt;
      pts.push_back({pts.back()[0] + dt, pts.back()[1] + dx});
      max_gap = std::max(max_gap, mink::dist(pts[static_cast<std::size_t>(k - 1)],
                                             pts[static_cast<std::size_t>(k)]));
    }
    const CausalCurve gamma = CausalCurve::from_events(pts);
    const double delta = max_gap * rng.uniform(1.01, 2.5);
    const double v1 = v1_of_curve(gamma, delta).cost;
    const double length = tau_length(gamma, 4).value;
    CHECK(v1 <= length + 1e-9);
  }
}

TEST_CASE("discrete chains from longest-path spaces satisfy the v1 bound") {
  Rng rng(91);
  for (int rep = 0; rep < 60; ++rep) {
    const int n = 3 + static_cast<int>(rng.integer(8));
    std::vector<WeightedEdge> edges;
    for (int i = 0; i + 1 < n; ++i) {
      const double w = rng.uniform(0.1, 2.0);
      edges.push_back({i, i + 1, w, true});
    }
    const auto tau = longest_path_tau(n, edges);
    std::vector<std::vector<bool>> le(static_cast<std::size_t>(n),
                                      std::vector<bool>(static_cast<std::size_t>(n), false));
    std::vector<std::vector<double>> d(static_cast<std::size_t>(n),
                                       std::vector<double>(static_cast<std::size_t>(n), 0.0));
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) {
      pts.push_back({"p" + std::to_string(i), std::nullopt});
      for (int j = i + 1; j < n; ++j) {
        le[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
        d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            d[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                static_cast<double>(j - i);
      }
    }
    auto space = std::make_shared<FiniteSpace>(FiniteSpace::from_tables(pts, le, tau, d));
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
    const CausalCurve gamma = CausalCurve::from_space(space, idx);
    const double v1 = v1_of_curve(gamma, 1.5).cost;  // gaps have distance 1
    const double length = tau_length(gamma).value;
    CHECK(v1 <= length + 1e-9);
  }
}
