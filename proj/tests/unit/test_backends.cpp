#include <set>

#include "doctest.h"
#include "lcoarea/backends.hpp"
#include "oracles.hpp"

using namespace lcoarea;
using nlohmann::json;

TEST_CASE("sprinkle determinism and poisson count") {
  SprinkleConfig cfg;
  cfg.dim = 2;
  cfg.region = Region::unit_diamond(1);
  cfg.intensity = 100.0;
  cfg.seed = 42;
  const auto a = sprinkle_points(cfg);
  const auto b = sprinkle_points(cfg);
  CHECK(a == b);
  for (const auto& e : a) {
    CHECK(mink::in_closed_diamond(cfg.region.p, cfg.region.q, e));
  }
  // Mean over many seeds: diamond volume 0.5, so lambda = 50.
  double total = 0.0;
  const int seeds = 1000;
  for (int k = 0; k < seeds; ++k) {
    cfg.seed = static_cast<std::uint64_t>(k);
    total += static_cast<double>(sprinkle_points(cfg).size());
  }
  const double mean = total / seeds;
  const double sigma = std::sqrt(50.0 / seeds);
  CHECK(mean > 50.0 - 3.0 * sigma);
  CHECK(mean < 50.0 + 3.0 * sigma);
}

TEST_CASE("sprinkle in a 3d diamond by rejection") {
  SprinkleConfig cfg;
  cfg.dim = 3;
  cfg.region = Region::unit_diamond(2);
  cfg.intensity = 200.0;
  cfg.seed = 5;
  const auto pts = sprinkle_points(cfg);
  for (const auto& e : pts) CHECK(mink::in_closed_diamond(cfg.region.p, cfg.region.q, e));
}

TEST_CASE("empty region is rejected") {
  SprinkleConfig cfg;
  cfg.region = Region::diamond(Event{0, 0}, Event{-1, 0});
  CHECK_THROWS_AS(sprinkle_points(cfg), InputError);
  cfg.region = Region::box(Event{0, 0}, Event{0, 1});
  CHECK_THROWS_AS(sprinkle_points(cfg), InputError);
}

TEST_CASE("longest path tau on the documented examples") {
  const std::vector<WeightedEdge> edges{{0, 1, 0.5, true}, {1, 2, 0.7, true}, {0, 2, 1.0, true}};
  const auto tau = longest_path_tau(3, edges);
  CHECK(tau[0][2] == doctest::Approx(1.2));
  CHECK(tau[0][1] == doctest::Approx(0.5));
  CHECK(tau[2][0] == 0.0);

  const auto single = longest_path_tau(2, {{0, 1, 2.0, true}});
  CHECK(single[0][1] == doctest::Approx(2.0));
  CHECK(single[1][0] == 0.0);
}

TEST_CASE("null link stays causal but not chronological") {
  json doc = {
      {"points", {{{"id", "a"}}, {{"id", "b"}}}},
      {"metric", {{"pairs", {{0, 1, 1.0}}}}},
      {"relations", {{"mode", "explicit"}, {"le", json::array()}}},
      {"tau", {{"mode", "longest_path"}, {"links", {{0, 1, 0.0}}}}},
  };
  const FiniteSpace s = parse_space(doc);
  CHECK(s.le(0, 1));
  CHECK_FALSE(s.ll(0, 1));
  CHECK(s.tau(0, 1) == 0.0);
}

TEST_CASE("longest path matches chain enumeration on random DAGs") {
  Rng rng(17);
  for (int rep = 0; rep < 60; ++rep) {
    const int n = 4 + static_cast<int>(rng.integer(8));  // up to 11 vertices
    std::vector<WeightedEdge> edges;
    std::vector<std::array<double, 3>> raw;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (rng.uniform() < 0.35) {
          const double w = rng.uniform(0.0, 2.0);
          edges.push_back({i, j, w, w > 0.0});
          raw.push_back({static_cast<double>(i), static_cast<double>(j), w});
        }
      }
    }
    const auto tau = longest_path_tau(n, edges);
    for (int trial = 0; trial < 6; ++trial) {
      const int src = static_cast<int>(rng.integer(static_cast<std::uint64_t>(n)));
      const int dst = static_cast<int>(rng.integer(static_cast<std::uint64_t>(n)));
      if (src == dst) continue;
      CHECK(tau[static_cast<std::size_t>(src)][static_cast<std::size_t>(dst)] ==
            doctest::Approx(oracle::brute_force_longest_path(n, raw, src, dst)).epsilon(1e-12));
    }
  }
}

TEST_CASE("cycle detection names a witness") {
  try {
    longest_path_tau(3, {{0, 1, 1.0, true}, {1, 2, 1.0, true}, {2, 0, 1.0, true}});
    FAIL("expected a cycle error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("cycle") != std::string::npos);
    CHECK(std::string(e.what()).find("->") != std::string::npos);
  }
}

TEST_CASE("positive weight requires the chronological mark") {
  CHECK_THROWS_AS(longest_path_tau(2, {{0, 1, 1.0, false}}), InputError);
  CHECK_THROWS_AS(longest_path_tau(2, {{0, 1, 0.0, true}}), InputError);
}

TEST_CASE("parse_space accepts the three-chain document") {
  json doc = {
      {"points",
       {{{"id", "a"}, {"coords", {0.0, 0.0}}},
        {{"id", "b"}, {"coords", {1.0, 0.0}}},
        {{"id", "c"}, {"coords", {2.0, 0.0}}}}},
      {"metric", "euclidean"},
      {"relations", {{"mode", "from_coords_minkowski"}}},
      {"tau", {{"mode", "from_coords"}}},
  };
  const FiniteSpace s = parse_space(doc);
  CHECK(s.size() == 3);
  CHECK(s.tau(0, 2) == doctest::Approx(2.0));
  CHECK(s.backend() == BackendTag::minkowski_coords);
}

TEST_CASE("parse_space rejects explicit reverse-triangle violations with a witness") {
  json doc = {
      {"points", {{{"id", "a"}}, {{"id", "b"}}, {{"id", "c"}}}},
      {"metric", {{"pairs", {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 2.0}}}}},
      {"relations", {{"mode", "explicit"}, {"le", {{0, 1}, {1, 2}}}}},
      {"tau", {{"mode", "explicit"}, {"pairs", {{0, 1, 0.5}, {1, 2, 0.5}, {0, 2, 0.9}}}}},
  };
  try {
    parse_space(doc);
    FAIL("expected rejection");
  } catch (const InputError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("reverse_triangle") != std::string::npos);
    CHECK(msg.find("a b c") != std::string::npos);
  }
}

TEST_CASE("coords mode relations agree with direct tau evaluation") {
  SprinkleConfig cfg;
  cfg.intensity = 60.0;
  cfg.seed = 3;
  const FiniteSpace s = sprinkle(cfg);
  const json doc = space_to_json(s);
  const FiniteSpace t = parse_space(doc);
  REQUIRE(t.size() == s.size());
  for (int i = 0; i < s.size(); ++i) {
    for (int j = 0; j < s.size(); ++j) {
      const double direct = mink::tau(*s.point(i).coords, *s.point(j).coords);
      CHECK(t.tau(i, j) == direct);
      CHECK(t.le(i, j) == ((i == j) || mink::le(*s.point(i).coords, *s.point(j).coords)));
      CHECK(t.ll(i, j) == (direct > 0.0));
    }
  }
}

TEST_CASE("antisymmetry violations are rejected as cycles") {
  json doc = {
      {"points", {{{"id", "a"}}, {{"id", "b"}}}},
      {"metric", {{"pairs", {{0, 1, 1.0}}}}},
      {"relations", {{"mode", "explicit"}, {"le", {{0, 1}, {1, 0}}}}},
      {"tau", {{"mode", "explicit"}, {"pairs", json::array()}}},
  };
  CHECK_THROWS_AS(parse_space(doc), InputError);
}
