#include "doctest.h"
#include "lcoarea/geometry.hpp"

using namespace lcoarea;

TEST_CASE("minkowski tau on reference pairs") {
  CHECK(mink::tau({0, 0}, {1, 0}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(mink::tau({0, 0}, {1, 1}) == 0.0);
  CHECK(mink::tau({0, 0}, {2, 1}) == doctest::Approx(1.7320508075688772).epsilon(1e-14));
  CHECK(mink::tau({0, 0}, {-1, 0}) == 0.0);  // past-directed
  CHECK_THROWS_AS(mink::tau({0, 0}, {1, 0, 0}), InputError);
}

TEST_CASE("minkowski relations") {
  CHECK(mink::le({0, 0}, {1, 1}));
  CHECK_FALSE(mink::ll({0, 0}, {1, 1}));
  CHECK(mink::ll({0, 0}, {2, 1}));
  CHECK_FALSE(mink::le({0, 0}, {1, 1.5}));
  CHECK(mink::le({0.5}, {0.5}));  // R^{1,0}: time axis only
  CHECK(mink::ll({0.0}, {0.5}));
}

TEST_CASE("tau homogeneity under scaling") {
  Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    const Event x{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const Event y{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const double lambda = rng.uniform(0.1, 10.0);
    Event xs = x, ys = y;
    for (auto& c : xs) c *= lambda;
    for (auto& c : ys) c *= lambda;
    const double direct = mink::tau(xs, ys);
    const double scaled = lambda * mink::tau(x, y);
    CHECK(direct == doctest::Approx(scaled).epsilon(1e-12));
  }
}

TEST_CASE("diamond diameter closed form equals the vertex separation") {
  // Sampled oracle: every point pair inside J(p,q) is at most dist(p,q)
  // apart, and the vertices themselves realize it.
  Rng rng(7);
  for (int n = 1; n <= 3; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      Event p(static_cast<std::size_t>(n) + 1, 0.0);
      Event q(static_cast<std::size_t>(n) + 1, 0.0);
      q[0] = rng.uniform(0.5, 2.0);
      for (int i = 1; i <= n; ++i) q[static_cast<std::size_t>(i)] = rng.uniform(-0.5, 0.5);
      if (!mink::ll(p, q)) continue;
      const double claim = mink::diamond_diam(p, q);
      CHECK(claim == doctest::Approx(mink::dist(p, q)));
      std::vector<Event> inside{p, q};
      while (inside.size() < 60) {
        Event z(static_cast<std::size_t>(n) + 1);
        z[0] = rng.uniform(0.0, q[0]);
        for (int i = 1; i <= n; ++i) {
          z[static_cast<std::size_t>(i)] = rng.uniform(-q[0], q[0]);
        }
        if (mink::in_closed_diamond(p, q, z)) inside.push_back(z);
      }
      for (std::size_t a = 0; a < inside.size(); ++a) {
        for (std::size_t b = a + 1; b < inside.size(); ++b) {
          CHECK(mink::dist(inside[a], inside[b]) <= claim + 1e-12);
        }
      }
    }
  }
}

TEST_CASE("null rectangle round trip and set tests") {
  const MinkDiamond d{{0, 0}, {2, 0.5}};
  const NullRect r = to_null_rect(d);
  CHECK(r.valid());
  const MinkDiamond back = from_null_rect(r);
  CHECK(back.p[0] == doctest::Approx(0.0));
  CHECK(back.q[1] == doctest::Approx(0.5));

  const MinkDiamond far{{10, 0}, {11, 0}};
  CHECK_FALSE(diamonds_intersect_2d(d, far));
  CHECK(diamonds_intersect_2d(d, MinkDiamond{{1, 0}, {3, 0}}));
  CHECK(diamond_contains_2d(MinkDiamond{{-1, 0}, {3, 0}}, d));
  CHECK_FALSE(diamond_contains_2d(d, MinkDiamond{{-1, 0}, {3, 0}}));
}

TEST_CASE("diamond sampling stays inside") {
  const MinkDiamond d{{0.25, -0.5}, {2, 0.5}};
  Rng rng(3);
  for (int k = 0; k < 1000; ++k) {
    CHECK(d.contains(sample_in_diamond_2d(d, rng)));
  }
}

TEST_CASE("rng poisson determinism and mean") {
  Rng a(42), b(42);
  for (int i = 0; i < 5; ++i) CHECK(a.poisson(50.0) == b.poisson(50.0));
  double total = 0.0;
  Rng c(1234);
  const int reps = 4000;
  for (int i = 0; i < reps; ++i) total += static_cast<double>(c.poisson(50.0));
  const double mean = total / reps;
  CHECK(mean > 50.0 - 3.0 * std::sqrt(50.0 / reps));
  CHECK(mean < 50.0 + 3.0 * std::sqrt(50.0 / reps));
}
