#include <numbers>

#include "doctest.h"
#include "lcoarea/backends.hpp"
#include "lcoarea/measure.hpp"
#include "oracles.hpp"

using namespace lcoarea;

namespace {

FiniteSpace three_chain() {
  return FiniteSpace::from_coords_minkowski(
      {{"a", Event{0, 0}}, {"b", Event{1, 0}}, {"c", Event{2, 0}}});
}

}  // namespace

TEST_CASE("omega reference values") {
  CHECK(omega(1) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(std::abs(omega(1) - 1.0) < 1e-12);
  CHECK(std::abs(omega(2) - 0.5) < 1e-12);
  CHECK(omega(3) == doctest::Approx(std::numbers::pi / 12.0).epsilon(1e-13));
  CHECK(omega(4) == doctest::Approx(std::numbers::pi / 24.0).epsilon(1e-13));
  CHECK(omega(0) == 1.0);  // declared convention
  CHECK_THROWS_AS(omega(-1), InputError);
}

TEST_CASE("rho on the documented cases") {
  CHECK(rho(2, 2.0, true) == doctest::Approx(2.0));
  CHECK(rho(1, 0.0, true) == 0.0);                       // null pair, s > 0
  CHECK(rho(3, 1.0, true) == doctest::Approx(0.2617993877991494));
  CHECK(rho(1, 5.0, false) == 0.0);                      // empty diamond
  CHECK(rho(0, 0.0, true) == 1.0);                       // 0^0 := 1
  CHECK(rho(0, kInf, true) == kInf);
  CHECK(rho(1, 1.0, true) == doctest::Approx(1.0));      // omega_1 = 1
}

TEST_CASE("candidate diamonds respect the strict diameter bound") {
  const FiniteSpace s = three_chain();
  const auto pool = s.all_indices();
  CHECK(candidate_diamonds(s, 1.5, pool, false).size() == 2);  // J(a,b), J(b,c)
  CHECK(candidate_diamonds(s, 3.0, pool, false).size() == 3);
  CHECK(candidate_diamonds(s, 1.0, pool, false).empty());      // diam 1 not < 1

  // Null-only instance: require_timelike filters everything.
  const FiniteSpace nul = FiniteSpace::from_coords_minkowski(
      {{"p", Event{0, 0}}, {"q", Event{1, 1}}});
  CHECK(candidate_diamonds(nul, 10.0, nul.all_indices(), true).empty());
  CHECK(candidate_diamonds(nul, 10.0, nul.all_indices(), false).size() == 1);
}

TEST_CASE("exact cover on the chain") {
  const FiniteSpace s = three_chain();
  const auto pool = s.all_indices();
  const auto target = s.all_indices();

  const auto at_15 = cover_value_exact(s, target, candidate_diamonds(s, 1.5, pool, false), 1, 1.5);
  CHECK(at_15.cost == doctest::Approx(2.0));
  CHECK(at_15.items.size() == 2);
  CHECK(at_15.certificate == Certificate::exact);

  const auto at_3 = cover_value_exact(s, target, candidate_diamonds(s, 3.0, pool, false), 1, 3.0);
  CHECK(at_3.cost == doctest::Approx(2.0));

  const std::vector<int> single{0};
  const auto one = cover_value_exact(s, single, candidate_diamonds(s, 1.5, pool, false), 1, 1.5);
  CHECK(one.cost == doctest::Approx(1.0));
  CHECK(one.items.size() == 1);
}

TEST_CASE("isolated point is uncoverable") {
  const FiniteSpace s = FiniteSpace::from_coords_minkowski(
      {{"a", Event{0, 0}}, {"b", Event{1, 0}}, {"iso", Event{0, 100}}});
  const auto pool = s.all_indices();
  const auto target = s.all_indices();
  const auto sol = cover_value_exact(s, target, candidate_diamonds(s, 5.0, pool, false), 1, 5.0);
  CHECK(std::isinf(sol.cost));
  CHECK(sol.items.empty());
}

TEST_CASE("greedy matches the hand trace on the chain and never beats exact") {
  const FiniteSpace s = three_chain();
  const auto pool = s.all_indices();
  const auto target = s.all_indices();
  const auto cands = candidate_diamonds(s, 3.0, pool, false);
  const auto greedy = cover_value_greedy(s, target, cands, 1, 3.0);
  CHECK(greedy.cost == doctest::Approx(2.0));
  CHECK(greedy.certificate == Certificate::greedy);
  // Tie at ratio 1/2 between J(a,b) and J(b,c): ids break it.
  CHECK(s.point(greedy.items[0].diamond.p).id == "a");

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    SprinkleConfig cfg;
    cfg.intensity = 20.0;
    cfg.seed = seed;
    const FiniteSpace sp = sprinkle(cfg);
    if (sp.size() == 0 || sp.size() > 10) continue;
    const auto p = sp.all_indices();
    const auto cands_sp = candidate_diamonds(sp, 1.0, p, false);
    const auto ex = cover_value_exact(sp, p, cands_sp, 1, 1.0);
    const auto gr = cover_value_greedy(sp, p, cands_sp, 1, 1.0);
    if (std::isinf(ex.cost)) {
      CHECK(std::isinf(gr.cost));
    } else {
      CHECK(gr.cost >= ex.cost - 1e-12);
    }
  }
}

TEST_CASE("exact equals full subset enumeration") {
  Rng rng(99);
  for (int rep = 0; rep < 80; ++rep) {
    SprinkleConfig cfg;
    cfg.intensity = 16.0;
    cfg.seed = rng.bits();
    const FiniteSpace sp = sprinkle(cfg);
    if (sp.size() == 0 || sp.size() > 8) continue;
    const auto pool = sp.all_indices();
    auto cands = candidate_diamonds(sp, 1.2, pool, false);
    if (cands.size() > 15) cands.resize(15);
    const std::vector<int> target = sp.all_indices();
    const auto ex = cover_value_exact(sp, target, cands, 1, 1.2);
    const double brute = oracle::brute_force_cover(sp, target, cands, 1);
    if (std::isinf(brute)) {
      CHECK(std::isinf(ex.cost));
    } else {
      CHECK(ex.cost == doctest::Approx(brute).epsilon(1e-12));
    }
  }
}

TEST_CASE("cover value is non-increasing in delta") {
  SprinkleConfig cfg;
  cfg.intensity = 18.0;
  cfg.seed = 31;
  const FiniteSpace sp = sprinkle(cfg);
  REQUIRE(sp.size() > 2);
  const auto pool = sp.all_indices();
  double prev = kInf;
  for (double delta : {0.3, 0.6, 1.0, 1.6, 3.0}) {
    const auto sol =
        cover_value_exact(sp, pool, candidate_diamonds(sp, delta, pool, false), 1, delta);
    CHECK(sol.cost <= prev + 1e-12);
    prev = sol.cost;
  }
}

TEST_CASE("scaling equivariance of exact covers") {
  SprinkleConfig cfg;
  cfg.intensity = 20.0;
  cfg.seed = 77;
  const FiniteSpace sp = sprinkle(cfg);
  REQUIRE(sp.size() >= 4);
  const auto pool = sp.all_indices();
  const double delta = 0.9;
  for (double lambda : {0.5, 2.0, 10.0}) {
    for (double s : {1.0, 2.0, 3.0}) {
      std::vector<Point> scaled = sp.points();
      for (auto& p : scaled) {
        for (auto& c : *p.coords) c *= lambda;
      }
      const FiniteSpace sps = FiniteSpace::from_coords_minkowski(scaled);
      const auto base =
          cover_value_exact(sp, pool, candidate_diamonds(sp, delta, pool, false), s, delta);
      const auto big = cover_value_exact(
          sps, pool, candidate_diamonds(sps, lambda * delta, pool, false), s, lambda * delta);
      if (std::isinf(base.cost)) {
        CHECK(std::isinf(big.cost));
      } else {
        CHECK(big.cost == doctest::Approx(std::pow(lambda, s) * base.cost).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("estimate_measure on the chain") {
  const FiniteSpace s = three_chain();
  const auto pool = s.all_indices();
  const auto est = estimate_measure(s, pool, 1, {3.0, 1.5}, CoverMethod::exact, pool);
  CHECK(est.values == std::vector<double>{2.0, 2.0});
  CHECK(est.converged);

  // s = 2 below the minimal pair distance: no candidates at all.
  const auto tiny = estimate_measure(s, pool, 2, {0.5}, CoverMethod::exact, pool);
  CHECK(std::isinf(tiny.values[0]));

  CHECK_THROWS_AS(estimate_measure(s, pool, 1, {1.0, 2.0}, CoverMethod::exact, pool), InputError);
}

TEST_CASE("size limits route to greedy") {
  SprinkleConfig cfg;
  cfg.intensity = 120.0;
  cfg.seed = 8;
  const FiniteSpace sp = sprinkle(cfg);
  REQUIRE(sp.size() > 20);
  const auto pool = sp.all_indices();
  const auto cands = candidate_diamonds(sp, 1.0, pool, false);
  CHECK_THROWS_AS(cover_value_exact(sp, pool, cands, 1, 1.0), SizeError);
  const auto greedy = cover_value_greedy(sp, pool, cands, 1, 1.0);
  CHECK(greedy.cost > 0.0);
}

TEST_CASE("null tiling collapses to omega_2 tau^2") {
  const MinkDiamond unit{{0, 0}, {1, 0}};
  const auto k4 = minkowski_null_tiling(unit, 4);
  CHECK(k4.items.size() == 16);
  CHECK(k4.cost == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(k4.certificate == Certificate::structured);
  for (const auto& item : k4.items) {
    CHECK(item.diamond.tau == doctest::Approx(0.25));
    CHECK(item.diamond.diam == doctest::Approx(0.25));
  }

  const auto k1 = minkowski_null_tiling(unit, 1);
  CHECK(k1.items.size() == 1);
  CHECK(k1.cost == doctest::Approx(0.5));

  const MinkDiamond two{{0, 0}, {2, 0}};
  CHECK(minkowski_null_tiling(two, 10).cost == doctest::Approx(2.0).epsilon(1e-14));

  CHECK_THROWS_AS(minkowski_null_tiling(MinkDiamond{{0, 0}, {1, 1}}, 2), InputError);
  CHECK_THROWS_AS(minkowski_null_tiling(MinkDiamond{{0, 0, 0}, {1, 0, 0}}, 2), UnsupportedError);
}

TEST_CASE("tiling of a boosted diamond still telescopes") {
  const MinkDiamond boosted{{0, 0}, {2, 1.2}};
  const double expect = rho(2, boosted.tau(), true);
  CHECK(minkowski_null_tiling(boosted, 7).cost == doctest::Approx(expect).epsilon(1e-13));
}

TEST_CASE("strong measure on the chain") {
  const FiniteSpace s = three_chain();
  const auto pool = s.all_indices();

  // I(a,c) = {b}: covering {b} costs omega_1 tau(a,c) = 2.
  const std::vector<int> mid{1};
  const auto m_mid = strong_measure_value(s, mid, 3.0, pool, 1);
  CHECK(m_mid.cost == doctest::Approx(2.0));

  // The endpoints admit no chronological cover from the chain's own pool.
  const auto m_all = strong_measure_value(s, pool, 3.0, pool, 1);
  CHECK(std::isinf(m_all.cost));

  // Ambient vertices strictly outside make it finite.
  const FiniteSpace amb = FiniteSpace::from_coords_minkowski({{"a", Event{0, 0}},
                                                              {"b", Event{1, 0}},
                                                              {"c", Event{2, 0}},
                                                              {"lo", Event{-0.1, 0}},
                                                              {"hi", Event{2.1, 0}}});
  const std::vector<int> chain_pts{0, 1, 2};
  const auto m_amb = strong_measure_value(amb, chain_pts, 3.0, amb.all_indices(), 1);
  CHECK(m_amb.cost == doctest::Approx(2.2));

  // Empty target costs nothing.
  const std::vector<int> none;
  CHECK(strong_measure_value(s, none, 3.0, pool, 1).cost == 0.0);
}

TEST_CASE("strong measure dominates the causal one when every diamond is admissible") {
  Rng rng(5);
  for (int rep = 0; rep < 40; ++rep) {
    SprinkleConfig cfg;
    cfg.intensity = 18.0;
    cfg.seed = rng.bits();
    const FiniteSpace sp = sprinkle(cfg);
    if (sp.size() < 2 || sp.size() > 10) continue;
    const auto pool = sp.all_indices();
    double max_diam = 0.0;
    for (const auto& d : candidate_diamonds(sp, kInf, pool, false)) {
      max_diam = std::max(max_diam, d.diam);
    }
    const double delta = max_diam * 1.05 + 1e-9;
    const auto v = cover_value_exact(sp, pool, candidate_diamonds(sp, delta, pool, false), 1, delta);
    const auto m = strong_measure_value(sp, pool, delta, pool, 1);
    CHECK(m.cost >= v.cost);
  }
}
