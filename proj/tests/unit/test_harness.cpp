#include <cmath>

#include "doctest.h"
#include "lcoarea/harness.hpp"

using namespace lcoarea;
using nlohmann::json;

TEST_CASE("minkowski volume experiment reproduces omega_2 tau^2") {
  const auto est = run_minkowski_volume_experiment(1.0, {0.5, 0.1, 0.02});
  REQUIRE(est.values.size() == 3);
  for (double v : est.values) CHECK(std::abs(v - 0.5) <= 1e-12);
  CHECK(est.converged);
  CHECK(est.certificate == Certificate::structured);

  const auto two = run_minkowski_volume_experiment(2.0, {0.5, 0.1});
  for (double v : two.values) CHECK(std::abs(v - 2.0) <= 1e-12);

  const auto degenerate = run_minkowski_volume_experiment(0.0, {0.5, 0.1});
  for (double v : degenerate.values) CHECK(v == 0.0);
}

TEST_CASE("coarea experiment on the grid instance passes with recorded slack") {
  json doc = {
      {"x",
       {{"points",
         {{{"id", "x0"}, {"coords", {0.0, 0.0}}},
          {{"id", "x1"}, {"coords", {0.0, 0.5}}},
          {{"id", "x2"}, {"coords", {1.0, 0.0}}},
          {{"id", "x3"}, {"coords", {1.0, 0.5}}}}}}},
      {"y",
       {{"points", {{{"id", "y0"}, {"coords", {0.0}}}, {{"id", "y1"}, {"coords", {1.0}}}}}}},
      {"map",
       {{"table", {{"x0", "y0"}, {"x1", "y0"}, {"x2", "y1"}, {"x3", "y1"}}}}},
      {"s", 1.0},
      {"t", 1.0},
      {"delta", 3.0},
      {"delta0", 3.0},
  };
  const ExperimentConfig cfg = config_from_json(doc);
  const CoareaReport rep = run_coarea_experiment(cfg);
  CHECK_FALSE(rep.aborted);
  CHECK(rep.passed);
  CHECK(std::abs(rep.slack) <= 1e-9);  // tight instance: lhs = rhs = 2
}

TEST_CASE("experiment aborts with the verdict on a non-preserving map") {
  json doc = {
      {"x",
       {{"points",
         {{{"id", "a"}, {"coords", {0.0, 0.0}}}, {{"id", "b"}, {"coords", {1.0, 0.0}}}}}}},
      {"y",
       {{"points",
         {{{"id", "u"}, {"coords", {0.0, 0.0}}}, {{"id", "v"}, {"coords", {1.0, 0.0}}}}}}},
      {"map", {{"table", {{"a", "v"}, {"b", "u"}}}}},
  };
  const CoareaReport rep = run_coarea_experiment(config_from_json(doc));
  CHECK(rep.aborted);
  CHECK(rep.abort_reason == "map is not causality preserving");
  const auto j = to_json(rep);
  CHECK(j["verdicts"]["causality_preserving"] == false);
}

TEST_CASE("identity with t = 0 on a singleton is tight") {
  json doc = {
      {"x",
       {{"points",
         {{{"id", "a"}, {"coords", {0.0, 0.0}}},
          {{"id", "b"}, {"coords", {1.0, 0.0}}},
          {{"id", "c"}, {"coords", {2.0, 0.0}}}}}}},
      {"y",
       {{"points",
         {{{"id", "a"}, {"coords", {0.0, 0.0}}},
          {{"id", "b"}, {"coords", {1.0, 0.0}}},
          {{"id", "c"}, {"coords", {2.0, 0.0}}}}}}},
      {"map", {{"table", {{"a", "a"}, {"b", "b"}, {"c", "c"}}}}},
      {"e", {"b"}},
      {"pool", {"a", "b", "c"}},
      {"s", 1.0},
      {"t", 0.0},
  };
  const CoareaReport rep = run_coarea_experiment(config_from_json(doc));
  CHECK_FALSE(rep.aborted);
  CHECK(rep.passed);
  CHECK(rep.chain.constant == doctest::Approx(1.0));
  CHECK(std::abs(rep.slack) <= 1e-9);
}

TEST_CASE("random batch reports are deterministic and pass") {
  std::vector<std::uint64_t> seeds;
  for (std::uint64_t s = 40; s < 52; ++s) seeds.push_back(s);
  const auto a = run_coarea_batch(seeds);
  const auto b = run_coarea_batch(seeds);
  REQUIRE(a.size() == seeds.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].passed);
    CHECK(to_json(a[i]).dump() == to_json(b[i]).dump());
  }
}

TEST_CASE("density diagnostic basics") {
  SprinkleConfig cfg;
  cfg.intensity = 40.0;
  cfg.seed = 13;
  const FiniteSpace sp = sprinkle(cfg);
  REQUIRE(sp.size() >= 5);
  const auto all = sp.all_indices();

  const DensityDiagnostic d = density_diagnostic(sp, all, 2.0, 0.5, 60, 99);
  CHECK(d.samples > 0);
  CHECK(d.fraction >= 0.0);
  CHECK(d.fraction <= 1.0);

  // Huge epsilon admits everything.
  const DensityDiagnostic loose = density_diagnostic(sp, all, 2.0, 1e12, 40, 99);
  CHECK(loose.violations == 0);

  // Singleton target.
  const std::vector<int> single{0};
  const DensityDiagnostic s1 = density_diagnostic(sp, single, 1.0, 0.5, 20, 5);
  CHECK(s1.violations == 0);
}

TEST_CASE("strong vs causal comparison on embedded chains") {
  const std::vector<Event> chain{{0, 0}, {1, 0}, {2, 0}};
  const auto rep = strong_vs_causal_test(chain, 1.0, 3.0, {1.1, 1.5, 2.0});
  CHECK(rep.ge_holds);
  CHECK(rep.v_delta == doctest::Approx(2.0));
  for (const auto& e : rep.entries) {
    CHECK(e.holds);
    CHECK(e.m_eps_delta <= (e.eps - 1.0) + rep.v_delta + 1e-9);
  }

  // Empty target: both sides vanish.
  const auto empty = strong_vs_causal_test({}, 1.0, 3.0, {1.5});
  CHECK(empty.v_delta == 0.0);
  CHECK(empty.m_delta == 0.0);
  CHECK(empty.ge_holds);
}

TEST_CASE("config generator path produces runnable instances") {
  json doc = {{"generator", {{"seed", 5}}}};
  const ExperimentConfig cfg = config_from_json(doc);
  CHECK(cfg.X->size() >= 1);
  CHECK(cfg.Y->size() >= 1);
  const CoareaReport rep = run_coarea_experiment(cfg);
  CHECK_FALSE(rep.aborted);
  CHECK(rep.passed);
}

TEST_CASE("report json is byte-identical for identical configs") {
  json doc = {{"generator", {{"seed", 77}}}};
  const auto r1 = to_json(run_coarea_experiment(config_from_json(doc))).dump(2);
  const auto r2 = to_json(run_coarea_experiment(config_from_json(doc))).dump(2);
  CHECK(r1 == r2);
}

TEST_CASE("csv summary schema") {
  CHECK(std::string(kCsvHeader) == "quantity,s,t,delta,value");
  CHECK(csv_row("cover_value", 1, 0, 3.0, 2.0) == "cover_value,1,0,3,2");
  CHECK(csv_row("cover_value", 1, 0, 3.0, kInf) == "cover_value,1,0,3,inf");
}
