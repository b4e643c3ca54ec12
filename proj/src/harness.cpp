#include "lcoarea/harness.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

namespace lcoarea {

using nlohmann::json;

namespace {

std::vector<int> ids_to_indices(const FiniteSpace& space, const json& arr) {
  std::vector<int> out;
  for (const auto& v : arr) out.push_back(space.index_of(v.get<std::string>()));
  return out;
}

json load_space_doc(const json& spec) {
  if (spec.contains("file")) {
    std::ifstream in(spec["file"].get<std::string>());
    if (!in) throw InputError("cannot open space file: " + spec["file"].get<std::string>());
    json doc;
    in >> doc;
    return doc;
  }
  return spec;
}

}  // namespace

ExperimentConfig config_from_json(const json& doc) {
  if (doc.contains("generator")) {
    const auto& gen = doc["generator"];
    ExperimentConfig cfg = random_coarea_instance(gen.value("seed", std::uint64_t{0}));
    if (doc.contains("tolerance")) cfg.tolerance = doc["tolerance"].get<double>();
    return cfg;
  }
  ExperimentConfig cfg;
  cfg.X = std::make_shared<FiniteSpace>(parse_space(load_space_doc(doc.at("x"))));
  const auto& map_spec = doc.at("map");
  if (map_spec.contains("rule")) {
    std::vector<Event> events;
    for (const auto& p : cfg.X->points()) {
      if (!p.coords) throw InputError("rule maps need coordinate-backed points");
      events.push_back(*p.coords);
    }
    CausalMapBundle bundle = make_rule_map(map_spec["rule"].get<std::string>(), events);
    cfg.X = bundle.domain;
    cfg.Y = bundle.codomain;
    cfg.mapping = bundle.mapping;
  } else {
    cfg.Y = std::make_shared<FiniteSpace>(parse_space(load_space_doc(doc.at("y"))));
    cfg.mapping.assign(static_cast<std::size_t>(cfg.X->size()), -1);
    for (const auto& [from, to] : map_spec.at("table").items()) {
      cfg.mapping[static_cast<std::size_t>(cfg.X->index_of(from))] =
          cfg.Y->index_of(to.get<std::string>());
    }
    for (int i = 0; i < cfg.X->size(); ++i) {
      if (cfg.mapping[static_cast<std::size_t>(i)] < 0) {
        throw InputError("map table misses point " + cfg.X->point(i).id);
      }
    }
  }
  cfg.target = doc.contains("e") ? ids_to_indices(*cfg.X, doc["e"]) : cfg.X->all_indices();
  cfg.pool = doc.contains("pool") ? ids_to_indices(*cfg.X, doc["pool"]) : cfg.target;
  cfg.s = doc.value("s", 1.0);
  cfg.t = doc.value("t", 1.0);
  cfg.delta = doc.value("delta", 3.0);
  cfg.delta0 = doc.value("delta0", cfg.delta);
  cfg.tolerance = doc.value("tolerance", 1e-9);
  cfg.seed = doc.value("seed", std::uint64_t{0});
  return cfg;
}

CoareaReport run_coarea_experiment(const ExperimentConfig& cfg) {
  CoareaReport rep;
  rep.config = cfg;
  const CausalMap map = cfg.map();
  rep.preservation = check_causality_preserving(map);
  rep.tlip = tlip_estimate(map);
  if (!rep.preservation.passed()) {
    rep.aborted = true;
    rep.abort_reason = "map is not causality preserving";
    return rep;
  }
  if (!rep.tlip.timelike_lipschitz) {
    rep.aborted = true;
    rep.abort_reason = "map is not timelike Lipschitz";
    return rep;
  }
  rep.chain = check_coarea_chain(map, cfg.target, cfg.s, cfg.t, cfg.delta, cfg.delta0,
                                 cfg.pool, cfg.tolerance);
  if (std::isinf(rep.chain.rhs)) {
    rep.slack = std::isinf(rep.chain.lhs) ? 0.0 : kInf;
  } else {
    rep.slack = rep.chain.rhs - rep.chain.lhs;
  }
  rep.passed = rep.chain.step1_holds && rep.chain.step2_holds && rep.chain.end_to_end_holds;
  return rep;
}

ordered_json to_json(const CoareaReport& rep) {
  ordered_json out;
  out["source"] = rep.config.source;
  out["seed"] = rep.config.seed;
  out["s"] = rep.config.s;
  out["t"] = rep.config.t;
  out["delta"] = rep.config.delta;
  out["delta0"] = rep.config.delta0;
  out["tolerance"] = rep.config.tolerance;
  // Finite instances satisfy the structural hypotheses of the limit
  // theorem by construction; measurability is automatic on a finite
  // codomain. Recorded so reports are self-describing.
  out["hypotheses_by_construction"] = {
      "finite universes: every function on Y is measurable",
      "causal diamonds are closed member sets",
      "sigma-finiteness is trivial on finite spaces"};
  out["aborted"] = rep.aborted;
  if (rep.aborted) {
    out["abort_reason"] = rep.abort_reason;
    ordered_json verdicts;
    verdicts["causality_preserving"] = rep.preservation.preserving;
    verdicts["image_inclusion"] = rep.preservation.image_inclusion;
    if (rep.preservation.order_witness) {
      verdicts["order_witness"] = {
          rep.config.X->point(rep.preservation.order_witness->first).id,
          rep.config.X->point(rep.preservation.order_witness->second).id};
    }
    verdicts["timelike_lipschitz"] = rep.tlip.timelike_lipschitz;
    if (rep.tlip.witness) {
      verdicts["null_witness"] = {rep.config.X->point(rep.tlip.witness->first).id,
                                  rep.config.X->point(rep.tlip.witness->second).id};
    }
    out["verdicts"] = verdicts;
    return out;
  }
  out["tlip"] = json_value(rep.tlip.tlip);
  out["eta"] = json_value(rep.chain.eta);
  out["constant"] = json_value(rep.chain.constant);
  out["v_s_delta"] = json_value(rep.chain.v_s_delta);
  out["phi"] = json_value(rep.chain.phi);
  out["lhs"] = json_value(rep.chain.lhs);
  out["rhs"] = json_value(rep.chain.rhs);
  out["slack"] = json_value(rep.slack);
  ordered_json fibers = ordered_json::array();
  for (const auto& [y, v] : rep.chain.fiber_values) {
    fibers.push_back(ordered_json{{"y", rep.config.Y->point(y).id}, {"value", json_value(v)}});
  }
  out["fiber_values"] = fibers;
  out["step1_holds"] = rep.chain.step1_holds;
  out["step2_holds"] = rep.chain.step2_holds;
  out["end_to_end_holds"] = rep.chain.end_to_end_holds;
  out["passed"] = rep.passed;
  out["v_witness"] = to_json(*rep.config.X, rep.chain.v_witness);
  out["phi_witness"] = to_json(*rep.config.X, rep.chain.phi_witness.witness);
  out["lhs_witness"] = to_json(*rep.config.Y, rep.chain.lhs_witness);
  return out;
}

std::vector<CoareaReport> run_coarea_batch(const std::vector<std::uint64_t>& seeds,
                                           double tolerance) {
  std::vector<CoareaReport> reports(seeds.size());
  parallel_for(static_cast<int>(seeds.size()), [&](int i) {
    ExperimentConfig cfg = random_coarea_instance(seeds[static_cast<std::size_t>(i)]);
    cfg.tolerance = tolerance;
    reports[static_cast<std::size_t>(i)] = run_coarea_experiment(cfg);
  });
  return reports;
}

ExperimentConfig random_coarea_instance(std::uint64_t seed) {
  Rng rng(seed);
  constexpr double kEccCap = 3.0;
  for (int attempt = 0; attempt < 500; ++attempt) {
    const int levels = 1 + static_cast<int>(rng.integer(4));
    const int total = levels + static_cast<int>(rng.integer(static_cast<std::uint64_t>(10 - levels + 1)));
    std::vector<int> count(static_cast<std::size_t>(levels), 1);
    for (int extra = total - levels; extra > 0; --extra) {
      ++count[static_cast<std::size_t>(rng.integer(static_cast<std::uint64_t>(levels)))];
    }
    std::vector<double> level_time(static_cast<std::size_t>(levels), 0.0);
    for (int l = 1; l < levels; ++l) {
      level_time[static_cast<std::size_t>(l)] =
          level_time[static_cast<std::size_t>(l - 1)] + rng.uniform(0.6, 2.2);
    }
    std::vector<Event> events;
    std::vector<int> level_of;
    for (int l = 0; l < levels; ++l) {
      for (int k = 0; k < count[static_cast<std::size_t>(l)]; ++k) {
        events.push_back(Event{level_time[static_cast<std::size_t>(l)], rng.uniform(0.0, 1.0)});
        level_of.push_back(l);
      }
    }
    bool distinct = true;
    for (std::size_t a = 0; a < events.size() && distinct; ++a) {
      for (std::size_t b = a + 1; b < events.size(); ++b) {
        if (events[a] == events[b]) {
          distinct = false;
          break;
        }
      }
    }
    if (!distinct) continue;

    bool ok = true;
    for (std::size_t a = 0; a < events.size() && ok; ++a) {
      for (std::size_t b = 0; b < events.size(); ++b) {
        if (a == b || !mink::le(events[a], events[b])) continue;
        const double tx = mink::tau(events[a], events[b]);
        if (tx == 0.0 || mink::dist(events[a], events[b]) > kEccCap * tx) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;

    std::vector<Point> xpts;
    for (std::size_t i = 0; i < events.size(); ++i) {
      xpts.push_back(Point{"x" + std::to_string(i), events[i]});
    }
    std::vector<Point> ypts;
    double u = rng.uniform(0.0, 1.0);
    for (int l = 0; l < levels; ++l) {
      ypts.push_back(Point{"y" + std::to_string(l), Event{u}});
      u += rng.uniform(0.5, 1.5);
    }

    ExperimentConfig cfg;
    cfg.seed = seed;
    cfg.source = "generator";
    cfg.X = std::make_shared<FiniteSpace>(FiniteSpace::from_coords_minkowski(std::move(xpts)));
    cfg.Y = std::make_shared<FiniteSpace>(FiniteSpace::from_coords_minkowski(std::move(ypts)));
    cfg.mapping = level_of;
    for (int i = 0; i < cfg.X->size(); ++i) {
      if (rng.uniform() < 0.85) cfg.target.push_back(i);
    }
    cfg.pool = rng.uniform() < 0.5 ? cfg.X->all_indices() : cfg.target;
    static constexpr std::pair<double, double> kExponents[] = {
        {0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {2.0, 0.0}, {2.0, 1.0}, {2.0, 2.0}};
    const auto [s, t] = kExponents[rng.integer(6)];
    cfg.s = s;
    cfg.t = t;
    cfg.delta = rng.uniform(0.5, 3.5);
    cfg.delta0 = cfg.delta + rng.uniform(0.0, 1.0);
    return cfg;
  }
  throw InternalError("random_coarea_instance: rejection sampling exhausted");
}

MeasureEstimate run_minkowski_volume_experiment(double tau,
                                                const std::vector<double>& schedule) {
  if (tau < 0.0) throw InputError("tau must be nonnegative");
  for (std::size_t i = 1; i < schedule.size(); ++i) {
    if (!(schedule[i] < schedule[i - 1])) throw InputError("schedule must be strictly decreasing");
  }
  MeasureEstimate est;
  est.s = 2.0;
  est.schedule = schedule;
  est.tolerance = 1e-12;
  est.certificate = Certificate::structured;
  for (double delta : schedule) {
    if (!(delta > 0.0)) throw InputError("schedule scales must be positive");
    if (tau == 0.0) {
      est.values.push_back(0.0);
      continue;
    }
    const MinkDiamond d{{0.0, 0.0}, {tau, 0.0}};
    const int k = static_cast<int>(std::floor(d.diam() / delta)) + 1;
    est.values.push_back(minkowski_null_tiling(d, k).cost);
  }
  if (est.values.size() >= 2) {
    est.converged = std::abs(est.values.back() - est.values[est.values.size() - 2]) <=
                    est.tolerance;
  }
  return est;
}

DensityDiagnostic density_diagnostic(const FiniteSpace& space, std::span<const int> target,
                                     double s, double epsilon, int samples,
                                     std::uint64_t seed) {
  DensityDiagnostic out;
  out.s = s;
  out.epsilon = epsilon;
  if (target.empty() || samples <= 0) return out;
  Rng rng(seed);
  const auto pool = space.all_indices();
  const auto all = candidate_diamonds(space, kInf, pool, false, DiamBound::strict);

  for (int k = 0; k < samples; ++k) {
    const int x = target[static_cast<std::size_t>(rng.integer(target.size()))];
    // Smallest pool diamond containing x.
    const CausalDiamond* j = nullptr;
    for (const auto& d : all) {
      if (!std::binary_search(d.members.begin(), d.members.end(), x)) continue;
      if (!j || d.diam < j->diam) j = &d;
    }
    if (!j || std::isinf(rho(s, *j))) continue;
    std::vector<int> local;
    for (int m : j->members) {
      if (std::find(target.begin(), target.end(), m) != target.end()) local.push_back(m);
    }
    if (local.empty() || local.size() > 20) continue;

    // Smallest feasible scale: walk the distinct diameters upward until
    // every local point is coverable.
    std::set<double> diams;
    for (const auto& d : all) diams.insert(d.diam);
    double feasible = kInf;
    for (double dv : diams) {
      const double delta = dv * (1.0 + 1e-9);
      bool all_covered = true;
      for (int m : local) {
        const bool covered = std::any_of(all.begin(), all.end(), [&](const CausalDiamond& d) {
          return d.diam < delta && std::binary_search(d.members.begin(), d.members.end(), m);
        });
        if (!covered) {
          all_covered = false;
          break;
        }
      }
      if (all_covered) {
        feasible = delta;
        break;
      }
    }
    if (std::isinf(feasible)) continue;
    std::vector<CausalDiamond> cands;
    for (const auto& d : all) {
      if (d.diam < feasible) cands.push_back(d);
    }
    const CoverSolution sol = cover_value_exact(space, local, cands, s, feasible);
    ++out.samples;
    if (sol.cost > (1.0 + epsilon) * rho(s, *j) + 1e-12) ++out.violations;
  }
  out.fraction = out.samples == 0 ? 0.0 : static_cast<double>(out.violations) / out.samples;
  return out;
}

StrongVsCausalReport strong_vs_causal_test(const std::vector<Event>& chain, double s,
                                           double delta, const std::vector<double>& eps_list,
                                           const CoverLimits& limits) {
  if (chain.empty()) {
    StrongVsCausalReport rep;
    rep.s = s;
    rep.delta = delta;
    rep.v_delta = 0.0;
    rep.m_delta = 0.0;
    rep.ge_holds = true;
    for (double eps : eps_list) {
      rep.entries.push_back({eps, 0.0, eps - 1.0, true, 0});
    }
    return rep;
  }
  StrongVsCausalReport rep;
  rep.s = s;
  rep.delta = delta;

  std::vector<Point> base;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    base.push_back(Point{"c" + std::to_string(i), chain[i]});
  }
  const FiniteSpace chain_space = FiniteSpace::from_coords_minkowski(base);
  const auto chain_pool = chain_space.all_indices();
  const auto chain_cands = candidate_diamonds(chain_space, delta, chain_pool, false);
  const CoverSolution chain_cover =
      cover_value_exact(chain_space, chain_pool, chain_cands, s, delta, limits);

  // Ambient vertices: merge the optimal cover into maximal runs (for
  // s <= 1 one diamond per run costs no more, by subadditivity of tau^s
  // along the chain) and push each run diamond chronologically. Run
  // endpoints sit next to point-free gaps, so the pushed vertices never
  // bracket a chain point with a degenerate causal diamond; the causal
  // value over the ambient pool stays that of the chain pool.
  std::vector<Event> ambient;
  std::vector<int> infeasible_count(eps_list.size(), 0);
  struct Run {
    double lo, hi;
  };
  std::vector<Run> runs;
  if (!std::isinf(chain_cover.cost)) {
    std::vector<std::pair<double, double>> intervals;
    for (const auto& item : chain_cover.items) {
      intervals.emplace_back(item.diamond.vertices->first[0],
                             item.diamond.vertices->second[0]);
    }
    std::sort(intervals.begin(), intervals.end());
    for (const auto& [lo, hi] : intervals) {
      if (!runs.empty() && lo <= runs.back().hi) {
        runs.back().hi = std::max(runs.back().hi, hi);
      } else {
        runs.push_back({lo, hi});
      }
    }
  }
  for (std::size_t e = 0; e < eps_list.size(); ++e) {
    const double eps = eps_list[e];
    if (!(eps > 1.0)) throw InputError("eps must exceed 1");
    for (std::size_t k = 0; k < runs.size(); ++k) {
      // Run boundaries are vertices of cover diamonds, hence chain points.
      const auto at_time = [&chain](double t) -> const Event& {
        for (const auto& e : chain) {
          if (e[0] == t) return e;
        }
        throw InternalError("run boundary is not a chain point");
      };
      const MinkDiamond run_diamond{at_time(runs[k].lo), at_time(runs[k].hi)};
      const double tau0 = run_diamond.tau();
      const double budget = (eps - 1.0) * std::pow(0.5, static_cast<double>(k) + 1.0);
      double eps2 =
          s == 0.0 ? budget : std::pow(std::pow(tau0, s) + budget / omega(s), 1.0 / s) - tau0;
      // Keep the push inside the neighbouring gaps.
      double gap = kInf;
      if (k > 0) gap = std::min(gap, runs[k].lo - runs[k - 1].hi);
      if (k + 1 < runs.size()) gap = std::min(gap, runs[k + 1].lo - runs[k].hi);
      if (std::isfinite(gap)) eps2 = std::min(eps2, 0.5 * gap);
      try {
        const MinkDiamond pushed = chronological_estimation(run_diamond, eps, eps2);
        for (const Event& v : {pushed.p, pushed.q}) {
          if (std::find(ambient.begin(), ambient.end(), v) == ambient.end()) {
            ambient.push_back(v);
          }
        }
      } catch (const InfeasibleError&) {
        ++infeasible_count[e];
      }
    }
  }
  rep.ambient = ambient;

  std::vector<Point> pts = base;
  for (std::size_t i = 0; i < ambient.size(); ++i) {
    pts.push_back(Point{"a" + std::to_string(i), ambient[i]});
  }
  const auto space = std::make_shared<FiniteSpace>(FiniteSpace::from_coords_minkowski(pts));
  std::vector<int> targets;
  for (std::size_t i = 0; i < chain.size(); ++i) targets.push_back(static_cast<int>(i));
  const auto pool = space->all_indices();

  // V^s_delta belongs to the chain's own pool (ambient vertices exist only
  // to host chronological covers); M^s runs over the ambient pool, whose
  // pair count outgrows the default candidate cap.
  CoverLimits wide = limits;
  wide.max_candidates = std::max(wide.max_candidates, 800);
  rep.v_witness = chain_cover;
  rep.v_delta = chain_cover.cost;
  rep.m_witness = strong_measure_value(*space, targets, delta, pool, s, wide);
  rep.m_delta = rep.m_witness.cost;
  rep.ge_holds = rep.m_delta >= rep.v_delta;

  for (std::size_t e = 0; e < eps_list.size(); ++e) {
    const double eps = eps_list[e];
    StrongVsCausalReport::EpsEntry entry;
    entry.eps = eps;
    entry.infeasible_estimations = infeasible_count[e];
    entry.m_eps_delta = strong_measure_value(*space, targets, eps * delta, pool, s, wide).cost;
    entry.bound = std::isinf(rep.v_delta) ? kInf : (eps - 1.0) + rep.v_delta;
    entry.holds = leq_with_tol(entry.m_eps_delta, entry.bound, 1e-9);
    rep.entries.push_back(entry);
  }
  return rep;
}

ordered_json to_json(const FiniteSpace& ambient_space, const StrongVsCausalReport& r) {
  ordered_json entries = ordered_json::array();
  for (const auto& e : r.entries) {
    entries.push_back(ordered_json{{"eps", e.eps},
                                   {"m_eps_delta", json_value(e.m_eps_delta)},
                                   {"bound", json_value(e.bound)},
                                   {"holds", e.holds},
                                   {"infeasible_estimations", e.infeasible_estimations}});
  }
  return ordered_json{{"s", r.s},
                      {"delta", r.delta},
                      {"v_delta", json_value(r.v_delta)},
                      {"m_delta", json_value(r.m_delta)},
                      {"ge_holds", r.ge_holds},
                      {"entries", entries},
                      {"v_witness", to_json(ambient_space, r.v_witness)},
                      {"m_witness", to_json(ambient_space, r.m_witness)}};
}

CoveringDemo covering_demo(std::uint64_t seed, int n_diamonds, double ecc_max,
                           int witness_samples) {
  if (n_diamonds < 1) throw InputError("covering demo needs at least one diamond");
  if (!(ecc_max > 1.0)) throw InputError("eccentricity cap must exceed 1");
  Rng rng(seed);
  CoveringDemo demo;
  for (int attempt = 0;; ++attempt) {
    if (attempt > 200) throw InternalError("covering_demo: sprinkling never fit the family size");
    SprinkleConfig cfg;
    cfg.dim = 2;
    cfg.region = Region::unit_diamond(1);
    cfg.intensity = 60.0;
    cfg.seed = rng.bits();
    demo.targets = sprinkle_points(cfg);
    if (!demo.targets.empty() && static_cast<int>(demo.targets.size()) <= n_diamonds) break;
  }

  const double r_max = std::sqrt((ecc_max * ecc_max - 1.0) / (ecc_max * ecc_max + 1.0));
  std::vector<MinkDiamond> family;
  for (int k = 0; k < n_diamonds; ++k) {
    const Event& anchor = demo.targets[static_cast<std::size_t>(k) % demo.targets.size()];
    const double half = rng.uniform(0.05, 0.25);
    const double r = rng.uniform(0.0, 0.9 * r_max);
    const double dx = (rng.uniform() < 0.5 ? -1.0 : 1.0) * r * half;
    family.push_back(MinkDiamond{{anchor[0] - half, anchor[1] - dx},
                                 {anchor[0] + half, anchor[1] + dx}});
  }
  double sup = 0.0;
  for (const auto& d : family) sup = std::max(sup, d.diam());
  demo.certificate = vitali_select(demo.targets, std::move(family), sup * 1.01 + 1e-9);
  demo.verification = verify_vitali(demo.targets, demo.certificate, seed ^ 0x9e3779b97f4a7c15ULL,
                                    witness_samples);
  return demo;
}

}  // namespace lcoarea
