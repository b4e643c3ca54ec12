// lcoarea: causal covers, Lorentzian Hausdorff measure estimates and
// fixed-scale coarea experiments over causal-set JSON documents.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "lcoarea/harness.hpp"

namespace {

using namespace lcoarea;
using nlohmann::json;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  json doc;
  in >> doc;
  return doc;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write file: " + path);
  out << text;
}

void append_csv(const std::string& path, const std::vector<std::string>& rows) {
  const bool fresh = !std::ifstream(path).good();
  std::ofstream out(path, std::ios::app);
  if (!out) throw InputError("cannot write file: " + path);
  if (fresh) out << kCsvHeader << '\n';
  for (const auto& r : rows) out << r << '\n';
}

std::vector<double> parse_schedule(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t comma = text.find(',', pos);
    out.push_back(std::stod(text.substr(pos, comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

// Ambient pools merge extra coordinate points into a coordinate-backed
// space; the original points stay the target.
FiniteSpace merge_pool(const FiniteSpace& base, const json& pool_doc) {
  std::vector<Point> pts = base.points();
  for (const auto& p : pts) {
    if (!p.coords) throw InputError("ambient pools require a coordinate-backed space");
  }
  const json& arr = pool_doc.is_array() ? pool_doc : pool_doc.at("points");
  std::size_t k = 0;
  for (const auto& jp : arr) {
    Point p;
    p.id = jp.contains("id") ? jp["id"].get<std::string>() : "ambient" + std::to_string(k);
    p.coords = jp.at("coords").get<Event>();
    pts.push_back(std::move(p));
    ++k;
  }
  return FiniteSpace::from_coords_minkowski(std::move(pts));
}

int run(int argc, char** argv) {
  CLI::App app{"synthetic Lorentzian measure toolkit"};
  app.require_subcommand(1);

  // check-axioms
  auto* check = app.add_subcommand("check-axioms", "verify the pre-length-space axioms");
  std::string check_file;
  check->add_option("space", check_file, "causal-set JSON document")->required();

  // measure
  auto* measure = app.add_subcommand("measure", "best cover value of the whole point set");
  std::string measure_file, measure_method = "exact", measure_pool, measure_csv;
  double measure_s = 1.0, measure_delta = 1.0;
  measure->add_option("space", measure_file)->required();
  measure->add_option("--s", measure_s, "dimension parameter");
  measure->add_option("--delta", measure_delta, "scale bound (strict)")->required();
  measure->add_option("--method", measure_method)->check(CLI::IsMember({"exact", "greedy"}));
  measure->add_option("--pool", measure_pool, "ambient pool JSON (points with coords)");
  measure->add_option("--csv", measure_csv, "append a summary row to this CSV file");

  // measure-minkowski
  auto* mm = app.add_subcommand("measure-minkowski", "null-tiling volume certificate");
  double mm_tau = 1.0;
  std::string mm_schedule = "0.5,0.1,0.02", mm_csv;
  mm->add_option("--tau", mm_tau)->required();
  mm->add_option("--schedule", mm_schedule, "comma-separated decreasing deltas");
  mm->add_option("--csv", mm_csv);

  // integrate
  auto* integrate = app.add_subcommand("integrate", "causal weighted delta-integral");
  std::string int_file, int_f, int_method = "lp", int_csv;
  double int_s = 1.0, int_delta = 1.0;
  integrate->add_option("space", int_file)->required();
  integrate->add_option("--f", int_f, "JSON map id -> value")->required();
  integrate->add_option("--s", int_s);
  integrate->add_option("--delta", int_delta)->required();
  integrate->add_option("--method", int_method)->check(CLI::IsMember({"lp", "exact"}));
  integrate->add_option("--csv", int_csv);

  // coarea
  auto* coarea = app.add_subcommand("coarea", "fixed-scale coarea experiment");
  std::string coarea_config, coarea_out, coarea_csv;
  coarea->add_option("config", coarea_config, "experiment config JSON")->required();
  coarea->add_option("--out", coarea_out, "write the report here");
  coarea->add_option("--csv", coarea_csv);

  // covering-demo
  auto* demo = app.add_subcommand("covering-demo", "seeded Vitali selection certificate");
  std::uint64_t demo_seed = 7;
  int demo_n = 50;
  double demo_ecc = 3.0;
  int demo_witnesses = 10000;
  demo->add_option("--seed", demo_seed);
  demo->add_option("--n", demo_n, "family size");
  demo->add_option("--ecc-max", demo_ecc, "eccentricity cap diam/tau");
  demo->add_option("--witnesses", demo_witnesses);

  // sprinkle
  auto* spr = app.add_subcommand("sprinkle", "Poisson points in a unit diamond");
  int spr_dim = 2;
  double spr_intensity = 100.0;
  std::uint64_t spr_seed = 0;
  std::string spr_out;
  spr->add_option("--dim", spr_dim, "spacetime dimension N = 1 + n");
  spr->add_option("--intensity", spr_intensity);
  spr->add_option("--seed", spr_seed);
  spr->add_option("--out", spr_out, "output causal-set JSON")->required();

  CLI11_PARSE(app, argc, argv);

  if (*check) {
    // Lenient parse: the point of this command is the report itself.
    const FiniteSpace space = parse_space_unchecked(read_json_file(check_file));
    const AxiomReport report = verify_axioms(space);
    std::cout << to_json(report).dump(2) << '\n';
    return report.all_passed() ? 0 : 1;
  }

  if (*measure) {
    FiniteSpace space = parse_space(read_json_file(measure_file));
    std::vector<int> target = space.all_indices();
    if (!measure_pool.empty()) {
      space = merge_pool(space, read_json_file(measure_pool));
    }
    const auto pool = space.all_indices();
    const auto cands = candidate_diamonds(space, measure_delta, pool, false);
    const CoverSolution sol =
        measure_method == "exact"
            ? cover_value_exact(space, target, cands, measure_s, measure_delta)
            : cover_value_greedy(space, target, cands, measure_s, measure_delta);
    std::cout << to_json(space, sol).dump(2) << '\n';
    if (!measure_csv.empty()) {
      append_csv(measure_csv, {csv_row("cover_value", measure_s, 0.0, measure_delta, sol.cost)});
    }
    return 0;
  }

  if (*mm) {
    const auto schedule = parse_schedule(mm_schedule);
    const MeasureEstimate est = run_minkowski_volume_experiment(mm_tau, schedule);
    ordered_json out = to_json(est);
    out["expected"] = json_value(rho(2.0, mm_tau, true));
    std::cout << out.dump(2) << '\n';
    if (!mm_csv.empty()) {
      std::vector<std::string> rows;
      for (std::size_t i = 0; i < schedule.size(); ++i) {
        rows.push_back(csv_row("null_tiling_value", 2.0, 0.0, schedule[i], est.values[i]));
      }
      append_csv(mm_csv, rows);
    }
    return 0;
  }

  if (*integrate) {
    const FiniteSpace space = parse_space(read_json_file(int_file));
    const json fdoc = read_json_file(int_f);
    std::vector<double> f(static_cast<std::size_t>(space.size()), 0.0);
    for (const auto& [id, value] : fdoc.items()) {
      f[static_cast<std::size_t>(space.index_of(id))] = value.get<double>();
    }
    const auto pool = space.all_indices();
    const WeightedIntegral wi = weighted_causal_integral_delta(
        space, f, int_s, int_delta, pool,
        int_method == "lp" ? IntegralMethod::lp : IntegralMethod::exact_enumeration);
    ordered_json out;
    out["value"] = json_value(wi.value);
    out["cover"] = to_json(space, wi.cover);
    std::cout << out.dump(2) << '\n';
    if (!int_csv.empty()) {
      append_csv(int_csv, {csv_row("weighted_integral", int_s, 0.0, int_delta, wi.value)});
    }
    return 0;
  }

  if (*coarea) {
    const ExperimentConfig cfg = config_from_json(read_json_file(coarea_config));
    const CoareaReport rep = run_coarea_experiment(cfg);
    const std::string text = to_json(rep).dump(2);
    if (coarea_out.empty()) {
      std::cout << text << '\n';
    } else {
      write_text(coarea_out, text + "\n");
      std::cout << (rep.aborted ? "aborted" : (rep.passed ? "pass" : "FAIL")) << '\n';
    }
    if (!coarea_csv.empty()) {
      append_csv(coarea_csv,
                 {csv_row("coarea_lhs", cfg.s, cfg.t, cfg.delta, rep.chain.lhs),
                  csv_row("coarea_rhs", cfg.s, cfg.t, cfg.delta, rep.chain.rhs),
                  csv_row("coarea_phi", cfg.s, cfg.t, cfg.delta, rep.chain.phi)});
    }
    return rep.aborted || !rep.passed ? 1 : 0;
  }

  if (*demo) {
    const CoveringDemo d = covering_demo(demo_seed, demo_n, demo_ecc, demo_witnesses);
    ordered_json out;
    out["targets"] = d.targets;
    out["certificate"] = to_json(d.certificate);
    out["verification"] = to_json(d.verification);
    std::cout << out.dump(2) << '\n';
    std::cerr << "covering demo: |E| = " << d.targets.size() << ", family "
              << d.certificate.family.size() << ", selected " << d.certificate.selected.size()
              << ", verification " << (d.verification.all() ? "passed" : "FAILED") << '\n';
    double c1 = 0.0, c2 = 0.0;
    for (const auto& e : d.certificate.enlargements) {
      c1 = std::max(c1, e.achieved_c1);
      c2 = std::max(c2, e.achieved_c2);
    }
    std::cerr << "achieved constants: C1 <= " << c1 << ", C2 <= " << c2 << '\n';
    return d.verification.all() ? 0 : 1;
  }

  if (*spr) {
    SprinkleConfig cfg;
    cfg.dim = spr_dim;
    cfg.region = Region::unit_diamond(spr_dim - 1);
    cfg.intensity = spr_intensity;
    cfg.seed = spr_seed;
    const FiniteSpace space = sprinkle(cfg);
    write_text(spr_out, space_to_json(space).dump(2) + "\n");
    std::cout << "wrote " << space.size() << " points to " << spr_out << '\n';
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
