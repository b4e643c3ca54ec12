#include "lcoarea/json_io.hpp"

#include <cmath>
#include <sstream>

namespace lcoarea {

const char* kCsvHeader = "quantity,s,t,delta,value";

ordered_json json_value(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

ordered_json to_json(const AxiomReport& r) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    checks.push_back(ordered_json{{"axiom", c.axiom}, {"passed", c.passed}, {"witness", c.witness}});
  }
  return ordered_json{{"checks", checks},
                      {"causality_class", to_string(r.causality_class)},
                      {"all_passed", r.all_passed()}};
}

namespace {

ordered_json diamond_json(const FiniteSpace* space, const CausalDiamond& d) {
  ordered_json out;
  if (space && d.p >= 0 && d.q >= 0 && d.p < space->size() && d.q < space->size()) {
    out["p"] = space->point(d.p).id;
    out["q"] = space->point(d.q).id;
  } else if (d.p >= 0 && d.q >= 0) {
    out["p"] = d.p;
    out["q"] = d.q;
  }
  out["tau"] = json_value(d.tau);
  out["diam"] = json_value(d.diam);
  out["nonempty"] = d.nonempty;
  if (space) {
    ordered_json members = ordered_json::array();
    for (int m : d.members) members.push_back(space->point(m).id);
    out["members"] = members;
  }
  if (d.vertices) {
    out["p_coords"] = d.vertices->first;
    out["q_coords"] = d.vertices->second;
  }
  return out;
}

const char* cert_name(Certificate c) {
  switch (c) {
    case Certificate::exact: return "exact";
    case Certificate::greedy: return "greedy";
    case Certificate::structured: return "structured";
  }
  return "exact";
}

}  // namespace

ordered_json to_json(const FiniteSpace& space, const CausalDiamond& d) {
  return diamond_json(&space, d);
}

ordered_json to_json(const FiniteSpace& space, const CoverSolution& sol) {
  ordered_json items = ordered_json::array();
  for (const auto& it : sol.items) {
    items.push_back(ordered_json{{"weight", json_value(it.weight)},
                                 {"diamond", diamond_json(&space, it.diamond)}});
  }
  return ordered_json{{"items", items},
                      {"cost", json_value(sol.cost)},
                      {"delta", json_value(sol.delta)},
                      {"s", sol.s},
                      {"certificate", cert_name(sol.certificate)}};
}

ordered_json to_json(const FiniteSpace& space, const WeightedCover& cover) {
  ordered_json items = ordered_json::array();
  for (const auto& it : cover.items) {
    items.push_back(ordered_json{{"weight", json_value(it.weight)},
                                 {"diamond", diamond_json(&space, it.diamond)}});
  }
  return ordered_json{{"items", items}, {"delta", json_value(cover.delta)}, {"s", cover.s}};
}

ordered_json to_json(const MeasureEstimate& est) {
  ordered_json values = ordered_json::array();
  for (double v : est.values) values.push_back(json_value(v));
  return ordered_json{{"s", est.s},
                      {"schedule", est.schedule},
                      {"values", values},
                      {"limit_flag", est.converged ? "converged" : "not_converged"},
                      {"tolerance", est.tolerance},
                      {"certificate", cert_name(est.certificate)}};
}

ordered_json to_json(const MinkDiamond& d) {
  return ordered_json{{"p", d.p}, {"q", d.q}, {"tau", json_value(d.tau())},
                      {"diam", json_value(d.diam())}};
}

ordered_json to_json(const Enlargement& e) {
  return ordered_json{{"original", to_json(e.original)},
                      {"enlarged", to_json(e.enlarged)},
                      {"achieved_C1", json_value(e.achieved_c1)},
                      {"achieved_C2", json_value(e.achieved_c2)}};
}

ordered_json to_json(const VitaliCertificate& cert) {
  ordered_json family = ordered_json::array();
  for (const auto& d : cert.family) family.push_back(to_json(d));
  ordered_json enlargements = ordered_json::array();
  for (const auto& e : cert.enlargements) enlargements.push_back(to_json(e));
  return ordered_json{{"family", family},
                      {"selected", cert.selected},
                      {"assignment", cert.assignment},
                      {"enlargements", enlargements},
                      {"sup_diam", json_value(cert.sup_diam)},
                      {"margin", cert.margin}};
}

ordered_json to_json(const VitaliVerification& v) {
  return ordered_json{{"disjoint_exact", v.disjoint_exact},
                      {"disjoint_sampled", v.disjoint_sampled},
                      {"coverage", v.coverage},
                      {"two_scale", v.two_scale},
                      {"containment", v.containment},
                      {"witness_containment", v.witness_containment},
                      {"witness_samples", v.witness_samples},
                      {"witness_failures", v.witness_failures},
                      {"all_passed", v.all()}};
}

std::string csv_row(const std::string& quantity, double s, double t, double delta, double value) {
  std::ostringstream os;
  os << quantity << ',' << s << ',' << t << ',' << delta << ',';
  if (std::isinf(value)) {
    os << (value > 0 ? "inf" : "-inf");
  } else {
    os.precision(17);
    os << value;
  }
  return os.str();
}

}  // namespace lcoarea
