// Python bindings for the core operations: spaces, covers, measures,
// integrals, curves, maps and the experiment harness. Structured reports
// cross the boundary as plain Python objects via JSON conversion.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lcoarea/curves.hpp"
#include "lcoarea/harness.hpp"

namespace py = pybind11;
using namespace lcoarea;
using nlohmann::json;

namespace {

py::object json_to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& v : j) out.append(json_to_py(v));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = json_to_py(v);
      return out;
    }
    default: return py::none();
  }
}

json py_to_json(const py::handle& obj) {
  if (obj.is_none()) return nullptr;
  if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
  if (py::isinstance<py::int_>(obj)) return obj.cast<std::int64_t>();
  if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
  if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
  if (py::isinstance<py::dict>(obj)) {
    json out = json::object();
    for (const auto& item : obj.cast<py::dict>()) {
      out[item.first.cast<std::string>()] = py_to_json(item.second);
    }
    return out;
  }
  if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
    json out = json::array();
    for (const auto& item : obj.cast<py::sequence>()) out.push_back(py_to_json(item));
    return out;
  }
  throw py::type_error("unsupported value in document");
}

struct PySpace {
  std::shared_ptr<const FiniteSpace> space;

  std::vector<int> indices(const py::object& ids) const {
    if (ids.is_none()) return space->all_indices();
    std::vector<int> out;
    for (const auto& id : ids.cast<py::sequence>()) {
      out.push_back(space->index_of(id.cast<std::string>()));
    }
    return out;
  }
};

PySpace make_space(const py::object& doc) {
  return PySpace{std::make_shared<FiniteSpace>(parse_space(py_to_json(doc)))};
}

CoverMethod parse_method(const std::string& m) {
  if (m == "exact") return CoverMethod::exact;
  if (m == "greedy") return CoverMethod::greedy;
  throw InputError("unknown method: " + m);
}

}  // namespace

PYBIND11_MODULE(_lcoarea, m) {
  m.doc() = "synthetic Lorentzian measure toolkit";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<SizeError>(m, "SizeError", PyExc_ValueError);
  py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_ValueError);
  py::register_exception<UnsupportedError>(m, "UnsupportedError", PyExc_ValueError);

  m.def("omega", &omega, py::arg("n"), "normalizing volume of the unit causal diamond");
  m.def(
      "rho", [](double s, double tau, bool nonempty) { return rho(s, tau, nonempty); },
      py::arg("s"), py::arg("tau"), py::arg("nonempty") = true);
  m.def("minkowski_tau", &mink::tau, py::arg("x"), py::arg("y"));

  py::class_<PySpace>(m, "Space")
      .def(py::init(&make_space), py::arg("document"))
      .def_property_readonly("size", [](const PySpace& s) { return s.space->size(); })
      .def_property_readonly("ids",
                             [](const PySpace& s) {
                               std::vector<std::string> ids;
                               for (const auto& p : s.space->points()) ids.push_back(p.id);
                               return ids;
                             })
      .def("verify_axioms",
           [](const PySpace& s, const py::object& sample) {
             if (sample.is_none()) return json_to_py(to_json(verify_axioms(*s.space)));
             std::vector<std::string> ids;
             for (const auto& v : sample.cast<py::sequence>()) ids.push_back(v.cast<std::string>());
             return json_to_py(to_json(verify_axioms_ids(*s.space, ids)));
           },
           py::arg("sample") = py::none())
      .def("diamond",
           [](const PySpace& s, const std::string& p, const std::string& q) {
             return json_to_py(
                 to_json(*s.space, s.space->diamond(s.space->index_of(p), s.space->index_of(q))));
           })
      .def("tau",
           [](const PySpace& s, const std::string& p, const std::string& q) {
             return s.space->tau(s.space->index_of(p), s.space->index_of(q));
           })
      .def("to_document", [](const PySpace& s) { return json_to_py(space_to_json(*s.space)); });

  m.def(
      "sprinkle",
      [](int dim, double intensity, std::uint64_t seed) {
        SprinkleConfig cfg;
        cfg.dim = dim;
        cfg.region = Region::unit_diamond(dim - 1);
        cfg.intensity = intensity;
        cfg.seed = seed;
        return PySpace{std::make_shared<FiniteSpace>(sprinkle(cfg))};
      },
      py::arg("dim") = 2, py::arg("intensity") = 100.0, py::arg("seed") = 0,
      "Poisson sprinkle in the unit diamond");

  m.def(
      "cover_value",
      [](const PySpace& s, const py::object& target, double dim, double delta,
         const std::string& method, const py::object& pool) {
        const auto t = s.indices(target);
        const auto p = s.indices(pool);
        const auto cands = candidate_diamonds(*s.space, delta, p, false);
        const CoverSolution sol = parse_method(method) == CoverMethod::exact
                                      ? cover_value_exact(*s.space, t, cands, dim, delta)
                                      : cover_value_greedy(*s.space, t, cands, dim, delta);
        return json_to_py(to_json(*s.space, sol));
      },
      py::arg("space"), py::arg("target") = py::none(), py::arg("s") = 1.0, py::arg("delta") = 1.0,
      py::arg("method") = "exact", py::arg("pool") = py::none());

  m.def(
      "estimate_measure",
      [](const PySpace& s, const py::object& target, double dim, const std::vector<double>& schedule,
         const std::string& method, const py::object& pool) {
        const auto t = s.indices(target);
        const auto p = s.indices(pool);
        return json_to_py(
            to_json(estimate_measure(*s.space, t, dim, schedule, parse_method(method), p)));
      },
      py::arg("space"), py::arg("target") = py::none(), py::arg("s") = 1.0, py::arg("schedule"),
      py::arg("method") = "exact", py::arg("pool") = py::none());

  m.def(
      "strong_measure_value",
      [](const PySpace& s, const py::object& target, double delta, double dim,
         const py::object& pool) {
        const auto t = s.indices(target);
        const auto p = s.indices(pool);
        return json_to_py(to_json(*s.space, strong_measure_value(*s.space, t, delta, p, dim)));
      },
      py::arg("space"), py::arg("target") = py::none(), py::arg("delta") = 1.0, py::arg("s") = 1.0,
      py::arg("pool") = py::none());

  m.def(
      "weighted_integral",
      [](const PySpace& s, const py::dict& f, double dim, double delta, const std::string& method,
         const py::object& pool) {
        std::vector<double> values(static_cast<std::size_t>(s.space->size()), 0.0);
        for (const auto& item : f) {
          values[static_cast<std::size_t>(s.space->index_of(item.first.cast<std::string>()))] =
              item.second.cast<double>();
        }
        const auto p = s.indices(pool);
        const WeightedIntegral wi = weighted_causal_integral_delta(
            *s.space, values, dim, delta, p,
            method == "lp" ? IntegralMethod::lp : IntegralMethod::exact_enumeration);
        py::dict out;
        out["value"] = wi.value;
        out["cover"] = json_to_py(to_json(*s.space, wi.cover));
        return out;
      },
      py::arg("space"), py::arg("f"), py::arg("s") = 1.0, py::arg("delta") = 1.0,
      py::arg("method") = "lp", py::arg("pool") = py::none());

  m.def(
      "minkowski_volume",
      [](double tau, const std::vector<double>& schedule) {
        return json_to_py(to_json(run_minkowski_volume_experiment(tau, schedule)));
      },
      py::arg("tau"), py::arg("schedule"));

  m.def(
      "null_tiling",
      [](const Event& p, const Event& q, int k) {
        const CoverSolution sol = minkowski_null_tiling(MinkDiamond{p, q}, k);
        py::dict out;
        out["cost"] = sol.cost;
        out["tiles"] = static_cast<int>(sol.items.size());
        out["max_diam"] = sol.delta;
        return out;
      },
      py::arg("p"), py::arg("q"), py::arg("k"));

  m.def(
      "coarea_experiment",
      [](const py::object& config) {
        return json_to_py(to_json(run_coarea_experiment(config_from_json(py_to_json(config)))));
      },
      py::arg("config"));

  m.def(
      "covering_demo",
      [](std::uint64_t seed, int n, double ecc_max, int witnesses) {
        const CoveringDemo d = covering_demo(seed, n, ecc_max, witnesses);
        py::dict out;
        out["targets"] = json_to_py(json(d.targets));
        out["certificate"] = json_to_py(to_json(d.certificate));
        out["verification"] = json_to_py(to_json(d.verification));
        return out;
      },
      py::arg("seed") = 7, py::arg("n") = 50, py::arg("ecc_max") = 3.0,
      py::arg("witnesses") = 10000);

  m.def(
      "tau_length",
      [](const std::vector<Event>& samples, int levels) {
        const TauLengthResult r = tau_length(CausalCurve::from_events(samples), levels);
        py::dict out;
        out["value"] = r.value;
        out["per_level"] = r.per_level;
        return out;
      },
      py::arg("samples"), py::arg("levels") = 6);

  m.def(
      "v1_of_curve",
      [](const std::vector<Event>& samples, double delta) {
        return v1_of_curve(CausalCurve::from_events(samples), delta).cost;
      },
      py::arg("samples"), py::arg("delta"));

  m.def(
      "tlip",
      [](const PySpace& x, const PySpace& y, const py::dict& table) {
        std::vector<int> mapping(static_cast<std::size_t>(x.space->size()), -1);
        for (const auto& item : table) {
          mapping[static_cast<std::size_t>(x.space->index_of(item.first.cast<std::string>()))] =
              y.space->index_of(item.second.cast<std::string>());
        }
        const CausalMap map(x.space, y.space, mapping);
        const TlipVerdict v = tlip_estimate(map);
        const PreservationVerdict pres = check_causality_preserving(map);
        py::dict out;
        out["timelike_lipschitz"] = v.timelike_lipschitz;
        out["tlip"] = v.tlip;
        out["causality_preserving"] = pres.passed();
        return out;
      },
      py::arg("domain"), py::arg("codomain"), py::arg("table"));

  m.attr("__version__") = "0.1.0";
}
