#include "lcoarea/backends.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

#include "lcoarea/measure.hpp"

namespace lcoarea {

using nlohmann::json;
using nlohmann::ordered_json;

int Region::dim() const {
  return static_cast<int>(kind == Kind::box ? lo.size() : p.size());
}

double Region::volume() const {
  if (kind == Kind::box) {
    if (lo.size() != hi.size() || lo.empty()) throw InputError("malformed box region");
    double v = 1.0;
    for (std::size_t i = 0; i < lo.size(); ++i) v *= hi[i] - lo[i];
    if (!(v > 0.0)) throw InputError("region has no volume");
    return v;
  }
  const double t = mink::tau(p, q);
  if (!(t > 0.0)) throw InputError("region has no volume");
  return rho(static_cast<double>(p.size()), t, true);
}

Region Region::unit_diamond(int spatial_dim) {
  Region r;
  r.kind = Kind::diamond;
  r.p.assign(static_cast<std::size_t>(spatial_dim) + 1, 0.0);
  r.q = r.p;
  r.q[0] = 1.0;
  return r;
}

Region Region::box(Event lo, Event hi) {
  Region r;
  r.kind = Kind::box;
  r.lo = std::move(lo);
  r.hi = std::move(hi);
  return r;
}

Region Region::diamond(Event p, Event q) {
  Region r;
  r.kind = Kind::diamond;
  r.p = std::move(p);
  r.q = std::move(q);
  return r;
}

std::vector<Event> sprinkle_points(const SprinkleConfig& cfg) {
  if (!(cfg.intensity > 0.0)) throw InputError("sprinkle intensity must be positive");
  if (cfg.region.dim() != cfg.dim) throw InputError("region dimension does not match N");
  const double vol = cfg.region.volume();
  Rng rng(cfg.seed);
  const std::size_t count = rng.poisson(cfg.intensity * vol);
  std::vector<Event> pts;
  pts.reserve(count);
  if (cfg.region.kind == Region::Kind::box) {
    const auto& lo = cfg.region.lo;
    const auto& hi = cfg.region.hi;
    for (std::size_t k = 0; k < count; ++k) {
      Event e(lo.size());
      for (std::size_t i = 0; i < lo.size(); ++i) e[i] = rng.uniform(lo[i], hi[i]);
      pts.push_back(std::move(e));
    }
    return pts;
  }
  const auto& p = cfg.region.p;
  const auto& q = cfg.region.q;
  if (p.size() == 2) {
    // Exact in null coordinates: the diamond is a rectangle.
    const MinkDiamond d{p, q};
    for (std::size_t k = 0; k < count; ++k) pts.push_back(sample_in_diamond_2d(d, rng));
    return pts;
  }
  // Rejection from the bounding box of the diamond.
  Event lo = p, hi = p;
  for (std::size_t i = 0; i < p.size(); ++i) {
    lo[i] = std::min(p[i], q[i]);
    hi[i] = std::max(p[i], q[i]);
  }
  const double half = mink::tau(p, q) / 2.0;
  for (std::size_t i = 1; i < p.size(); ++i) {
    lo[i] -= half;
    hi[i] += half;
  }
  for (std::size_t k = 0; k < count; ++k) {
    Event e(p.size());
    do {
      for (std::size_t i = 0; i < p.size(); ++i) e[i] = rng.uniform(lo[i], hi[i]);
    } while (!mink::in_closed_diamond(p, q, e));
    pts.push_back(e);
  }
  return pts;
}

FiniteSpace sprinkle(const SprinkleConfig& cfg) {
  const auto events = sprinkle_points(cfg);
  std::vector<Point> pts;
  pts.reserve(events.size());
  for (std::size_t i = 0; i < events.size(); ++i) {
    pts.push_back(Point{"s" + std::to_string(i), events[i]});
  }
  return FiniteSpace::from_coords_minkowski(std::move(pts));
}

std::vector<std::vector<double>> longest_path_tau(int n, const std::vector<WeightedEdge>& edges) {
  if (n < 0) throw InputError("negative vertex count");
  std::vector<std::vector<std::pair<int, double>>> adj(static_cast<std::size_t>(n));
  std::vector<int> indegree(static_cast<std::size_t>(n), 0);
  for (const auto& e : edges) {
    if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n) {
      throw InputError("edge endpoint out of range");
    }
    if (e.weight < 0.0) throw InputError("edge weights must be nonnegative");
    if (e.weight > 0.0 && !e.chronological) {
      throw InputError("positive-weight link must be marked chronological");
    }
    if (e.weight == 0.0 && e.chronological) {
      throw InputError("chronological link must carry positive weight");
    }
    adj[static_cast<std::size_t>(e.from)].push_back({e.to, e.weight});
    ++indegree[static_cast<std::size_t>(e.to)];
  }

  // Kahn topological order; leftovers witness a cycle.
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  std::queue<int> ready;
  std::vector<int> deg = indegree;
  for (int v = 0; v < n; ++v) {
    if (deg[static_cast<std::size_t>(v)] == 0) ready.push(v);
  }
  while (!ready.empty()) {
    const int v = ready.front();
    ready.pop();
    order.push_back(v);
    for (const auto& [w, _] : adj[static_cast<std::size_t>(v)]) {
      if (--deg[static_cast<std::size_t>(w)] == 0) ready.push(w);
    }
  }
  if (static_cast<int>(order.size()) != n) {
    // Every leftover vertex keeps an incoming edge from another leftover
    // vertex, so walking predecessors must revisit one; that loop is the
    // witness (reversed into edge direction).
    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    for (int v : order) removed[static_cast<std::size_t>(v)] = true;
    std::vector<std::vector<int>> pred(static_cast<std::size_t>(n));
    for (const auto& e : edges) {
      if (!removed[static_cast<std::size_t>(e.from)] && !removed[static_cast<std::size_t>(e.to)]) {
        pred[static_cast<std::size_t>(e.to)].push_back(e.from);
      }
    }
    int start = 0;
    while (removed[static_cast<std::size_t>(start)]) ++start;
    std::vector<int> walk{start};
    std::vector<int> seen_at(static_cast<std::size_t>(n), -1);
    seen_at[static_cast<std::size_t>(start)] = 0;
    int cur = start;
    for (;;) {
      const int prev = pred[static_cast<std::size_t>(cur)].front();
      if (seen_at[static_cast<std::size_t>(prev)] >= 0) {
        std::ostringstream msg;
        msg << "cycle detected: " << prev;
        for (std::size_t i = walk.size(); i-- > static_cast<std::size_t>(
                                              seen_at[static_cast<std::size_t>(prev)]);) {
          msg << " -> " << walk[i];
        }
        throw InputError(msg.str());
      }
      seen_at[static_cast<std::size_t>(prev)] = static_cast<int>(walk.size());
      walk.push_back(prev);
      cur = prev;
    }
  }

  std::vector<std::vector<double>> tau(static_cast<std::size_t>(n),
                                       std::vector<double>(static_cast<std::size_t>(n), 0.0));
  const double unreachable = -1.0;
  for (int src = 0; src < n; ++src) {
    std::vector<double> best(static_cast<std::size_t>(n), unreachable);
    best[static_cast<std::size_t>(src)] = 0.0;
    for (int v : order) {
      if (best[static_cast<std::size_t>(v)] == unreachable) continue;
      for (const auto& [w, weight] : adj[static_cast<std::size_t>(v)]) {
        best[static_cast<std::size_t>(w)] =
            std::max(best[static_cast<std::size_t>(w)], best[static_cast<std::size_t>(v)] + weight);
      }
    }
    for (int dst = 0; dst < n; ++dst) {
      if (dst == src) continue;
      const double b = best[static_cast<std::size_t>(dst)];
      tau[static_cast<std::size_t>(src)][static_cast<std::size_t>(dst)] = b == unreachable ? 0.0 : b;
    }
  }
  return tau;
}

namespace {

std::vector<Point> parse_points(const json& doc, bool* have_coords) {
  if (!doc.contains("points") || !doc["points"].is_array()) {
    throw InputError("document lacks a points array");
  }
  std::vector<Point> pts;
  *have_coords = true;
  for (const auto& jp : doc["points"]) {
    Point p;
    if (!jp.contains("id") || !jp["id"].is_string()) throw InputError("point lacks an id");
    p.id = jp["id"].get<std::string>();
    if (jp.contains("coords")) {
      p.coords = jp["coords"].get<Event>();
    } else {
      *have_coords = false;
    }
    pts.push_back(std::move(p));
  }
  return pts;
}

double json_tau_value(const json& v) {
  if (v.is_string() && v.get<std::string>() == "inf") return kInf;
  if (!v.is_number()) throw InputError("tau value must be a number or \"inf\"");
  const double d = v.get<double>();
  if (d < 0.0) throw InputError("tau value must be nonnegative");
  return d;
}

}  // namespace

FiniteSpace parse_space_unchecked(const json& doc) {
  bool have_coords = false;
  std::vector<Point> pts = parse_points(doc, &have_coords);
  const int n = static_cast<int>(pts.size());
  auto check_index = [n](const json& v) {
    const int i = v.get<int>();
    if (i < 0 || i >= n) throw InputError("point index out of range: " + std::to_string(i));
    return i;
  };

  const json rel = doc.value("relations", json{{"mode", "from_coords_minkowski"}});
  const json tau_spec = doc.value("tau", json{{"mode", "from_coords"}});
  const json metric = doc.value("metric", json("euclidean"));
  const std::string rel_mode = rel.value("mode", "from_coords_minkowski");
  const std::string tau_mode = tau_spec.value("mode", "from_coords");

  const bool needs_coords =
      rel_mode == "from_coords_minkowski" || tau_mode == "from_coords" ||
      (metric.is_string() && metric.get<std::string>() == "euclidean");
  if (needs_coords && !have_coords) {
    throw InputError("from-coords mode requires coordinates on every point");
  }

  FiniteSpace space = [&] {
    if (rel_mode == "from_coords_minkowski" && tau_mode == "from_coords" &&
        metric.is_string() && metric.get<std::string>() == "euclidean") {
      return FiniteSpace::from_coords_minkowski(pts);
    }

    const std::size_t un = static_cast<std::size_t>(n);
    std::vector<std::vector<bool>> le(un, std::vector<bool>(un, false));
    std::optional<std::vector<std::vector<bool>>> ll;
    std::vector<std::vector<double>> tau(un, std::vector<double>(un, 0.0));
    std::vector<std::vector<double>> dist(un, std::vector<double>(un, 0.0));

    if (rel_mode == "from_coords_minkowski") {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          le[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
              mink::le(*pts[static_cast<std::size_t>(i)].coords,
                       *pts[static_cast<std::size_t>(j)].coords);
        }
      }
    } else if (rel_mode == "explicit") {
      for (const auto& pair : rel.value("le", json::array())) {
        le[static_cast<std::size_t>(check_index(pair[0]))]
          [static_cast<std::size_t>(check_index(pair[1]))] = true;
      }
      if (rel.contains("ll")) {
        ll.emplace(un, std::vector<bool>(un, false));
        for (const auto& pair : rel["ll"]) {
          (*ll)[static_cast<std::size_t>(check_index(pair[0]))]
               [static_cast<std::size_t>(check_index(pair[1]))] = true;
        }
      }
    } else {
      throw InputError("unknown relations mode: " + rel_mode);
    }

    if (tau_mode == "from_coords") {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          tau[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
              mink::tau(*pts[static_cast<std::size_t>(i)].coords,
                        *pts[static_cast<std::size_t>(j)].coords);
        }
      }
    } else if (tau_mode == "longest_path") {
      std::vector<WeightedEdge> edges;
      for (const auto& link : tau_spec.value("links", json::array())) {
        const int i = check_index(link[0]);
        const int j = check_index(link[1]);
        const double w = json_tau_value(link[2]);
        edges.push_back(WeightedEdge{i, j, w, w > 0.0});
        // Links are causal relations; fold them into <= before closure.
        le[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
      }
      tau = longest_path_tau(n, edges);
    } else if (tau_mode == "explicit") {
      for (const auto& pair : tau_spec.value("pairs", json::array())) {
        tau[static_cast<std::size_t>(check_index(pair[0]))]
           [static_cast<std::size_t>(check_index(pair[1]))] = json_tau_value(pair[2]);
      }
    } else {
      throw InputError("unknown tau mode: " + tau_mode);
    }

    if (metric.is_string()) {
      if (metric.get<std::string>() != "euclidean") {
        throw InputError("unknown metric mode: " + metric.get<std::string>());
      }
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          Event a = *pts[static_cast<std::size_t>(i)].coords;
          Event b = *pts[static_cast<std::size_t>(j)].coords;
          dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = mink::dist(a, b);
        }
      }
    } else {
      if (!metric.contains("pairs")) throw InputError("metric table lacks pairs");
      std::vector<std::vector<bool>> given(un, std::vector<bool>(un, false));
      for (const auto& trip : metric["pairs"]) {
        const int i = check_index(trip[0]);
        const int j = check_index(trip[1]);
        const double d = trip[2].get<double>();
        if (d < 0.0) throw InputError("metric entries must be nonnegative");
        dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = d;
        dist[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = d;
        given[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
        given[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = true;
      }
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (i != j && !given[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
            throw InputError("metric table missing pair (" + std::to_string(i) + "," +
                             std::to_string(j) + ")");
          }
        }
      }
    }
    return FiniteSpace::from_tables(std::move(pts), std::move(le), std::move(tau),
                                    std::move(dist), std::move(ll));
  }();
  return space;
}

FiniteSpace parse_space(const json& doc) {
  FiniteSpace space = parse_space_unchecked(doc);
  // Axiom gate. All triples up to a size threshold, a seeded sample beyond
  // (the full scan is cubic in |X|).
  AxiomReport report;
  if (space.size() <= 400) {
    report = verify_axioms(space);
  } else {
    Rng rng(0x5eed5eedULL);
    std::vector<int> sample;
    sample.reserve(400);
    for (int k = 0; k < 400; ++k) {
      sample.push_back(static_cast<int>(rng.integer(static_cast<std::uint64_t>(space.size()))));
    }
    std::sort(sample.begin(), sample.end());
    sample.erase(std::unique(sample.begin(), sample.end()), sample.end());
    report = verify_axioms(space, &sample);
  }
  for (const auto& check : report.checks) {
    if (!check.passed) {
      std::string msg = "axiom violation: " + check.axiom + " (witness:";
      for (const auto& w : check.witness) msg += " " + w;
      msg += ")";
      throw InputError(msg);
    }
  }
  return space;
}

ordered_json space_to_json(const FiniteSpace& space) {
  ordered_json points = ordered_json::array();
  for (const auto& p : space.points()) {
    if (!p.coords) {
      throw UnsupportedError("space_to_json requires a coordinate-backed space");
    }
    points.push_back(ordered_json{{"id", p.id}, {"coords", *p.coords}});
  }
  return ordered_json{{"points", points},
                      {"metric", "euclidean"},
                      {"relations", {{"mode", "from_coords_minkowski"}}},
                      {"tau", {{"mode", "from_coords"}}}};
}

}  // namespace lcoarea
