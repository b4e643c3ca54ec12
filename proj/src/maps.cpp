#include "lcoarea/maps.hpp"

#include <algorithm>
#include <cmath>

namespace lcoarea {

CausalMap::CausalMap(std::shared_ptr<const FiniteSpace> domain,
                     std::shared_ptr<const FiniteSpace> codomain, std::vector<int> mapping)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), mapping_(std::move(mapping)) {
  if (!domain_ || !codomain_) throw InputError("causal map requires both spaces");
  if (static_cast<int>(mapping_.size()) != domain_->size()) {
    throw InputError("mapping size does not match the domain");
  }
  for (int y : mapping_) {
    if (y < 0 || y >= codomain_->size()) throw InputError("mapping image out of range");
  }
}

CausalDiamond CausalMap::image_diamond(int p, int q) const {
  return codomain_->diamond(apply(p), apply(q));
}

TlipVerdict tlip_estimate(const CausalMap& map) {
  const FiniteSpace& X = map.domain();
  const FiniteSpace& Y = map.codomain();
  TlipVerdict v;
  for (int p = 0; p < X.size(); ++p) {
    for (int q = 0; q < X.size(); ++q) {
      if (p == q || !X.le(p, q)) continue;
      const double tx = X.tau(p, q);
      const double ty = Y.tau(map.apply(p), map.apply(q));
      if (tx == 0.0) {
        if (ty > 0.0 && !v.witness) {
          v.timelike_lipschitz = false;
          v.witness = std::make_pair(p, q);
        }
        continue;
      }
      const double ratio = ty / tx;
      if (ratio > v.tlip) {
        v.tlip = ratio;
        v.attained_at = std::make_pair(p, q);
      }
    }
  }
  return v;
}

PreservationVerdict check_causality_preserving(const CausalMap& map) {
  const FiniteSpace& X = map.domain();
  const FiniteSpace& Y = map.codomain();
  PreservationVerdict v;
  for (int p = 0; p < X.size(); ++p) {
    for (int q = 0; q < X.size(); ++q) {
      if (!X.le(p, q)) continue;
      if (!Y.le(map.apply(p), map.apply(q))) {
        v.preserving = false;
        v.order_witness = std::make_pair(p, q);
        return v;
      }
    }
  }
  for (int p = 0; p < X.size(); ++p) {
    for (int q = 0; q < X.size(); ++q) {
      if (p == q || !X.le(p, q)) continue;
      const CausalDiamond dx = X.diamond(p, q);
      const CausalDiamond dy = map.image_diamond(p, q);
      for (int x : dx.members) {
        if (!std::binary_search(dy.members.begin(), dy.members.end(), map.apply(x))) {
          v.image_inclusion = false;
          v.inclusion_witness = std::make_pair(p, q);
          return v;
        }
      }
    }
  }
  return v;
}

double controlling_eta_at(const CausalMap& map, double delta) {
  const FiniteSpace& X = map.domain();
  double eta = 0.0;
  for (int p = 0; p < X.size(); ++p) {
    for (int q = 0; q < X.size(); ++q) {
      if (p == q || !X.le(p, q)) continue;
      if (X.diamond(p, q).diam >= delta) continue;
      eta = std::max(eta, map.image_diamond(p, q).diam);
    }
  }
  return eta;
}

std::vector<std::pair<double, double>> controlling_modulus(const CausalMap& map,
                                                           const std::vector<double>& grid) {
  std::vector<std::pair<double, double>> table;
  table.reserve(grid.size());
  for (double d : grid) table.emplace_back(d, controlling_eta_at(map, d));
  return table;
}

namespace {

std::vector<Point> label_points(const std::vector<Event>& events, const char* prefix) {
  std::vector<Point> pts;
  pts.reserve(events.size());
  for (std::size_t i = 0; i < events.size(); ++i) {
    pts.push_back(Point{prefix + std::to_string(i), events[i]});
  }
  return pts;
}

std::vector<int> identity_mapping(std::size_t n) {
  std::vector<int> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<int>(i);
  return m;
}

}  // namespace

CausalMapBundle make_scaling_map(const std::vector<Event>& points, double lambda) {
  if (!(lambda > 0.0)) throw InputError("scaling rule requires lambda > 0");
  std::vector<Event> scaled = points;
  for (auto& e : scaled) {
    for (auto& c : e) c *= lambda;
  }
  CausalMapBundle b;
  b.domain = std::make_shared<FiniteSpace>(
      FiniteSpace::from_coords_minkowski(label_points(points, "x")));
  b.codomain = std::make_shared<FiniteSpace>(
      FiniteSpace::from_coords_minkowski(label_points(scaled, "y")));
  b.mapping = identity_mapping(points.size());
  return b;
}

CausalMapBundle make_pad_zero_map(const std::vector<Event>& points) {
  std::vector<Event> padded = points;
  for (auto& e : padded) e.push_back(0.0);
  CausalMapBundle b;
  b.domain = std::make_shared<FiniteSpace>(
      FiniteSpace::from_coords_minkowski(label_points(points, "x")));
  b.codomain = std::make_shared<FiniteSpace>(
      FiniteSpace::from_coords_minkowski(label_points(padded, "y")));
  b.mapping = identity_mapping(points.size());
  return b;
}

CausalMapBundle make_time_projection_map(const std::vector<Event>& points) {
  // Deduplicate projected values so the line is a genuine chain.
  std::vector<double> times;
  std::vector<int> mapping;
  mapping.reserve(points.size());
  for (const auto& e : points) {
    const double t = e.at(0);
    auto it = std::find(times.begin(), times.end(), t);
    if (it == times.end()) {
      times.push_back(t);
      mapping.push_back(static_cast<int>(times.size()) - 1);
    } else {
      mapping.push_back(static_cast<int>(it - times.begin()));
    }
  }
  std::vector<Event> line;
  line.reserve(times.size());
  for (double t : times) line.push_back(Event{t});
  CausalMapBundle b;
  b.domain = std::make_shared<FiniteSpace>(
      FiniteSpace::from_coords_minkowski(label_points(points, "x")));
  b.codomain = std::make_shared<FiniteSpace>(
      FiniteSpace::from_coords_minkowski(label_points(line, "y")));
  b.mapping = std::move(mapping);
  return b;
}

CausalMapBundle make_rule_map(const std::string& rule, const std::vector<Event>& points) {
  if (rule.rfind("scale:", 0) == 0) {
    return make_scaling_map(points, std::stod(rule.substr(6)));
  }
  if (rule == "pad_zero") return make_pad_zero_map(points);
  if (rule == "drop_time_to_line") return make_time_projection_map(points);
  throw InputError("unknown map rule: " + rule);
}

}  // namespace lcoarea
