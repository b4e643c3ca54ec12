#include "lcoarea/geometry.hpp"

#include <cmath>

namespace lcoarea {

namespace {

void check_dims(const Event& x, const Event& y) {
  if (x.size() != y.size() || x.empty()) {
    throw InputError("coordinate dimension mismatch: " + std::to_string(x.size()) +
                     " vs " + std::to_string(y.size()));
  }
}

double spatial_dist2(const Event& x, const Event& y) {
  double s = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    const double d = y[i] - x[i];
    s += d * d;
  }
  return s;
}

}  // namespace

namespace mink {

double tau(const Event& x, const Event& y) {
  check_dims(x, y);
  const double dt = y[0] - x[0];
  if (dt < 0.0) return 0.0;
  const double r2 = spatial_dist2(x, y);
  const double q = dt * dt - r2;
  return q > 0.0 ? std::sqrt(q) : 0.0;
}

bool le(const Event& x, const Event& y) {
  check_dims(x, y);
  const double dt = y[0] - x[0];
  if (dt < 0.0) return false;
  return dt * dt >= spatial_dist2(x, y);
}

bool ll(const Event& x, const Event& y) {
  check_dims(x, y);
  const double dt = y[0] - x[0];
  if (dt <= 0.0) return false;
  return dt * dt > spatial_dist2(x, y);
}

double dist(const Event& x, const Event& y) {
  check_dims(x, y);
  const double dt = y[0] - x[0];
  return std::sqrt(dt * dt + spatial_dist2(x, y));
}

bool in_closed_diamond(const Event& p, const Event& q, const Event& z) {
  return le(p, z) && le(z, q);
}

bool in_open_diamond(const Event& p, const Event& q, const Event& z) {
  return ll(p, z) && ll(z, q);
}

double diamond_diam(const Event& p, const Event& q) {
  if (!le(p, q)) return 0.0;
  return dist(p, q);
}

}  // namespace mink

NullRect to_null_rect(const MinkDiamond& d) {
  if (d.p.size() != 2 || d.q.size() != 2) {
    throw UnsupportedError("null coordinates require spatial dimension 1");
  }
  if (!mink::le(d.p, d.q)) {
    throw InputError("null rectangle of a non-causal vertex pair");
  }
  return NullRect{d.p[0] - d.p[1], d.q[0] - d.q[1], d.p[0] + d.p[1], d.q[0] + d.q[1]};
}

MinkDiamond from_null_rect(const NullRect& r) {
  return MinkDiamond{{(r.u0 + r.v0) / 2.0, (r.v0 - r.u0) / 2.0},
                     {(r.u1 + r.v1) / 2.0, (r.v1 - r.u1) / 2.0}};
}

bool rects_intersect(const NullRect& a, const NullRect& b) {
  return std::max(a.u0, b.u0) <= std::min(a.u1, b.u1) &&
         std::max(a.v0, b.v0) <= std::min(a.v1, b.v1);
}

bool rect_contains(const NullRect& outer, const NullRect& inner) {
  return outer.u0 <= inner.u0 && inner.u1 <= outer.u1 &&
         outer.v0 <= inner.v0 && inner.v1 <= outer.v1;
}

bool diamonds_intersect_2d(const MinkDiamond& a, const MinkDiamond& b) {
  return rects_intersect(to_null_rect(a), to_null_rect(b));
}

bool diamond_contains_2d(const MinkDiamond& outer, const MinkDiamond& inner) {
  return rect_contains(to_null_rect(outer), to_null_rect(inner));
}

Event sample_in_diamond_2d(const MinkDiamond& d, Rng& rng) {
  const NullRect r = to_null_rect(d);
  const double u = rng.uniform(r.u0, r.u1);
  const double v = rng.uniform(r.v0, r.v1);
  return Event{(u + v) / 2.0, (v - u) / 2.0};
}

}  // namespace lcoarea
