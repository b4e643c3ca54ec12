#pragma once

#include <utility>
#include <vector>

#include "lcoarea/common.hpp"

namespace lcoarea {

/// Coordinate point in R^{1,n}, time first: (t, x1, ..., xn).
using Event = std::vector<double>;

namespace mink {

/// Time separation: sqrt(dt^2 - |dx|^2) when dt >= |dx|, else 0.
double tau(const Event& x, const Event& y);

/// Causal relation: dt >= |dx|.
bool le(const Event& x, const Event& y);

/// Chronological relation: dt > |dx|.
bool ll(const Event& x, const Event& y);

/// Euclidean background distance.
double dist(const Event& x, const Event& y);

bool in_closed_diamond(const Event& p, const Event& q, const Event& z);
bool in_open_diamond(const Event& p, const Event& q, const Event& z);

/// diam_d of the solid diamond J(p,q) under the Euclidean background
/// metric. For a causal pair this equals dist(p,q): the vertex pair is a
/// diameter-realizing pair of the convex body (checked by sampling in the
/// test suite for n = 1..3). Non-causal pairs give 0 (empty diamond).
double diamond_diam(const Event& p, const Event& q);

}  // namespace mink

/// Analytic causal diamond in Minkowski space, kept as its vertex pair.
struct MinkDiamond {
  Event p;
  Event q;

  double tau() const { return mink::tau(p, q); }
  double diam() const { return mink::diamond_diam(p, q); }
  bool contains(const Event& z) const { return mink::in_closed_diamond(p, q, z); }
  bool contains_open(const Event& z) const { return mink::in_open_diamond(p, q, z); }
};

/// Null-coordinate rectangle of a diamond in R^{1,1}: u = t - x, v = t + x.
/// A causal diamond is exactly an axis-aligned rectangle in (u, v), which
/// makes intersection and containment tests exact.
struct NullRect {
  double u0, u1, v0, v1;

  bool valid() const { return u0 <= u1 && v0 <= v1; }
};

/// Requires spatial dimension 1 and p <= q.
NullRect to_null_rect(const MinkDiamond& d);
MinkDiamond from_null_rect(const NullRect& r);

bool rects_intersect(const NullRect& a, const NullRect& b);
bool rect_contains(const NullRect& outer, const NullRect& inner);

/// Exact set tests for diamonds in R^{1,1}.
bool diamonds_intersect_2d(const MinkDiamond& a, const MinkDiamond& b);
bool diamond_contains_2d(const MinkDiamond& outer, const MinkDiamond& inner);

/// Uniform point inside a (1+1)-diamond, drawn in null coordinates.
Event sample_in_diamond_2d(const MinkDiamond& d, Rng& rng);

}  // namespace lcoarea
