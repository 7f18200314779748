#pragma once
// Per-sensor reach geometry at a candidate lifetime t.
//
// A sensor that travels distance d and then senses with radius r for t time
// needs a*d + t*r^alpha energy.  The largest radius it can hold at position p
// is r(p,t) = ((b - a|p - x|)/t)^(1/alpha), and the farthest point to the
// right it can cover is g(d) = d + r(x+d, t), maximized at the travel
// distance d_star computed in closed form.

#include <optional>

#include "bcl/model.hpp"

namespace bcl {

struct TravelOptimum {
  double d_star = 0.0;          // travel distance maximizing the right reach
  double reach = 0.0;           // d_star + radius_at_star, offset from x
  double radius_at_star = 0.0;  // sustainable radius after traveling d_star
};

struct AttachPoint {
  double p = 0.0;       // position whose coverage interval starts at z
  double radius = 0.0;  // sustaining radius at p
};

// ((b - a|p - x|)/t)^(1/alpha).  Throws std::domain_error when p is outside
// the reachable range [x - b/a, x + b/a], std::invalid_argument when t <= 0.
double sustaining_radius(const Sensor& s, double p, double t, double a,
                         double alpha);

// Right reach offset g(d) = d + ((b - a|d|)/t)^(1/alpha) for signed travel d.
// The left reach h(d) is right_reach(-d).  Throws std::domain_error when
// |d| > b/a.
double right_reach(const Sensor& s, double d, double t, double a, double alpha);

// Closed-form maximizer of the right reach.  For alpha > 1,
// d_star = b/a - (1/alpha) * (a/(alpha t))^(1/(alpha-1)) clamped to [0, b/a];
// for alpha = 1 the maximum sits at b/a when a < t and at 0 otherwise, with
// reach b/min{a,t}.
TravelOptimum optimal_travel(const Sensor& s, double t, double a, double alpha);

// Solves p - r(p,t) = z for p in the admissible domain (reachable range
// intersected with [window_lo, window_hi]) and returns the root maximizing
// p + r(p,t), or nullopt when no root exists.  Residual |p - r(p,t) - z| is
// at most 1e-12.  Both roots satisfy r = p - z, so p + r = 2p - z and the
// larger root always wins.
std::optional<AttachPoint> attach_position(const Sensor& s, double z, double t,
                                           double a, double alpha,
                                           double window_lo, double window_hi);

}  // namespace bcl
