#include "bcl/reach.hpp"

#include <algorithm>
#include <cmath>

namespace bcl {

namespace {

void check_ta(double t, double a) {
  if (!(t > 0.0) || !std::isfinite(t))
    throw std::invalid_argument("lifetime t must be positive and finite");
  if (!(a > 0.0) || !std::isfinite(a))
    throw std::invalid_argument("move cost a must be positive and finite");
}

double radius_at(const Sensor& s, double p, double t, double a, double alpha) {
  const double energy = s.battery - a * std::abs(p - s.x);
  return nth_root(std::max(energy, 0.0) / t, alpha);
}

}  // namespace

double sustaining_radius(const Sensor& s, double p, double t, double a,
                         double alpha) {
  check_ta(t, a);
  // Compare against b/a rather than multiplying back, so the endpoints of
  // the range as a caller computes them never land out of domain.
  if (std::abs(p - s.x) > s.battery / a)
    throw std::domain_error("position is outside the sensor's reachable range");
  return radius_at(s, p, t, a, alpha);
}

double right_reach(const Sensor& s, double d, double t, double a,
                   double alpha) {
  check_ta(t, a);
  if (std::abs(d) > s.battery / a)
    throw std::domain_error("travel distance exceeds the battery range");
  return d + nth_root(std::max(s.battery - a * std::abs(d), 0.0) / t, alpha);
}

TravelOptimum optimal_travel(const Sensor& s, double t, double a,
                             double alpha) {
  check_ta(t, a);
  const double span = s.battery / a;
  TravelOptimum opt;
  if (alpha == 1.0) {
    if (a < t) {
      opt.d_star = span;
      opt.radius_at_star = 0.0;
      opt.reach = span;
    } else {
      // a >= t: staying put is optimal (at a == t the reach is flat for
      // d >= 0; we pick d = 0 to keep battery slack).
      opt.d_star = 0.0;
      opt.radius_at_star = s.battery / t;
      opt.reach = opt.radius_at_star;
    }
    return opt;
  }
  const double raw = span - (1.0 / alpha) * nth_root(a / (alpha * t), alpha - 1.0);
  opt.d_star = std::clamp(raw, 0.0, span);
  opt.radius_at_star = radius_at(s, s.x + opt.d_star, t, a, alpha);
  opt.reach = opt.d_star + opt.radius_at_star;
  return opt;
}

namespace {

// phi(p) = p - r(p,t) is decreasing on [x - b/a, x - d_star] and increasing
// on [x - d_star, x + b/a]; every root satisfies r = p - z, so the rightmost
// root maximizes the covered right end p + r = 2p - z.

double bisect_root(const Sensor& s, double t, double a, double alpha, double z,
                   double lo, double hi, bool increasing) {
  auto phi = [&](double p) { return p - radius_at(s, p, t, a, alpha); };
  for (int it = 0; it < 200 && hi - lo > 1e-17; ++it) {
    const double mid = 0.5 * (lo + hi);
    const bool left = increasing ? (phi(mid) < z) : (phi(mid) > z);
    if (left)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

void quadratic_roots(double B, double C, double out[2], int& count) {
  count = 0;
  const double disc = B * B - 4.0 * C;
  if (disc < 0.0) return;
  const double sq = std::sqrt(disc);
  const double q = -0.5 * (B + (B >= 0.0 ? sq : -sq));
  out[count++] = q;
  if (q != 0.0) out[count++] = C / q;
}

}  // namespace

std::optional<AttachPoint> attach_position(const Sensor& s, double z, double t,
                                           double a, double alpha,
                                           double window_lo, double window_hi) {
  check_ta(t, a);
  const double span = s.battery / a;
  const double dlo = std::max(window_lo, s.x - span);
  const double dhi = std::min(window_hi, s.x + span);
  if (!(dlo <= dhi)) return std::nullopt;

  auto phi = [&](double p) { return p - radius_at(s, p, t, a, alpha); };
  const double residual_tol = 1e-12;
  double best_p = 0.0;
  bool found = false;
  auto consider = [&](double p) {
    if (!(p >= dlo - 1e-12 && p <= dhi + 1e-12)) return;
    p = std::clamp(p, dlo, dhi);
    if (std::abs(phi(p) - z) > residual_tol) return;
    if (!found || p > best_p) {
      best_p = p;
      found = true;
    }
  };

  if (alpha == 1.0) {
    // Right of x: p = x + (zeta t + b)/(t + a); left of x: w = x - p solves
    // ((x - z) t - b)/(t - a), degenerate when t == a (phi is flat left of x
    // and the right-side root already attains the maximum).
    consider(s.x + ((z - s.x) * t + s.battery) / (t + a));
    if (std::abs(t - a) > 1e-12 * std::max(t, a))
      consider(s.x - ((s.x - z) * t - s.battery) / (t - a));
  } else if (alpha == 2.0) {
    double w[2];
    int cnt = 0;
    // p >= x, w = p - x: w^2 + w(a/t - 2 zeta) + zeta^2 - b/t = 0.
    const double zeta = z - s.x;
    quadratic_roots(a / t - 2.0 * zeta, zeta * zeta - s.battery / t, w, cnt);
    for (int i = 0; i < cnt; ++i)
      if (w[i] >= -1e-15 && w[i] - zeta >= -1e-12) consider(s.x + w[i]);
    // p <= x, w = x - p: same form with xi = x - z.
    const double xi = s.x - z;
    quadratic_roots(a / t - 2.0 * xi, xi * xi - s.battery / t, w, cnt);
    for (int i = 0; i < cnt; ++i)
      if (w[i] >= -1e-15 && xi - w[i] >= -1e-12) consider(s.x - w[i]);
  }

  if (!found) {
    // Generic path: bisect each monotone branch of phi.
    const double pm =
        std::clamp(s.x - optimal_travel(s, t, a, alpha).d_star, dlo, dhi);
    const double slack = 1e-13;
    const double at_pm = phi(pm);
    if (z >= at_pm - slack && z <= phi(dhi) + slack)
      consider(bisect_root(s, t, a, alpha, z, pm, dhi, true));
    if (z >= at_pm - slack && z <= phi(dlo) + slack)
      consider(bisect_root(s, t, a, alpha, z, dlo, pm, false));
  }

  if (!found) return std::nullopt;
  return AttachPoint{best_p, radius_at(s, best_p, t, a, alpha)};
}

}  // namespace bcl
