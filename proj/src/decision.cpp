#include "bcl/decision.hpp"

#include <algorithm>
#include <cmath>

#include "bcl/reach.hpp"

namespace bcl {

namespace {

void check_common(const ProblemInstance& inst,
                  const std::vector<std::size_t>& order) {
  inst.validate();
  require_permutation(order, inst.size());
  if (inst.move_cost.is_static())
    throw std::invalid_argument(
        "decision procedures need a finite move cost; use the static solver "
        "for immobile sensors");
}

void check_t(double t) {
  if (!(t > 0.0) || !std::isfinite(t))
    throw std::invalid_argument("lifetime t must be positive and finite");
}

}  // namespace

ReachProfile compute_bounds(const ProblemInstance& inst,
                            const std::vector<std::size_t>& order) {
  check_common(inst, order);
  const double a = inst.move_cost.value();
  const std::size_t n = inst.size();
  ReachProfile prof;
  prof.l.resize(n);
  prof.u.resize(n);
  double floor_acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Sensor& s = inst.sensors[order[i]];
    floor_acc = std::max(floor_acc, s.x - s.battery / a);
    prof.l[i] = floor_acc;
  }
  double cap_acc = 1.0;
  for (std::size_t i = n; i-- > 0;) {
    const Sensor& s = inst.sensors[order[i]];
    cap_acc = std::min(cap_acc, s.x + s.battery / a);
    prof.u[i] = cap_acc;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (prof.u[i] < prof.l[i] - cover_tol) {
      prof.infeasible_at = i;
      break;
    }
  }
  return prof;
}

ReachProfile compute_bounds_fixed(const ProblemInstance& inst,
                                  const std::vector<std::size_t>& order,
                                  double t) {
  check_t(t);
  if (!inst.fixed_radii())
    throw std::invalid_argument("fixed-radius bounds need radii on every sensor");
  ReachProfile prof = compute_bounds(inst, order);
  const double a = inst.move_cost.value();
  const std::size_t n = inst.size();
  std::vector<double> s_vec(n), e_vec(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Sensor& s = inst.sensors[order[i]];
    const double budget = s.battery - t * pow_alpha(*s.rho, inst.alpha);
    s_vec[i] = std::max(s.x - budget / a, prof.l[i]);
    e_vec[i] = std::min(s.x + budget / a, prof.u[i]);
  }
  prof.s = std::move(s_vec);
  prof.e = std::move(e_vec);
  return prof;
}

DecisionOutcome decide_fixed(const ProblemInstance& inst,
                             const std::vector<std::size_t>& order, double t) {
  const ReachProfile prof = compute_bounds_fixed(inst, order, t);
  DecisionOutcome out;
  out.achievable = false;
  if (prof.infeasible_at) return out;

  const std::size_t n = inst.size();
  std::vector<double> y(n, 0.0), r(n, 0.0);
  double z = 0.0;
  double y_prev = 0.0;
  out.covered_prefix_trace.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = order[i];
    const Sensor& s = inst.sensors[j];
    const double rho = *s.rho;
    const double budget = s.battery - t * pow_alpha(rho, inst.alpha);
    const double si = (*prof.s)[i];
    const double ei = (*prof.e)[i];
    const bool active = budget >= 0.0 && si <= ei &&
                        z >= si - rho - cover_tol && z <= ei + rho + cover_tol;
    if (active) {
      // Clamp to [si, ei] so the witness never spends more than its budget;
      // a sub-tolerance gap on the left is absorbed by the coverage slack.
      const double yy = std::min(std::max(z + rho, si), ei);
      y[j] = yy;
      r[j] = rho;
      for (std::size_t k = 0; k < i; ++k) {
        const std::size_t jk = order[k];
        if (y[jk] > yy) {
          y[jk] = yy;
          r[jk] = 0.0;
        }
      }
      z = std::max(z, yy + rho);
    } else {
      y[j] = std::max(prof.l[i], y_prev);
      r[j] = 0.0;
    }
    y_prev = y[j];
    out.covered_prefix_trace.push_back(z);
  }
  out.achievable = z >= 1.0 - cover_tol;
  if (out.achievable) {
    Solution sol;
    sol.y = std::move(y);
    sol.r = std::move(r);
    sol.lifetime = t;
    sol.achievable = true;
    sol.order = order;
    out.witness = std::move(sol);
  }
  return out;
}

DecisionOutcome decide_variable(const ProblemInstance& inst,
                                const std::vector<std::size_t>& order,
                                double t) {
  check_t(t);
  for (const Sensor& s : inst.sensors)
    if (s.rho)
      throw std::invalid_argument(
          "the variable-radius decision applies to instances without fixed "
          "radii");
  const ReachProfile prof = compute_bounds(inst, order);
  const double a = inst.move_cost.value();
  const double alpha = inst.alpha;
  DecisionOutcome out;
  out.achievable = false;
  if (prof.infeasible_at) return out;

  const std::size_t n = inst.size();
  std::vector<double> y(n, 0.0), r(n, 0.0);
  double z = 0.0;
  double y_prev = 0.0;
  out.covered_prefix_trace.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = order[i];
    const Sensor& s = inst.sensors[j];
    auto radius = [&](double p) {
      return nth_root(std::max(s.battery - a * std::abs(p - s.x), 0.0) / t,
                      alpha);
    };
    const double lo = prof.l[i];
    const double hi = prof.u[i];
    const TravelOptimum opt = optimal_travel(s, t, a, alpha);
    const double q_lo = std::min(std::max(s.x - opt.d_star, lo), hi);
    const double q_hi = std::min(std::max(s.x + opt.d_star, lo), hi);
    const double attach_min = q_lo - radius(q_lo);
    const double extend_max = q_hi + radius(q_hi);
    const bool active =
        z >= attach_min - cover_tol && z <= extend_max + cover_tol;
    if (active) {
      // Rightmost position whose left edge still attaches to [0, z]; the
      // root is searched over the whole battery range and the order window
      // caps it afterwards.
      const double span = s.battery / a;
      const auto ap =
          attach_position(s, z, t, a, alpha, s.x - span, s.x + span);
      double cand = std::min(hi, s.x + opt.d_star);
      if (ap) cand = std::min(cand, ap->p);
      double yy = std::max(cand, lo);
      if (yy - radius(yy) > z + cover_tol) yy = q_lo;
      const double rr = radius(yy);
      y[j] = yy;
      r[j] = rr;
      for (std::size_t k = 0; k < i; ++k) {
        const std::size_t jk = order[k];
        if (y[jk] > yy) {
          y[jk] = yy;
          r[jk] = 0.0;
        }
      }
      z = std::max(z, yy + rr);
    } else {
      y[j] = std::max(lo, y_prev);
      r[j] = 0.0;
    }
    y_prev = y[j];
    out.covered_prefix_trace.push_back(z);
  }
  out.achievable = z >= 1.0 - cover_tol;
  if (out.achievable) {
    Solution sol;
    sol.y = std::move(y);
    sol.r = std::move(r);
    sol.lifetime = t;
    sol.achievable = true;
    sol.order = order;
    out.witness = std::move(sol);
  }
  return out;
}

}  // namespace bcl
