#include "bcl/search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bcl/decision.hpp"

namespace bcl {

double lifetime_upper_bound(const ProblemInstance& inst) {
  inst.validate();
  if (inst.fixed_radii()) {
    double best = 0.0;
    for (const Sensor& s : inst.sensors) {
      if (*s.rho > 0.0)
        best = std::max(best, s.battery / pow_alpha(*s.rho, inst.alpha));
    }
    return best;
  }
  double sum = 0.0;
  for (const Sensor& s : inst.sensors) sum += nth_root(s.battery, inst.alpha);
  return pow_alpha(2.0 * sum, inst.alpha);
}

namespace {

Solution unachievable_solution(const ProblemInstance& inst,
                               const std::vector<std::size_t>& order) {
  Solution sol;
  sol.y.reserve(inst.size());
  for (const Sensor& s : inst.sensors) sol.y.push_back(s.x);
  sol.r.assign(inst.size(), 0.0);
  sol.lifetime = 0.0;
  sol.achievable = false;
  sol.order = order;
  return sol;
}

}  // namespace

Solution maximize_constrained(const ProblemInstance& inst,
                              const std::vector<std::size_t>& order,
                              const SearchConfig& cfg) {
  inst.validate();
  require_permutation(order, inst.size());
  if (!(cfg.epsilon > 0.0) || !std::isfinite(cfg.epsilon))
    throw std::invalid_argument("epsilon must be positive and finite");
  const bool fixed = inst.fixed_radii();
  auto decide = [&](double t) {
    return fixed ? decide_fixed(inst, order, t) : decide_variable(inst, order, t);
  };

  const double ub = lifetime_upper_bound(inst);
  if (!(ub > 0.0)) return unachievable_solution(inst, order);

  DecisionOutcome top = decide(ub);
  if (top.achievable) return *top.witness;

  const double t_min = cfg.epsilon * 0x1p-20;
  DecisionOutcome probe = decide(std::min(t_min, ub));
  if (!probe.achievable) return unachievable_solution(inst, order);

  double lo = std::min(t_min, ub);
  double hi = ub;
  Solution best = *probe.witness;
  while (hi - lo > cfg.epsilon) {
    const double mid = 0.5 * (lo + hi);
    DecisionOutcome out = decide(mid);
    if (out.achievable) {
      lo = mid;
      best = *out.witness;
    } else {
      hi = mid;
    }
  }
  best.lifetime = lo;
  return best;
}

Solution maximize_exhaustive(const ProblemInstance& inst,
                             const SearchConfig& cfg) {
  inst.validate();
  if (inst.size() > cfg.max_order_n)
    throw std::invalid_argument(
        "instance too large for an exhaustive sweep over orders");
  std::vector<std::size_t> perm = identity_order(inst.size());
  Solution best = maximize_constrained(inst, perm, cfg);
  while (std::next_permutation(perm.begin(), perm.end())) {
    Solution sol = maximize_constrained(inst, perm, cfg);
    if (sol.lifetime > best.lifetime) best = sol;
  }
  return best;
}

}  // namespace bcl
