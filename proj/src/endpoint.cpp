#include "bcl/endpoint.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "bcl/decision.hpp"

namespace bcl {

EndpointSplit endpoint_split(const ProblemInstance& inst) {
  inst.validate();
  EndpointSplit split;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const double x = inst.sensors[i].x;
    if (x == 0.0)
      split.left_ids.push_back(i);
    else if (x == 1.0)
      split.right_ids.push_back(i);
    else
      throw std::invalid_argument(
          "endpoint solver needs every sensor at 0 or 1");
  }
  split.split_index = split.left_ids.size();
  return split;
}

double reach_value(const Sensor& s, double t, double a, double alpha) {
  if (!s.rho)
    throw std::invalid_argument("reach value is defined for fixed radii only");
  if (!(t > 0.0) || !std::isfinite(t))
    throw std::invalid_argument("lifetime t must be positive and finite");
  if (!(a > 0.0) || !std::isfinite(a))
    throw std::invalid_argument("move cost a must be positive and finite");
  const double drain = t * pow_alpha(*s.rho, alpha);
  if (drain > s.battery) return 0.0;
  return (s.battery - drain) / a + *s.rho;
}

namespace {

std::vector<std::size_t> bidirectional_order(const ProblemInstance& inst,
                                             const std::vector<double>& key) {
  const EndpointSplit split = endpoint_split(inst);
  std::vector<std::size_t> left = split.left_ids;
  std::vector<std::size_t> right = split.right_ids;
  // Ascending key on the left, descending on the right; equal keys keep
  // index order on both sides.
  std::stable_sort(left.begin(), left.end(), [&](std::size_t p, std::size_t q) {
    return key[p] < key[q];
  });
  std::stable_sort(right.begin(), right.end(),
                   [&](std::size_t p, std::size_t q) { return key[p] > key[q]; });
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

}  // namespace

std::vector<std::size_t> bidirectional_reach_order(const ProblemInstance& inst,
                                                   double t) {
  if (!inst.fixed_radii())
    throw std::invalid_argument("reach order needs radii on every sensor");
  if (inst.move_cost.is_static())
    throw std::invalid_argument("reach order needs a finite move cost");
  const double a = inst.move_cost.value();
  std::vector<double> key(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i)
    key[i] = reach_value(inst.sensors[i], t, a, inst.alpha);
  return bidirectional_order(inst, key);
}

std::vector<std::size_t> bidirectional_battery_order(
    const ProblemInstance& inst) {
  if (inst.fixed_radii())
    throw std::invalid_argument("battery order applies to free radii");
  std::vector<double> key(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i)
    key[i] = inst.sensors[i].battery;
  return bidirectional_order(inst, key);
}

Solution solve_endpoint(const ProblemInstance& inst, const SearchConfig& cfg) {
  inst.validate();
  endpoint_split(inst);
  if (inst.move_cost.is_static())
    throw std::invalid_argument("endpoint solver needs a finite move cost");
  if (!inst.fixed_radii())
    return maximize_constrained(inst, bidirectional_battery_order(inst), cfg);

  // With fixed radii the preferred order shifts with t, so every probe
  // rebuilds it before deciding.
  auto probe = [&](double t) {
    return decide_fixed(inst, bidirectional_reach_order(inst, t), t);
  };
  auto unachievable = [&]() {
    Solution sol;
    for (const Sensor& s : inst.sensors) sol.y.push_back(s.x);
    sol.r.assign(inst.size(), 0.0);
    sol.lifetime = 0.0;
    sol.achievable = false;
    sol.order = identity_order(inst.size());
    return sol;
  };

  const double ub = lifetime_upper_bound(inst);
  if (!(ub > 0.0)) return unachievable();
  DecisionOutcome top = probe(ub);
  if (top.achievable) return *top.witness;

  const double t_min = std::min(cfg.epsilon * 0x1p-20, ub);
  DecisionOutcome low = probe(t_min);
  if (!low.achievable) return unachievable();

  double lo = t_min;
  double hi = ub;
  Solution best = *low.witness;
  while (hi - lo > cfg.epsilon) {
    const double mid = 0.5 * (lo + hi);
    DecisionOutcome out = probe(mid);
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

}  // namespace bcl
