#include "bcl/extreme.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace bcl {

namespace {

std::vector<double> individual_lifetimes(const ProblemInstance& inst) {
  std::vector<double> t(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const Sensor& s = inst.sensors[i];
    t[i] = *s.rho > 0.0 ? s.battery / pow_alpha(*s.rho, inst.alpha)
                        : std::numeric_limits<double>::infinity();
  }
  return t;
}

std::vector<std::size_t> by_descending_lifetime(const std::vector<double>& t) {
  std::vector<std::size_t> ids(t.size());
  std::iota(ids.begin(), ids.end(), 0);
  std::stable_sort(ids.begin(), ids.end(),
                   [&](std::size_t p, std::size_t q) { return t[p] > t[q]; });
  return ids;
}

bool covers_in_place(const ProblemInstance& inst,
                     const std::vector<std::size_t>& chosen) {
  std::vector<std::pair<double, double>> iv;
  iv.reserve(chosen.size());
  for (std::size_t i : chosen) {
    const Sensor& s = inst.sensors[i];
    iv.emplace_back(s.x - *s.rho, s.x + *s.rho);
  }
  std::sort(iv.begin(), iv.end());
  double reach = 0.0;
  for (const auto& [lo, hi] : iv) {
    if (lo > reach + cover_tol) return false;
    reach = std::max(reach, hi);
    if (reach >= 1.0 - cover_tol) return true;
  }
  return reach >= 1.0 - cover_tol;
}

// Summed lowest index first so reruns and the subset oracle see the exact
// same floating-point value.
double mass_of(const ProblemInstance& inst,
               const std::vector<std::size_t>& chosen) {
  std::vector<std::size_t> ids = chosen;
  std::sort(ids.begin(), ids.end());
  double sum = 0.0;
  for (std::size_t i : ids) sum += 2.0 * *inst.sensors[i].rho;
  return sum;
}

Solution stay_put_zeroed(const ProblemInstance& inst) {
  Solution sol;
  sol.y.reserve(inst.size());
  for (const Sensor& s : inst.sensors) sol.y.push_back(s.x);
  sol.r.assign(inst.size(), 0.0);
  sol.lifetime = 0.0;
  sol.achievable = false;
  return sol;
}

}  // namespace

GreedySelection greedy_static_selection(const ProblemInstance& inst) {
  inst.validate();
  if (!inst.fixed_radii())
    throw std::invalid_argument("static solver needs radii on every sensor");
  if (!inst.move_cost.is_static())
    throw std::invalid_argument("static solver expects immobile sensors");
  GreedySelection sel;
  sel.individual_lifetimes = individual_lifetimes(inst);
  const std::vector<std::size_t> ranked =
      by_descending_lifetime(sel.individual_lifetimes);
  if (!covers_in_place(inst, ranked)) return sel;
  for (std::size_t i : ranked) {
    if (covers_in_place(inst, sel.chosen)) break;
    sel.chosen.push_back(i);
  }
  return sel;
}

GreedySelection greedy_dynamic_selection(const ProblemInstance& inst) {
  inst.validate();
  if (!inst.fixed_radii())
    throw std::invalid_argument("dynamic fixed solver needs radii on every sensor");
  if (inst.move_cost.is_static() || inst.move_cost.value() != 0.0)
    throw std::invalid_argument("dynamic solver expects free movement");
  GreedySelection sel;
  sel.individual_lifetimes = individual_lifetimes(inst);
  const std::vector<std::size_t> ranked =
      by_descending_lifetime(sel.individual_lifetimes);
  if (mass_of(inst, ranked) < 1.0) return sel;
  for (std::size_t i : ranked) {
    if (mass_of(inst, sel.chosen) >= 1.0) break;
    sel.chosen.push_back(i);
  }
  return sel;
}

Solution solve_static_fixed(const ProblemInstance& inst) {
  const GreedySelection sel = greedy_static_selection(inst);
  if (!covers_in_place(inst, sel.chosen)) return stay_put_zeroed(inst);
  Solution sol;
  sol.y.reserve(inst.size());
  for (const Sensor& s : inst.sensors) sol.y.push_back(s.x);
  sol.r.assign(inst.size(), 0.0);
  double lifetime = std::numeric_limits<double>::infinity();
  for (std::size_t i : sel.chosen) {
    sol.r[i] = *inst.sensors[i].rho;
    lifetime = std::min(lifetime, sel.individual_lifetimes[i]);
  }
  sol.lifetime = lifetime;
  sol.achievable = lifetime > 0.0;
  return sol;
}

Solution solve_dynamic_fixed(const ProblemInstance& inst) {
  const GreedySelection sel = greedy_dynamic_selection(inst);
  if (mass_of(inst, sel.chosen) < 1.0) return stay_put_zeroed(inst);
  Solution sol;
  sol.y.assign(inst.size(), 0.0);
  sol.r.assign(inst.size(), 0.0);
  std::vector<std::size_t> placed = sel.chosen;
  std::sort(placed.begin(), placed.end());
  double cum = 0.0;
  double lifetime = std::numeric_limits<double>::infinity();
  for (std::size_t i : placed) {
    const double rho = *inst.sensors[i].rho;
    sol.y[i] = cum + rho;
    sol.r[i] = rho;
    cum += 2.0 * rho;
    lifetime = std::min(lifetime, sel.individual_lifetimes[i]);
  }
  sol.lifetime = lifetime;
  sol.achievable = lifetime > 0.0;
  return sol;
}

Solution solve_dynamic_variable(const ProblemInstance& inst) {
  inst.validate();
  if (inst.fixed_radii())
    throw std::invalid_argument("variable-radius solver got fixed radii");
  if (inst.move_cost.is_static() || inst.move_cost.value() != 0.0)
    throw std::invalid_argument("dynamic solver expects free movement");
  double sum = 0.0;
  for (const Sensor& s : inst.sensors) sum += nth_root(s.battery, inst.alpha);
  if (!(sum > 0.0)) return stay_put_zeroed(inst);
  Solution sol;
  sol.y.resize(inst.size());
  sol.r.resize(inst.size());
  double cum = 0.0;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const double r = nth_root(inst.sensors[i].battery, inst.alpha) / (2.0 * sum);
    sol.y[i] = cum + r;
    sol.r[i] = r;
    cum += 2.0 * r;
  }
  sol.lifetime = pow_alpha(2.0 * sum, inst.alpha);
  sol.achievable = sol.lifetime > 0.0;
  return sol;
}

}  // namespace bcl
