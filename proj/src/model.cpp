#include "bcl/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace bcl {

bool ProblemInstance::fixed_radii() const {
  return !sensors.empty() &&
         std::all_of(sensors.begin(), sensors.end(),
                     [](const Sensor& s) { return s.rho.has_value(); });
}

void ProblemInstance::validate() const {
  if (!(alpha >= 1.0) || !std::isfinite(alpha))
    throw std::invalid_argument("alpha must be finite and >= 1");
  if (sensors.empty()) throw std::invalid_argument("instance has no sensors");
  std::size_t with_rho = 0;
  for (std::size_t i = 0; i < sensors.size(); ++i) {
    const Sensor& s = sensors[i];
    const std::string tag = "sensor " + std::to_string(i + 1);
    if (!std::isfinite(s.x) || s.x < 0.0 || s.x > 1.0)
      throw std::invalid_argument(tag + ": position must lie in [0,1]");
    if (!std::isfinite(s.battery) || s.battery < 0.0)
      throw std::invalid_argument(tag + ": battery must be >= 0");
    if (s.rho) {
      if (!std::isfinite(*s.rho) || *s.rho < 0.0)
        throw std::invalid_argument(tag + ": radius must be >= 0");
      ++with_rho;
    }
  }
  if (with_rho != 0 && with_rho != sensors.size())
    throw std::invalid_argument(
        "either all sensors carry a fixed radius or none do");
}

namespace {

// Movement energy spent by sensor i to reach y, or a negative value when the
// move is impossible (static sensor leaving its position).
double move_energy(const ProblemInstance& inst, std::size_t i, double y) {
  const double d = std::abs(y - inst.sensors[i].x);
  if (inst.move_cost.is_static()) return d <= cover_tol ? 0.0 : -1.0;
  return inst.move_cost.value() * d;
}

}  // namespace

double evaluate_lifetime(const ProblemInstance& inst,
                         const std::vector<double>& y,
                         const std::vector<double>& r) {
  const std::size_t n = inst.size();
  if (y.size() != n || r.size() != n)
    throw std::invalid_argument("deployment length does not match instance");
  double lifetime = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    if (r[i] < 0.0) throw std::invalid_argument("negative radius");
    if (r[i] == 0.0) continue;
    const double cost = move_energy(inst, i, y[i]);
    const double left = inst.sensors[i].battery - cost;
    if (cost < 0.0 || left <= 0.0) return 0.0;
    lifetime = std::min(lifetime, left / pow_alpha(r[i], inst.alpha));
  }
  return lifetime;
}

CoverageReport verify_solution(const ProblemInstance& inst, const Solution& sol,
                               double tol) {
  const std::size_t n = inst.size();
  if (sol.y.size() != n || sol.r.size() != n)
    throw std::invalid_argument("deployment length does not match instance");

  CoverageReport rep;
  rep.realized_lifetime = evaluate_lifetime(inst, sol.y, sol.r);

  for (std::size_t i = 0; i < n; ++i) {
    const double cost = move_energy(inst, i, sol.y[i]);
    if (cost < 0.0) {
      rep.battery_violation = std::numeric_limits<double>::infinity();
    } else {
      rep.battery_violation =
          std::max(rep.battery_violation, cost - inst.sensors[i].battery);
    }
  }

  // Sweep the active intervals left to right and record the widest stretch of
  // [0,1] no interval touches.
  std::vector<std::pair<double, double>> segs;
  for (std::size_t i = 0; i < n; ++i)
    if (sol.r[i] > 0.0)
      segs.emplace_back(sol.y[i] - sol.r[i], sol.y[i] + sol.r[i]);
  std::sort(segs.begin(), segs.end());
  double covered_to = 0.0;
  for (const auto& [lo, hi] : segs) {
    if (lo >= 1.0) break;
    if (lo > covered_to)
      rep.max_gap = std::max(rep.max_gap, std::min(lo, 1.0) - covered_to);
    covered_to = std::max(covered_to, hi);
    if (covered_to >= 1.0) break;
  }
  if (covered_to < 1.0) rep.max_gap = std::max(rep.max_gap, 1.0 - covered_to);

  rep.feasible = rep.max_gap <= tol && rep.battery_violation <= tol;
  return rep;
}

std::vector<std::size_t> order_of(const std::vector<double>& y) {
  std::vector<std::size_t> idx(y.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return y[a] < y[b]; });
  return idx;
}

std::vector<std::size_t> identity_order(std::size_t n) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return idx;
}

void require_permutation(const std::vector<std::size_t>& order, std::size_t n) {
  if (order.size() != n)
    throw std::invalid_argument("order length does not match instance");
  std::vector<char> seen(n, 0);
  for (std::size_t v : order) {
    if (v >= n || seen[v])
      throw std::invalid_argument("order is not a permutation of the sensors");
    seen[v] = 1;
  }
}

}  // namespace bcl
