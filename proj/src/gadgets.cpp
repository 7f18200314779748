#include "bcl/gadgets.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "bcl/numeric.hpp"

namespace bcl {

std::vector<Sensor> gen_block(const Block& blk) {
  if (blk.count < 1) throw std::invalid_argument("block needs at least one sensor");
  if (!(blk.radius > 0.0)) throw std::invalid_argument("block radius must be positive");
  if (!(blk.battery > 0.0)) throw std::invalid_argument("block battery must be positive");
  std::vector<Sensor> out;
  out.reserve(blk.count);
  for (std::size_t i = 1; i <= blk.count; ++i) {
    Sensor s;
    s.x = blk.z + (2.0 * static_cast<double>(i) - 1.0) * blk.radius;
    s.battery = blk.battery;
    s.rho = blk.radius;
    out.push_back(s);
  }
  return out;
}

namespace {

void check_values(const std::vector<std::int64_t>& values) {
  if (values.empty()) throw std::invalid_argument("value list must be nonempty");
  for (std::int64_t v : values)
    if (v <= 0) throw std::invalid_argument("values must be positive integers");
}

void check_cost_alpha(double a, double alpha) {
  if (!(a > 0.0) || !std::isfinite(a))
    throw std::invalid_argument("move cost a must be positive and finite");
  if (!(alpha >= 1.0) || !std::isfinite(alpha))
    throw std::invalid_argument("alpha must be at least 1");
}

PartitionGadget gadget_left_half(const std::vector<std::int64_t>& values,
                                 double p, double a, double alpha) {
  const std::size_t n = values.size();
  const double total =
      static_cast<double>(std::accumulate(values.begin(), values.end(),
                                          std::int64_t{0}));
  PartitionGadget g;
  g.values = values;
  g.total = std::accumulate(values.begin(), values.end(), std::int64_t{0});
  g.p = p;
  g.instance.alpha = alpha;
  g.instance.move_cost = MoveCost::finite(a);

  if (p == 0.5) {
    g.quantum = 1.0 / (2.0 * (total + 1.0));
    for (std::size_t i = 0; i < n; ++i) {
      Sensor s;
      s.x = 0.5;
      s.rho = static_cast<double>(values[i]) * g.quantum;
      s.battery = a * pow_alpha(*s.rho, alpha) + a / 2.0;
      g.instance.sensors.push_back(s);
    }
    Sensor tail;
    tail.x = 0.5;
    tail.rho = g.quantum;
    tail.battery = a * pow_alpha(*tail.rho, alpha);
    g.instance.sensors.push_back(tail);
    return g;
  }

  // p < 1/2 here: two stationary flank sensors absorb [0, p-d/2] and
  // [p+d/2, 1], leaving a window of width d centered on p for the numbers.
  const double d = std::min(p, 1.0 - 2.0 * p);
  g.quantum = d / (2.0 * (total + 1.0));
  for (std::size_t i = 0; i < n; ++i) {
    Sensor s;
    s.x = p;
    s.rho = static_cast<double>(values[i]) * g.quantum;
    s.battery = a * pow_alpha(*s.rho, alpha) + a;
    g.instance.sensors.push_back(s);
  }
  Sensor tail;
  tail.x = p;
  tail.rho = g.quantum;
  tail.battery = a * pow_alpha(*tail.rho, alpha);
  g.instance.sensors.push_back(tail);

  Sensor left_flank;
  left_flank.rho = (p - d / 2.0) / 2.0;
  left_flank.x = *left_flank.rho;
  left_flank.battery = a * pow_alpha(*left_flank.rho, alpha) + a;
  g.instance.sensors.push_back(left_flank);

  Sensor right_flank;
  right_flank.rho = (1.0 - p - d / 2.0) / 2.0;
  right_flank.x = 1.0 - *right_flank.rho;
  right_flank.battery = a * pow_alpha(*right_flank.rho, alpha) + a;
  if (!(*right_flank.rho >= 0.25 - 1e-12))
    throw std::logic_error("right flank radius fell below 1/4");
  g.instance.sensors.push_back(right_flank);
  return g;
}

}  // namespace

PartitionGadget partition_gadget(const std::vector<std::int64_t>& values,
                                 double p, double a, double alpha) {
  check_values(values);
  check_cost_alpha(a, alpha);
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("anchor p must lie strictly inside (0,1)");
  if (p <= 0.5) return gadget_left_half(values, p, a, alpha);
  PartitionGadget g = gadget_left_half(values, 1.0 - p, a, alpha);
  g.p = p;
  for (Sensor& s : g.instance.sensors) s.x = 1.0 - s.x;
  return g;
}

ProblemInstance gen_partition_bcfr(const std::vector<std::int64_t>& values,
                                   double p, double a, double alpha) {
  return partition_gadget(values, p, a, alpha).instance;
}

ThreePartitionGadget gen_3partition_bcvr(const std::vector<std::int64_t>& values,
                                         std::size_t m, std::int64_t q,
                                         double a, double alpha) {
  check_values(values);
  check_cost_alpha(a, alpha);
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  if (values.size() != 3 * m)
    throw std::invalid_argument("need exactly 3m values");
  if (q <= 0) throw std::invalid_argument("Q must be positive");
  const std::int64_t sum =
      std::accumulate(values.begin(), values.end(), std::int64_t{0});
  if (sum != static_cast<std::int64_t>(m) * q)
    throw std::invalid_argument("values must sum to m*Q");
  for (std::int64_t v : values)
    if (4 * v < q || 2 * v > q)
      throw std::invalid_argument("each value must lie between Q/4 and Q/2");

  ThreePartitionGadget g;
  g.values = values;
  g.m = m;
  g.q = q;
  const double qd = static_cast<double>(q);
  const double segments = (2.0 * static_cast<double>(m) - 1.0) * qd;
  g.delta = 1.0 / segments;
  const double scale = pow_alpha(2.0 * segments, alpha);
  g.target = 2.0 * a * qd * scale;
  g.block_radius = (g.delta / 4.0) / scale;

  g.instance.alpha = alpha;
  g.instance.move_cost = MoveCost::finite(a);
  for (std::int64_t v : values) {
    Sensor s;
    s.x = 0.0;
    s.battery =
        g.target * pow_alpha(static_cast<double>(v) * g.delta / 2.0, alpha) + a;
    g.instance.sensors.push_back(s);
  }

  // ceil(Q*delta / (2 rho)) = 2*Q*scale, an exact integer whenever alpha is;
  // snap to it before taking the ceiling so float noise cannot add a sensor.
  const long double ratio = 2.0L * static_cast<long double>(qd) *
                            static_cast<long double>(scale);
  long double count_ld = std::ceil(ratio);
  if (std::abs(ratio - std::floor(ratio + 0.5L)) < 1e-6L)
    count_ld = std::floor(ratio + 0.5L);
  for (std::size_t j = 1; j < m; ++j) {
    Block blk;
    blk.z = (2.0 * static_cast<double>(j) - 1.0) * qd * g.delta;
    blk.count = static_cast<std::size_t>(count_ld);
    blk.battery = g.target * pow_alpha(g.block_radius, alpha);
    blk.radius = g.block_radius;
    g.blocks.push_back(blk);
    for (Sensor s : gen_block(blk)) {
      s.rho.reset();  // variable-radii instance: radii live in the solution
      g.instance.sensors.push_back(s);
    }
  }
  return g;
}

ProblemInstance random_instance(std::size_t n, ProblemKind kind,
                                std::uint64_t seed,
                                const RandomParams& params) {
  if (n < 1) throw std::invalid_argument("need at least one sensor");
  if (!(params.battery_min > 0.0) || params.battery_max < params.battery_min)
    throw std::invalid_argument("bad battery range");
  if (kind == ProblemKind::fixed &&
      (!(params.rho_min >= 0.0) || params.rho_max < params.rho_min))
    throw std::invalid_argument("bad radius range");
  check_cost_alpha(params.move_cost, params.alpha);

  std::mt19937_64 rng(seed);
  auto u01 = [&]() { return (rng() >> 11) * 0x1.0p-53; };
  auto uniform = [&](double lo, double hi) { return lo + u01() * (hi - lo); };

  ProblemInstance inst;
  inst.alpha = params.alpha;
  inst.move_cost = MoveCost::finite(params.move_cost);
  inst.sensors.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Sensor s;
    s.x = params.endpoints_only ? (u01() < 0.5 ? 0.0 : 1.0) : u01();
    s.battery = uniform(params.battery_min, params.battery_max);
    if (kind == ProblemKind::fixed)
      s.rho = uniform(params.rho_min, params.rho_max);
    inst.sensors.push_back(s);
  }
  return inst;
}

}  // namespace bcl
