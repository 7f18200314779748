#include "bcl/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bcl {

namespace {

void check_grid(const GridConfig& grid) {
  if (!(grid.step > 0.0) || grid.step > 0.25)
    throw std::invalid_argument("grid step must lie in (0, 0.25]");
  if (!(grid.t_resolution > 0.0))
    throw std::invalid_argument("t resolution must be positive");
}

void check_t(double t) {
  if (!(t > 0.0) || !std::isfinite(t))
    throw std::invalid_argument("lifetime t must be positive and finite");
}

double raw_radius(const Sensor& s, double y, double a, double alpha, double t) {
  const double energy = s.battery - a * std::abs(y - s.x);
  if (energy <= 0.0) return 0.0;
  return std::pow(energy / t, 1.0 / alpha);
}

}  // namespace

bool grid_covers(const ProblemInstance& inst, double t, const GridConfig& grid) {
  inst.validate();
  check_grid(grid);
  check_t(t);
  const std::size_t n = inst.size();
  if (n > 12)
    throw std::invalid_argument("grid oracle is capped at 12 sensors");
  const double a = inst.move_cost.value();
  const double alpha = inst.alpha;
  const bool fixed = inst.fixed_radii();
  const double h = grid.step;

  std::vector<std::vector<std::pair<double, double>>> cand(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Sensor& s = inst.sensors[i];
    const double span = s.battery / a;
    const double lo = std::max(0.0, s.x - span);
    const double hi = std::min(1.0, s.x + span);
    const auto kmin = static_cast<long long>(std::ceil(lo / h - 1e-12));
    const auto kmax = static_cast<long long>(std::floor(hi / h + 1e-12));
    for (long long k = std::max(kmin, 0LL); k <= kmax; ++k) {
      const double y = static_cast<double>(k) * h;
      if (fixed) {
        const double drain = t * std::pow(*s.rho, alpha);
        if (s.battery - a * std::abs(y - s.x) >= drain)
          cand[i].emplace_back(y, *s.rho);
      } else {
        cand[i].emplace_back(y, raw_radius(s, y, a, alpha, t));
      }
    }
  }

  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<double> f(full + 1, -1.0);
  f[0] = 0.0;
  for (std::size_t mask = 1; mask <= full; ++mask) {
    double best = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask & (std::size_t{1} << i))) continue;
      const double base = f[mask & ~(std::size_t{1} << i)];
      if (base < 0.0) continue;
      best = std::max(best, base);
      for (const auto& [y, r] : cand[i])
        if (y - r <= base + cover_tol) best = std::max(best, y + r);
    }
    f[mask] = best;
  }
  return f[full] >= 1.0 - cover_tol;
}

double grid_best_lifetime(const ProblemInstance& inst, const GridConfig& grid) {
  inst.validate();
  check_grid(grid);
  double ub = 0.0;
  if (inst.fixed_radii()) {
    for (const Sensor& s : inst.sensors)
      if (*s.rho > 0.0)
        ub = std::max(ub, s.battery / std::pow(*s.rho, inst.alpha));
  } else {
    double sum = 0.0;
    for (const Sensor& s : inst.sensors)
      sum += std::pow(s.battery, 1.0 / inst.alpha);
    ub = std::pow(2.0 * sum, inst.alpha);
  }
  if (!(ub > 0.0)) return 0.0;
  if (grid_covers(inst, ub, grid)) return ub;
  double lo = 0.0;
  double hi = ub;
  while (hi - lo > grid.t_resolution) {
    const double mid = 0.5 * (lo + hi);
    if (grid_covers(inst, mid, grid))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

namespace {

struct PrefixState {
  double y;
  double z;
};

}  // namespace

std::vector<double> ordered_prefix_trace(const ProblemInstance& inst,
                                         const std::vector<std::size_t>& order,
                                         double t, const GridConfig& grid) {
  inst.validate();
  require_permutation(order, inst.size());
  check_grid(grid);
  check_t(t);
  const std::size_t n = inst.size();
  if (n > 9)
    throw std::invalid_argument("prefix oracle is capped at 9 sensors");
  const double a = inst.move_cost.value();
  const double alpha = inst.alpha;
  const bool fixed = inst.fixed_radii();
  const double slack = cover_tol;

  // A deployment must respect the whole order, so the position of the
  // sensor at order slot i can never exceed what any later sensor is able
  // to reach on a full battery.  Without this cap the trace would compare
  // prefixes that no full deployment can extend.
  std::vector<double> lcap(n), ucap(n);
  {
    double run = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const Sensor& s = inst.sensors[order[i]];
      run = std::max(run, s.x - s.battery / a);
      lcap[i] = run;
    }
    run = 1.0;
    for (std::size_t i = n; i-- > 0;) {
      const Sensor& s = inst.sensors[order[i]];
      run = std::min(run, s.x + s.battery / a);
      ucap[i] = run;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (ucap[i] < lcap[i] - slack) return {};

  std::vector<PrefixState> states{{0.0, 0.0}};
  std::vector<double> trace;
  for (std::size_t i = 0; i < n; ++i) {
    const Sensor& s = inst.sensors[order[i]];
    const double span = s.battery / a;
    const double dom_lo = std::max(0.0, s.x - span);
    double dom_hi = ucap[i];
    if (dom_hi < dom_lo) dom_hi = dom_lo;
    auto phi = [&](double p) { return p - raw_radius(s, p, a, alpha, t); };
    auto psi = [&](double p) { return p + raw_radius(s, p, a, alpha, t); };
    double psi_peak = 0.0, phi_valley = 0.0;
    if (!fixed) {
      psi_peak = static_cast<double>(golden_max(
          [&](long double p) {
            return static_cast<long double>(psi(static_cast<double>(p)));
          },
          dom_lo, dom_hi));
      phi_valley = static_cast<double>(golden_max(
          [&](long double p) {
            return static_cast<long double>(-phi(static_cast<double>(p)));
          },
          dom_lo, dom_hi));
    }
    auto cross = [&](double lo, double hi, bool increasing, double target) {
      for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        const bool go_right = increasing ? phi(mid) < target : phi(mid) > target;
        (go_right ? lo : hi) = mid;
      }
      return 0.5 * (lo + hi);
    };

    std::vector<PrefixState> next;
    for (const PrefixState& st : states) {
      if (st.y > dom_hi + 1e-15) continue;  // order forces this sensor too far
      const double start = std::min(std::max(st.y, dom_lo), dom_hi);
      next.push_back({start, st.z});  // powered down, parked as far left as allowed
      if (fixed) {
        const double w = (s.battery - t * std::pow(*s.rho, alpha)) / a;
        if (w < 0.0) continue;
        const double act_lo = std::max(start, s.x - w);
        const double act_hi =
            std::min({st.z + *s.rho, s.x + w, dom_hi});
        if (act_lo > act_hi + 1e-15) continue;
        next.push_back({act_hi, std::max(st.z, act_hi + *s.rho)});
        if (act_lo < act_hi)
          next.push_back({act_lo, std::max(st.z, act_lo + *s.rho)});
      } else {
        const double mn = std::min(std::max(phi_valley, start), dom_hi);
        const double target = st.z + slack;
        if (phi(mn) > target) continue;
        const double fa =
            phi(start) <= target ? start : cross(start, mn, false, target);
        const double fb =
            phi(dom_hi) <= target ? dom_hi : cross(mn, dom_hi, true, target);
        auto push = [&](double y) {
          y = std::min(std::max(y, fa), fb);
          next.push_back({y, std::max(st.z, psi(y))});
        };
        push(fa);
        push(fb);
        push(std::min(std::max(psi_peak, fa), fb));
        const double width = fb - fa;
        const int extra = static_cast<int>(
            std::min(6.0, std::floor(width / grid.step)));
        for (int j = 1; j <= extra; ++j)
          push(fa + width * static_cast<double>(j) / (extra + 1));
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end(), [](const PrefixState& p, const PrefixState& q) {
      if (p.y != q.y) return p.y < q.y;
      return p.z > q.z;
    });
    states.clear();
    double maxz = -std::numeric_limits<double>::infinity();
    for (const PrefixState& st : next) {
      if (st.z > maxz) {
        states.push_back(st);
        maxz = st.z;
      }
    }
    trace.push_back(maxz);
  }
  return trace;
}

bool static_cover_predicate(const ProblemInstance& inst,
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
  }
  return reach >= 1.0 - cover_tol;
}

bool dynamic_mass_predicate(const ProblemInstance& inst,
                            const std::vector<std::size_t>& chosen) {
  std::vector<std::size_t> ids = chosen;
  std::sort(ids.begin(), ids.end());
  double sum = 0.0;
  for (std::size_t i : ids) sum += 2.0 * *inst.sensors[i].rho;
  return sum >= 1.0;
}

double best_subset_lifetime(const ProblemInstance& inst,
                            const SubsetPredicate& predicate) {
  inst.validate();
  if (!inst.fixed_radii())
    throw std::invalid_argument("subset oracle needs fixed radii");
  const std::size_t n = inst.size();
  if (n > 16)
    throw std::invalid_argument("subset oracle is capped at 16 sensors");
  double best = 0.0;
  std::vector<std::size_t> chosen;
  const std::size_t full = (std::size_t{1} << n) - 1;
  for (std::size_t mask = 1; mask <= full; ++mask) {
    chosen.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) chosen.push_back(i);
    if (!predicate(inst, chosen)) continue;
    double val = std::numeric_limits<double>::infinity();
    for (std::size_t i : chosen)
      val = std::min(val,
                     inst.sensors[i].battery / std::pow(*inst.sensors[i].rho,
                                                        inst.alpha));
    best = std::max(best, val);
  }
  return best;
}

long double golden_max(const std::function<long double(long double)>& f,
                       long double lo, long double hi, int iters) {
  const long double inv_gold = 0.6180339887498948482L;
  long double a = lo, b = hi;
  long double c = b - inv_gold * (b - a);
  long double d = a + inv_gold * (b - a);
  long double fc = f(c), fd = f(d);
  for (int k = 0; k < iters && b > a; ++k) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_gold * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_gold * (b - a);
      fd = f(d);
    }
  }
  return 0.5L * (a + b);
}

}  // namespace bcl
