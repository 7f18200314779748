#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "bcl/extreme.hpp"
#include "bcl/model.hpp"
#include "bcl/oracle.hpp"

using namespace bcl;

namespace {

ProblemInstance immobile(std::vector<double> x, std::vector<double> b,
                         std::vector<double> rho, double alpha) {
  ProblemInstance inst;
  inst.alpha = alpha;
  inst.move_cost = MoveCost::static_marker();
  for (std::size_t i = 0; i < x.size(); ++i)
    inst.sensors.push_back({x[i], b[i], rho[i]});
  return inst;
}

ProblemInstance free_fixed(std::vector<double> x, std::vector<double> b,
                           std::vector<double> rho, double alpha) {
  ProblemInstance inst;
  inst.alpha = alpha;
  inst.move_cost = MoveCost::finite(0.0);
  for (std::size_t i = 0; i < x.size(); ++i)
    inst.sensors.push_back({x[i], b[i], rho[i]});
  return inst;
}

ProblemInstance free_variable(std::vector<double> b, double alpha) {
  ProblemInstance inst;
  inst.alpha = alpha;
  inst.move_cost = MoveCost::finite(0.0);
  for (double bi : b) inst.sensors.push_back({0.0, bi, {}});
  return inst;
}

}  // namespace

TEST_CASE("immobile cover picks the longest-lived sensors") {
  const ProblemInstance pair =
      immobile({0.25, 0.75}, {1, 1}, {0.25, 0.25}, 1);
  const Solution two = solve_static_fixed(pair);
  CHECK(two.achievable);
  CHECK(two.lifetime == 4.0);
  CHECK(two.y == std::vector<double>{0.25, 0.75});
  CHECK(two.r == std::vector<double>{0.25, 0.25});

  const ProblemInstance trio =
      immobile({0.25, 0.5, 0.75}, {1, 1, 1}, {0.25, 0.5, 0.25}, 1);
  const GreedySelection sel = greedy_static_selection(trio);
  CHECK(sel.individual_lifetimes == std::vector<double>{4.0, 2.0, 4.0});
  CHECK(sel.chosen == std::vector<std::size_t>{0, 2});
  const Solution sol = solve_static_fixed(trio);
  CHECK(sol.achievable);
  CHECK(sol.lifetime == 4.0);
  CHECK(sol.r == std::vector<double>{0.25, 0.0, 0.25});

  const ProblemInstance gapped =
      immobile({0.25, 0.75}, {1, 1}, {0.2, 0.2}, 1);
  CHECK(greedy_static_selection(gapped).chosen.empty());
  const Solution none = solve_static_fixed(gapped);
  CHECK_FALSE(none.achievable);
  CHECK(none.lifetime == 0.0);
  CHECK(none.r == std::vector<double>{0.0, 0.0});
}

TEST_CASE("free movement packs the widest long-lived set") {
  const ProblemInstance trio =
      free_fixed({0.1, 0.9, 0.4}, {1, 1, 1}, {0.3, 0.2, 0.25}, 1);
  const GreedySelection sel = greedy_dynamic_selection(trio);
  CHECK(sel.individual_lifetimes[0] == doctest::Approx(10.0 / 3.0));
  CHECK(sel.individual_lifetimes[1] == 5.0);
  CHECK(sel.individual_lifetimes[2] == 4.0);
  // Picked by descending lifetime; 0.4 + 0.5 still falls short of the
  // barrier, so the third sensor joins too.
  CHECK(sel.chosen == std::vector<std::size_t>{1, 2, 0});

  const Solution sol = solve_dynamic_fixed(trio);
  CHECK(sol.achievable);
  CHECK(sol.lifetime == doctest::Approx(10.0 / 3.0));
  // Abutting layout in index order: radii 0.3, 0.2, 0.25.
  CHECK(sol.y[0] == doctest::Approx(0.3));
  CHECK(sol.y[1] == doctest::Approx(0.8));
  CHECK(sol.y[2] == doctest::Approx(1.25));

  // One sensor of width 2*0.5 already suffices; the greedy stops there and
  // keeps the longer-lived one.
  const ProblemInstance wide = free_fixed({0.2, 0.8}, {2, 1}, {0.5, 0.5}, 1);
  const Solution one = solve_dynamic_fixed(wide);
  CHECK(one.achievable);
  CHECK(one.lifetime == 4.0);
  CHECK(one.r == std::vector<double>{0.5, 0.0});
  CHECK(one.y[0] == 0.5);

  const ProblemInstance short_mass =
      free_fixed({0.5, 0.5}, {1, 1}, {0.25, 0.2}, 1);
  CHECK(greedy_dynamic_selection(short_mass).chosen.empty());
  const Solution none = solve_dynamic_fixed(short_mass);
  CHECK_FALSE(none.achievable);
  CHECK(none.lifetime == 0.0);
}

TEST_CASE("free variable radii follow the root-share closed form") {
  const Solution pair = solve_dynamic_variable(free_variable({1, 1}, 1));
  CHECK(pair.achievable);
  CHECK(pair.lifetime == 4.0);
  CHECK(pair.r == std::vector<double>{0.25, 0.25});
  CHECK(pair.y == std::vector<double>{0.25, 0.75});

  const Solution cubic = solve_dynamic_variable(free_variable({1, 8}, 3));
  CHECK(cubic.lifetime == doctest::Approx(216.0).epsilon(1e-12));
  CHECK(cubic.r[0] == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK(cubic.r[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  const Solution single = solve_dynamic_variable(free_variable({1}, 2));
  CHECK(single.lifetime == 4.0);
  CHECK(single.r == std::vector<double>{0.5});
  CHECK(single.y == std::vector<double>{0.5});
}

TEST_CASE("each solver insists on its own regime") {
  const ProblemInstance mobile =
      free_fixed({0.5}, {1}, {0.5}, 1);
  CHECK_THROWS_AS(solve_static_fixed(mobile), std::invalid_argument);

  ProblemInstance costly = mobile;
  costly.move_cost = MoveCost::finite(1.0);
  CHECK_THROWS_AS(solve_dynamic_fixed(costly), std::invalid_argument);
  CHECK_THROWS_AS(greedy_dynamic_selection(costly), std::invalid_argument);

  ProblemInstance var = free_variable({1, 1}, 1);
  CHECK_THROWS_AS(solve_static_fixed(var), std::invalid_argument);
  CHECK_THROWS_AS(solve_dynamic_fixed(var), std::invalid_argument);

  CHECK_THROWS_AS(solve_dynamic_variable(mobile), std::invalid_argument);
  ProblemInstance frozen_var = var;
  frozen_var.move_cost = MoveCost::static_marker();
  CHECK_THROWS_AS(solve_dynamic_variable(frozen_var), std::invalid_argument);
}

TEST_CASE("perturbing the closed-form radii can only lose lifetime") {
  std::mt19937_64 rng(12001);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  int strict = 0;
  int total = 0;
  for (int rep = 0; rep < 10; ++rep) {
    const std::size_t n = 2 + rng() % 4;
    const double alpha = 1.0 + (rng() % 3);
    std::vector<double> b;
    for (std::size_t i = 0; i < n; ++i) b.push_back(0.2 + 1.6 * u01(rng));
    const ProblemInstance inst = free_variable(b, alpha);
    const Solution best = solve_dynamic_variable(inst);

    for (int k = 0; k < 100; ++k) {
      // Jiggle the shares, then renormalize onto the same total width so the
      // perturbed assignment still exactly tiles the barrier.
      std::vector<double> r(n);
      double sum = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        r[i] = best.r[i] * (1.0 + 0.6 * (u01(rng) - 0.5));
        sum += r[i];
      }
      double worst = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < n; ++i) {
        r[i] *= 0.5 / sum;
        worst = std::min(worst, b[i] / pow_alpha(r[i], alpha));
      }
      ++total;
      CHECK(worst <= best.lifetime + 1e-9);
      if (worst < best.lifetime - 1e-9) ++strict;
    }
  }
  CHECK(total == 1000);
  // Renormalized perturbations leave some radius above its share, which the
  // bottleneck sensor pays for.
  CHECK(strict >= total - 20);
}

TEST_CASE("greedy picks agree with full subset enumeration") {
  std::mt19937_64 rng(12002);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int it = 0; it < 40; ++it) {
    const std::size_t n = 3 + rng() % 4;
    const double alpha = 1.0 + (rng() % 2);
    std::vector<double> x, b, rho;
    for (std::size_t i = 0; i < n; ++i) {
      x.push_back(u01(rng));
      b.push_back(0.3 + 1.2 * u01(rng));
      rho.push_back(0.05 + 0.35 * u01(rng));
    }
    const ProblemInstance dyn = free_fixed(x, b, rho, alpha);
    CHECK(solve_dynamic_fixed(dyn).lifetime ==
          best_subset_lifetime(dyn, dynamic_mass_predicate));

    const ProblemInstance still = immobile(x, b, rho, alpha);
    CHECK(solve_static_fixed(still).lifetime ==
          best_subset_lifetime(still, static_cover_predicate));
  }
}

TEST_CASE("extreme solutions verify at their reported lifetime") {
  std::mt19937_64 rng(12003);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  int achieved = 0;
  for (int it = 0; it < 30; ++it) {
    const std::size_t n = 2 + rng() % 5;
    const double alpha = 1.0 + (rng() % 2);
    std::vector<double> x, b, rho;
    for (std::size_t i = 0; i < n; ++i) {
      x.push_back(u01(rng));
      b.push_back(0.3 + 1.2 * u01(rng));
      rho.push_back(0.05 + 0.35 * u01(rng));
    }
    const Solution still = solve_static_fixed(immobile(x, b, rho, alpha));
    if (still.achievable) {
      ++achieved;
      const CoverageReport rep =
          verify_solution(immobile(x, b, rho, alpha), still);
      CHECK(rep.feasible);
      CHECK(rep.realized_lifetime == doctest::Approx(still.lifetime));
    }
    const Solution moved = solve_dynamic_fixed(free_fixed(x, b, rho, alpha));
    if (moved.achievable) {
      ++achieved;
      const CoverageReport rep =
          verify_solution(free_fixed(x, b, rho, alpha), moved);
      CHECK(rep.feasible);
      CHECK(rep.realized_lifetime == doctest::Approx(moved.lifetime));
    }
    const ProblemInstance var = free_variable(b, alpha);
    const Solution shared = solve_dynamic_variable(var);
    const CoverageReport rep = verify_solution(var, shared);
    CHECK(rep.feasible);
    CHECK(rep.realized_lifetime == doctest::Approx(shared.lifetime));
  }
  CHECK(achieved >= 20);
}
