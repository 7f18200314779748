#pragma once
// Closed-form solvers for the movement extremes: immobile sensors (static
// marker) and free movement (a = 0).

#include <cstddef>
#include <vector>

#include "bcl/model.hpp"

namespace bcl {

// Trace of the greedy subset selection used by the fixed-radii extremes.
struct GreedySelection {
  // Chosen sensors in pick order (nonincreasing individual lifetime,
  // ties by index).
  std::vector<std::size_t> chosen;
  // t_i = b_i/rho_i^alpha for every sensor.
  std::vector<double> individual_lifetimes;
};

// Greedy for immobile sensors: add sensors by descending t_i until the
// full-radius intervals [x_i - rho_i, x_i + rho_i] of the chosen set cover
// [0,1]; chosen empty when even all sensors together do not cover.
GreedySelection greedy_static_selection(const ProblemInstance& inst);

// Greedy for free movement: add sensors by descending t_i until the chosen
// radii satisfy sum 2 rho_i >= 1; chosen empty when the total is short.
GreedySelection greedy_dynamic_selection(const ProblemInstance& inst);

// Immobile fixed-radii solver: y = x, chosen sensors at full radius, rest
// powered down; lifetime = min t_i over the chosen set, 0 if uncoverable.
Solution solve_static_fixed(const ProblemInstance& inst);

// Free-movement fixed-radii solver: greedy selection deployed abutting left
// to right (in ascending index order), unchosen sensors at 0 with r = 0.
// The last interval may overshoot 1.
Solution solve_dynamic_fixed(const ProblemInstance& inst);

// Free-movement variable-radii closed form: r_i = b_i^(1/alpha) /
// (2 sum_j b_j^(1/alpha)), abutting deployment y_i = sum_{j<i} 2 r_j + r_i,
// lifetime (2 sum_j b_j^(1/alpha))^alpha.
Solution solve_dynamic_variable(const ProblemInstance& inst);

}  // namespace bcl
