#pragma once
// Constrained decision procedures: given a left-to-right sensor order and a
// candidate lifetime t, decide whether [0,1] can be covered for t time with
// final positions respecting the order, and produce a witness deployment.

#include <cstddef>
#include <optional>
#include <vector>

#include "bcl/model.hpp"

namespace bcl {

// Per-order-position bounds.  l and u are the leftmost/rightmost positions a
// sensor may occupy given the order (prefix-max of x - b/a and suffix-min of
// x + b/a, clamped to the barrier); both are nondecreasing.  For fixed-radii
// instances s and e additionally bound the positions from which the sensor
// can sustain its radius for t time.
struct ReachProfile {
  std::vector<double> l;
  std::vector<double> u;
  std::optional<std::vector<double>> s;
  std::optional<std::vector<double>> e;
  // First order position with u < l; set means no deployment fits the order.
  std::optional<std::size_t> infeasible_at;
};

struct DecisionOutcome {
  bool achievable = false;
  std::optional<Solution> witness;  // present exactly on YES
  // Value of the covered prefix z after each order position.
  std::vector<double> covered_prefix_trace;
};

// l/u bounds only.
ReachProfile compute_bounds(const ProblemInstance& inst,
                            const std::vector<std::size_t>& order);

// l/u plus the fixed-radii s/e bounds at lifetime t.
ReachProfile compute_bounds_fixed(const ProblemInstance& inst,
                                  const std::vector<std::size_t>& order,
                                  double t);

// Decision for fixed radii: sweep the order, placing each sensor at the
// rightmost position that keeps its interval attached to the covered prefix,
// powering down sensors that cannot extend it.
DecisionOutcome decide_fixed(const ProblemInstance& inst,
                             const std::vector<std::size_t>& order, double t);

// Decision for variable radii: same sweep with the radius induced by the
// chosen position, using the attaching-position root and the travel optimum.
DecisionOutcome decide_variable(const ProblemInstance& inst,
                                const std::vector<std::size_t>& order,
                                double t);

}  // namespace bcl
