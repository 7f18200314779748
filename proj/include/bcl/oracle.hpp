#pragma once
// Brute-force reference machinery for the test suite.  Everything here works
// from the raw energy model (std::pow on the definition), deliberately not
// reusing the library's closed forms, so agreement between the two is a real
// check rather than the same formula evaluated twice.  Exponential by design;
// not part of the production API.

#include <cstddef>
#include <functional>
#include <vector>

#include "bcl/model.hpp"

namespace bcl {

struct GridConfig {
  double step = 1.0 / 256;     // position grid spacing h
  double t_resolution = 1e-9;  // bisection accuracy on t
};

// True when some placement of the sensors on the grid {0, h, ..., 1}
// (intersected with each sensor's reachable range) covers [0,1] at shared
// lifetime t.  Evaluated by a subset dynamic program over covered prefixes.
bool grid_covers(const ProblemInstance& inst, double t, const GridConfig& grid);

// Largest t (to within t_resolution) for which grid_covers holds.  A lower
// bound on the true optimum, converging as the step shrinks.
double grid_best_lifetime(const ProblemInstance& inst, const GridConfig& grid);

// Maximum coverable prefix after each order position, for deployments whose
// positions are nondecreasing along the order.  Grid candidates are refined
// per state with bisection (rightmost position still attached to the prefix)
// and golden-section (position maximizing the covered right end), so the
// result is accurate to roughly 1e-9 rather than the grid step.
std::vector<double> ordered_prefix_trace(const ProblemInstance& inst,
                                         const std::vector<std::size_t>& order,
                                         double t, const GridConfig& grid);

using SubsetPredicate = std::function<bool(const ProblemInstance&,
                                           const std::vector<std::size_t>&)>;

// Chosen full-radius intervals centered at x cover [0,1].
bool static_cover_predicate(const ProblemInstance& inst,
                            const std::vector<std::size_t>& chosen);

// Chosen radii satisfy sum 2 rho_i >= 1 (summed in index order).
bool dynamic_mass_predicate(const ProblemInstance& inst,
                            const std::vector<std::size_t>& chosen);

// Max over all subsets S passing the predicate of min_{i in S} b_i/rho_i^alpha;
// 0 when no subset qualifies.  Throws when n > 16.
double best_subset_lifetime(const ProblemInstance& inst,
                            const SubsetPredicate& predicate);

// Golden-section argmax of f on [lo, hi], in extended precision so the
// bracket can settle well below the binary64 plateau around the maximum.
long double golden_max(const std::function<long double(long double)>& f,
                       long double lo, long double hi, int iters = 120);

}  // namespace bcl
