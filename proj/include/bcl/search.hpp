#pragma once
// Parametric search over the lifetime t: binary search for a fixed order,
// plus exhaustive order enumeration for exact small-instance optimization.

#include <cstddef>
#include <vector>

#include "bcl/model.hpp"

namespace bcl {

struct SearchConfig {
  double epsilon = 1e-6;        // absolute accuracy on t
  std::size_t max_order_n = 8;  // cap on exhaustive order enumeration
};

// Upper bound on any achievable lifetime: max_i b_i/rho_i^alpha for fixed
// radii (0 when no positive radius exists), (2 * sum_j b_j^(1/alpha))^alpha
// for variable radii.
double lifetime_upper_bound(const ProblemInstance& inst);

// Binary search on [0, lifetime_upper_bound] with the constrained decision
// procedure.  Returns the witness of the largest certified-YES lifetime;
// achievable=false with lifetime 0 when even t = epsilon * 2^-20 is NO.
Solution maximize_constrained(const ProblemInstance& inst,
                              const std::vector<std::size_t>& order,
                              const SearchConfig& cfg = {});

// Best of maximize_constrained over all n! orders; ties resolved toward the
// lexicographically smallest order so output is run-to-run identical.
// Throws when n exceeds cfg.max_order_n.
Solution maximize_exhaustive(const ProblemInstance& inst,
                             const SearchConfig& cfg = {});

}  // namespace bcl
