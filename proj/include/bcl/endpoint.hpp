#pragma once
// Solvers for instances whose sensors all start on the barrier endpoints
// (every x_i in {0,1}).  For such instances an optimal left-to-right order
// can be computed directly: sensors from 0 ascending by reach (or battery),
// then sensors from 1 descending, so no order enumeration is needed.

#include <cstddef>
#include <vector>

#include "bcl/model.hpp"
#include "bcl/search.hpp"

namespace bcl {

struct EndpointSplit {
  std::vector<std::size_t> left_ids;   // sensors with x = 0
  std::vector<std::size_t> right_ids;  // sensors with x = 1
  std::size_t split_index = 0;         // count of left sensors
};

// Partitions the sensors by endpoint.  Throws when some x_i is not 0 or 1.
EndpointSplit endpoint_split(const ProblemInstance& inst);

// Maximum reach of a fixed-radii sensor at lifetime t:
// (b - t rho^alpha)/a + rho when t rho^alpha <= b, else 0.
double reach_value(const Sensor& s, double t, double a, double alpha);

// Left sensors ascending by reach_value, then right sensors descending;
// ties by index.  Zero-reach sensors land first on the left side and last on
// the right side, where they stay at their origin powered down.
std::vector<std::size_t> bidirectional_reach_order(const ProblemInstance& inst,
                                                   double t);

// Variable-radii analogue ordered by battery; independent of t.
std::vector<std::size_t> bidirectional_battery_order(
    const ProblemInstance& inst);

// Endpoint solver.  Variable radii: one battery order, then the parametric
// search.  Fixed radii: binary search on t where every probe recomputes the
// reach order at that t before deciding.
Solution solve_endpoint(const ProblemInstance& inst,
                        const SearchConfig& cfg = {});

}  // namespace bcl
