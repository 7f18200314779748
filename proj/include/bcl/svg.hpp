#pragma once
// Deployment diagrams: barrier axis plus one lane per sensor with origin,
// movement arrow, and covered interval.  Output is deterministic so renders
// can be compared byte for byte.

#include <string>

#include "bcl/model.hpp"

namespace bcl {

std::string render_svg(const ProblemInstance& inst, const Solution& sol);

}  // namespace bcl
