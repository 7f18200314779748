#pragma once
// Shared numeric helpers.

#include <cmath>

namespace bcl {

// Slack used by every coverage test in the library: a point is considered
// covered when it is within cover_tol of a covered interval.
inline constexpr double cover_tol = 1e-9;

// x^alpha.  The small integer exponents that dominate in practice are spelled
// out so that e.g. pow_alpha(6.0, 3.0) == 216.0 exactly; std::pow goes through
// exp/log and loses the last ulp.
inline double pow_alpha(double x, double alpha) {
  if (alpha == 1.0) return x;
  if (alpha == 2.0) return x * x;
  if (alpha == 3.0) return x * x * x;
  return std::pow(x, alpha);
}

// x^(1/alpha) for x >= 0, inverse of pow_alpha.
inline double nth_root(double x, double alpha) {
  if (alpha == 1.0) return x;
  if (alpha == 2.0) return std::sqrt(x);
  if (alpha == 3.0) return std::cbrt(x);
  return std::pow(x, 1.0 / alpha);
}

}  // namespace bcl
