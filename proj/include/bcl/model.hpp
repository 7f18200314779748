#pragma once
// Problem instances, deployments and feasibility checking for barrier
// coverage on the unit interval [0,1].
//
// A sensor i sits at x_i with battery b_i.  Moving it distance d costs a*d
// energy; sensing with radius r drains r^alpha per unit time.  A deployment
// assigns each sensor a position y_i and a radius r_i; it covers the barrier
// when the union of [y_i - r_i, y_i + r_i] over active sensors (r_i > 0)
// contains [0,1].  Its lifetime is the smallest (b_i - a|y_i - x_i|)/r_i^alpha
// over active sensors.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bcl/numeric.hpp"

namespace bcl {

// Movement cost per unit distance.  Immobile sensors ("static" instances) are
// a distinct marker, not a large number: code must branch on is_static()
// instead of multiplying by some stand-in value.
class MoveCost {
 public:
  static MoveCost finite(double v) {
    if (!(v >= 0.0)) throw std::invalid_argument("move cost must be >= 0");
    MoveCost m;
    m.value_ = v;
    return m;
  }
  static MoveCost static_marker() {
    MoveCost m;
    m.static_ = true;
    return m;
  }
  bool is_static() const { return static_; }
  double value() const {
    if (static_) throw std::logic_error("move cost of a static instance");
    return value_;
  }

 private:
  double value_ = 0.0;
  bool static_ = false;
};

struct Sensor {
  double x = 0.0;        // initial position, in [0,1]
  double battery = 0.0;  // b_i >= 0
  // Fixed sensing radius, present on fixed-radii instances (radius choice is
  // then {0, rho}) and absent when the sensor may pick any radius.
  std::optional<double> rho;
};

struct ProblemInstance {
  double alpha = 1.0;  // sensing cost exponent, >= 1
  MoveCost move_cost = MoveCost::finite(1.0);
  std::vector<Sensor> sensors;

  std::size_t size() const { return sensors.size(); }
  // True when every sensor carries a fixed radius.
  bool fixed_radii() const;
  // Throws std::invalid_argument describing the first defect found.
  void validate() const;
};

// A deployment together with the lifetime it was computed for.  `order`, when
// present, is the left-to-right sensor order the solver committed to (sensor
// indices, leftmost first).
struct Solution {
  std::vector<double> y;
  std::vector<double> r;
  double lifetime = 0.0;
  bool achievable = false;
  std::optional<std::vector<std::size_t>> order;
};

struct CoverageReport {
  bool feasible = false;
  // Length of the largest uncovered stretch of [0,1]; 0 when covered.
  double max_gap = 0.0;
  // Largest amount by which a sensor's movement energy exceeds its battery;
  // infinite when a static sensor was moved.
  double battery_violation = 0.0;
  double realized_lifetime = 0.0;
};

// Lifetime of the deployment (y, r): min over sensors with r_i > 0 of
// (b_i - move cost)/r_i^alpha, where exhausted batteries give 0 and an empty
// active set gives +infinity.  Throws on length mismatch or negative radius.
double evaluate_lifetime(const ProblemInstance& inst,
                         const std::vector<double>& y,
                         const std::vector<double>& r);

// Checks barrier coverage and battery feasibility of a deployment at
// tolerance tol and reports the realized lifetime.
CoverageReport verify_solution(const ProblemInstance& inst, const Solution& sol,
                               double tol = cover_tol);

// Sensor indices sorted by position (ties by index): the left-to-right order
// induced by a deployment.
std::vector<std::size_t> order_of(const std::vector<double>& y);

// The identity order 0,1,...,n-1.
std::vector<std::size_t> identity_order(std::size_t n);

// Throws std::invalid_argument unless `order` is a permutation of 0..n-1.
void require_permutation(const std::vector<std::size_t>& order, std::size_t n);

}  // namespace bcl
