#pragma once

#include <stdexcept>
#include <string>

namespace diabatic {

// Validation failures on inputs (s out of range, bad tolerances, ...).
class domain_error : public std::domain_error {
public:
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// b >= 1 gives a zero-length collision path.
class degenerate_trajectory_error : public domain_error {
public:
  explicit degenerate_trajectory_error(const std::string& what) : domain_error(what) {}
};

// Step-count exhaustion; carries how far the integrator got.
class integration_error : public std::runtime_error {
public:
  integration_error(const std::string& what, double z_reached, long steps_taken)
      : std::runtime_error(what), z_reached(z_reached), steps_taken(steps_taken) {}
  double z_reached = 0.0;
  long steps_taken = 0;
};

// Result violated its own accuracy contract (norm drift past the bound).
class accuracy_error : public std::runtime_error {
public:
  accuracy_error(const std::string& what, double achieved)
      : std::runtime_error(what), achieved(achieved) {}
  double achieved = 0.0;
};

// Power-law fit rejected (floor contamination or eps range too wide).
class scaling_fit_error : public std::runtime_error {
public:
  scaling_fit_error(const std::string& what, double r_squared)
      : std::runtime_error(what), r_squared(r_squared) {}
  double r_squared = 0.0;
};

}  // namespace diabatic
