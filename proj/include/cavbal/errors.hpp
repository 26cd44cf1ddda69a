#pragma once

#include <stdexcept>
#include <string>

namespace cavbal {

// Numeric failure during evaluation (non-finite term, self-check mismatch,
// non-convergence). Distinct from argument/usage errors so the CLI can map
// it to its own exit code.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

// Quadrature did not reach the requested accuracy within the panel budget.
// Carries the error estimate and the partial value instead of silently
// returning a wrong number.
class quadrature_error : public numeric_error {
 public:
  quadrature_error(const std::string& what, double error_estimate,
                   double partial_value)
      : numeric_error(what),
        error_estimate_(error_estimate),
        partial_value_(partial_value) {}

  double error_estimate() const { return error_estimate_; }
  double partial_value() const { return partial_value_; }

 private:
  double error_estimate_;
  double partial_value_;
};

}  // namespace cavbal
