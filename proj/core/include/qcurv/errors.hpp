#pragma once

#include <stdexcept>
#include <string>

// Error taxonomy. Every throwing path in the library uses one of these so
// callers (and the CLI exit-code mapping) can tell a numerical refusal apart
// from a misuse of the API.

namespace qcurv {

// Base for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A gamma-function ratio hit a pole of the numerator that the denominator
// does not cancel.
struct gamma_pole_error : error {
  using error::error;
};

// A certified spectral tail bound exceeds the requested tolerance at the
// available truncation level.
struct tail_budget_error : error {
  using error::error;
};

// Evaluation of the continued zeta function was requested at (or too close
// to) a pole of Gamma(s)*zeta(s).
struct pole_hit_error : error {
  using error::error;
};

// Adaptive quadrature could not meet its tolerance within the depth budget.
struct quadrature_error : error {
  using error::error;
};

// A least-squares system's condition number exceeded the configured cap.
struct ill_conditioned_error : error {
  using error::error;
};

// An operation was asked for an operator/dimension pair it does not support.
struct unsupported_error : error {
  using error::error;
};

// A ratio with a vanishing denominator (norms, quotients).
struct zero_denominator_error : error {
  using error::error;
};

// Malformed run configuration or operator description (CLI layer).
struct config_error : error {
  using error::error;
};

}  // namespace qcurv
