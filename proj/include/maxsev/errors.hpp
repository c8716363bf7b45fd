#pragma once

#include <stdexcept>

namespace maxsev {

// Rejected periodic-function parameters.
struct invalid_period : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Positivity of the periodic perturbation (or a level/scale parameter) fails.
struct non_positive_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The perturbation violates the branch monotonicity condition, so the
// resulting exp(-psi) would not be a distribution function.
struct non_monotone_tail_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Argument outside the support half-line of a law.
struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Root finding failed. For validated laws this cannot happen, so it signals
// an invariant violation rather than a user error.
struct convergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct too_few_samples_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The autoregression scale does not hit the periodicity of the marginal law.
struct period_mismatch_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct non_monotone_times_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace maxsev
