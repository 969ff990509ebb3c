#pragma once

#include <stdexcept>

namespace ctqw {

// Numerical failure: iteration did not converge, or an evaluation point sits
// too close to a pole of the object being evaluated.
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two routes that must agree did not (dual-method cross-checks, regularity
// scans over graph strata).
struct consistency_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ctqw
