#pragma once

#include <stdexcept>

namespace latcosine {

/// A numeric cross-check failed: oracle disagreement beyond the attached
/// truncation bound, a squared error below the clamp tolerance, or a series
/// tail exceeding the requested tolerance.  The CLI maps this to exit code 1.
struct numerical_contract_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace latcosine
