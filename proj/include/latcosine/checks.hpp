#pragma once

#include <string>
#include <vector>

namespace latcosine {

struct CheckResult {
  std::string name;
  bool pass;
  bool soft;  // reported but never fatal (performance observations)
  std::string detail;
};

/// Runs the cross-module invariant suite: character orthogonality, kernel
/// identities and dominance, dual-sum/kernel-form oracle equivalence, engine
/// equivalence and determinism, hyperbolic-cross consistency, and the
/// aliasing identities.  include_slow adds the large sweeps and the fast-CBC
/// scaling observation.
std::vector<CheckResult> run_invariant_checks(bool include_slow);

}  // namespace latcosine
