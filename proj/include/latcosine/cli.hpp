#pragma once

#include <string>
#include <vector>

namespace latcosine {

/// Runs one CLI invocation: subcommands points, cbc, wce, hypercross,
/// approx, study, check.  Returns 0 on success, 1 on a numerical-contract
/// failure, 2 on a usage error.
int cli_dispatch(const std::vector<std::string>& args);

}  // namespace latcosine
