#pragma once

#include <string>
#include <vector>

namespace apsvm::cli {

/// Runs one CLI invocation; args exclude the program name.
/// Returns 0 on success, 2 on input/validation errors, 3 on numerical or
/// convergence failures. Diagnostics go to stderr.
int run(const std::vector<std::string>& args);

} // namespace apsvm::cli
