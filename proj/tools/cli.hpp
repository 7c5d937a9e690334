#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qappell::cli {

/// Exit codes: 0 all residuals zero, 1 mathematical failure, 2 usage or
/// parameter error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qappell::cli
