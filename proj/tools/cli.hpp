#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trapezoid::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable holding the default census worker count.
inline constexpr const char* kJobsEnvVar = "TRAPEZOID_JOBS";

/// Runs the command line `args` (args[0] is the program name), writing
/// results to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trapezoid::cli
