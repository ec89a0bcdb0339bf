#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mperron {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitViolation = 3;
inline constexpr int kExitPrecision = 4;
inline constexpr int kExitBudget = 5;

/// Runs the command line (without the program name) and returns the exit
/// code. Results go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mperron
