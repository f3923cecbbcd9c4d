#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sumstruct {

// Exit codes: 0 all assertions passed, 1 verified violation found,
// 2 usage error, 3 budget exhausted / attempts exhausted.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

/// Runs one CLI invocation (argv without the program name) and streams
/// serialized reports to `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

} // namespace sumstruct
