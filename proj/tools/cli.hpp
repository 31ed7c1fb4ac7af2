#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gradus::cli {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. `args` excludes the program name. Output goes to
/// `out` (or the --output file); diagnostics go to `err` with a prefix
/// naming the failure class ("usage error:", "parse error:", "io error:",
/// "input error:", "computation error:").
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gradus::cli
