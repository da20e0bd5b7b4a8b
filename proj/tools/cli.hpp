#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace miht::cli {

/// Exit codes of the `miht` tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the tool with `args` (args[0] is the program name). Structured
/// results go to `out`, error messages to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace miht::cli
