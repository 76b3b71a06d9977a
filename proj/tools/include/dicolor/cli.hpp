#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace dicolor::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name) and returns the exit
/// status. Reports go to `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace dicolor::cli
