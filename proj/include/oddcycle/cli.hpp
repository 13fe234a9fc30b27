#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oddcycle::cli {

inline constexpr const char* kToolName = "oddcycle";
inline constexpr const char* kToolVersion = "1.0.0";

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kViolation = 1;
inline constexpr int kUsageError = 2;

/// Parses `args` (without the program name) and runs one subcommand. Graphs
/// are read from `in` unless --input is given; reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace oddcycle::cli
