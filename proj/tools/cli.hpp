#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubicgap::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name. Graph input named
/// "-" is read from `in`, one graph6 per line. Returns the exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cubicgap::cli
