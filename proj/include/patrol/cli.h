#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace patrol::cli {

/// Exit statuses of the command line tool.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kInfeasible = 2;
inline constexpr int kAboveBound = 3;

/// Runs one command line (without the program name). A file argument of
/// "-" reads from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace patrol::cli
