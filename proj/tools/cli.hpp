#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace otis::cli {

/// Exit codes: the property holds / the property fails / bad usage.
inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace otis::cli
