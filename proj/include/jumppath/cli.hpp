#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jumppath::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // guard violation or failed verification
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jumppath::cli
