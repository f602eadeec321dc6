#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace treemu::cli {

/// Exit codes: 0 success or verified, 1 negative result, 2 usage or input
/// error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace treemu::cli
