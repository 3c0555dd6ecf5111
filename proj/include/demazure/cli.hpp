#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace demazure::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailed = 2;

/// Runs one command. `args` excludes the program name. Returns 0 on success,
/// 1 for malformed input and 2 when a verification or benchmark check fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace demazure::cli
