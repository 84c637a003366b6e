#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dioph::cli {

// Exit codes.
inline constexpr int kSuccess = 0;      // the checked claim holds
inline constexpr int kClaimFailed = 1;  // a mathematical claim is false
inline constexpr int kUsageError = 2;   // bad flags, unparsable numbers, malformed input

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dioph::cli
