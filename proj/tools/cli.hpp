#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sopi::cli {

/// Exit codes: 0 success, 2 usage or validation error, 3 domain failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

/// Runs the `sopi` command line (arguments exclude the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sopi::cli
