#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pqbezier {

/// Exit codes: 0 success, 1 data error, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;

/// Runs `pqbezier <args...>` (args exclude the program name) against the
/// given streams and returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pqbezier
