#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypqch::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitUsage = 64;

/// Runs one invocation. `args` excludes the program name. Reports go to `out`;
/// usage diagnostics go to `err`. Domain errors print a JSON error object on `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypqch::cli
