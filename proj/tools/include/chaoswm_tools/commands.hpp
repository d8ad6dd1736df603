#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chaoswm::tools {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name).
/// Subcommands: embed, extract, attack, evaluate, chaos-check.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chaoswm::tools
