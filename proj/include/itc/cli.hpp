#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace itc {

inline constexpr int kExitHolds = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitUndecided = 2;
inline constexpr int kExitInputError = 64;

/// Runs the command line `args` (without the program name). Subcommands:
/// check-pd, check-hurwitz, gen, corpus, bench. Returns the exit code.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace itc
