#pragma once

#include <ostream>

namespace adaptea::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIo = 2;

// Entry point of the `adaptea` tool. Subcommands: run, analyze,
// list-problems, list-operators, demo.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace adaptea::cli
