#pragma once

#include <iosfwd>

namespace psl2::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInvalidInput = 3;

// Parses argv, runs one subcommand and returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace psl2::cli
