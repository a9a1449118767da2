#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bipcon::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapacity = 3;

/// Entry point of the `bipcon` tool. `args` includes the program name.
/// Subcommands: exact, mc, walk, asym, classify, sweep, curves.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bipcon::cli
