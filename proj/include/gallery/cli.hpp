#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gallery {

/// Seed used by every randomized command when --seed is absent.
inline constexpr std::uint64_t kDefaultSeed = 20240521;

/// Exit codes of run_cli.
inline constexpr int kExitVerified = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitInputError = 2;

/// Runs one command line (args excludes the program name). Normal output
/// goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gallery
