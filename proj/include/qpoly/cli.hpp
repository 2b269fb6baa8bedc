#pragma once

#include <cstdint>
#include <iosfwd>

namespace qpoly::cli {

/// Seed used by randomized subcommands when --seed is absent.
inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Runs the command line. Returns 0 on success, 1 on domain errors
/// (e.g. infeasible interpolation points), 2 on usage and input errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qpoly::cli
