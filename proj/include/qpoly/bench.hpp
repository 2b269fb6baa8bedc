#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace qpoly::bench {

struct BenchRow {
  std::size_t size = 0;
  double seconds = 0.0;
};

/// Benchmarked operations: "convolve" (convolve_fast on two random
/// length-n sequences), "multieval" (multieval_fast of a random two-sided
/// polynomial with n terms at n random points), and "mul1" (mul_fast of two
/// random quadruples of degree n).
bool known_op(std::string_view op);

/// Median wall time per call over `repeats` samples per size; calls
/// shorter than 20 ms are repeated within a sample and averaged. Inputs are drawn from a
/// generator seeded with `seed` and are rebuilt for each size; input
/// construction is not timed.
std::vector<BenchRow> run(std::string_view op, std::span<const std::size_t> sizes, int repeats,
                          std::uint64_t seed);

}  // namespace qpoly::bench
