#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cominimal/window.hpp"

namespace cominimal {
namespace oracle {

// Deliberately naive reference implementations. They validate the fast
// paths and generate frozen expected values; they share no algorithmic code
// with the kernels they check.

/// All pairwise sums of two element lists, clipped to the target window.
/// Quadratic time.
WindowedSet naive_sumset(const std::vector<i64>& a, const std::vector<i64>& b,
                         IntegerWindow target);

/// Exhaustive pair scan: every (a, b) with a + b = y, sorted by b.
std::vector<std::pair<i64, i64>> brute_reps(i64 y, const std::vector<i64>& a,
                                            const std::vector<i64>& b);

/// Subsets of Z_m as bitmasks.
using Mask = std::uint32_t;

/// A + B over Z_m as a mask.
Mask cyclic_sumset(Mask a, Mask b, int m);

/// Definition-checking brute force: A + B = Z_m, and removing any single
/// element from either side breaks coverage.
bool brute_cominimal_pair(Mask a, Mask b, int m);

/// Complete enumeration of co-minimal pairs (A, B) in Z_m. Requires m <= 14.
std::vector<std::pair<Mask, Mask>> exhaustive_cyclic_cominimal(int m);

}  // namespace oracle
}  // namespace cominimal
