#pragma once

#include <cstddef>

#include "rigidity/matrix.hpp"

namespace rigidity {

// Rank over the fraction field of the entry domain. Integer matrices use
// fraction-free (Bareiss) elimination; rational and cyclotomic matrices use
// plain elimination pivoting on the first nonzero entry. Throws
// kApproximateInput for approximate matrices.
std::size_t exact_rank(const Matrix& m);

// Number of pivots above `tolerance` in partially pivoted elimination.
// Exact matrices are embedded into double precision first.
std::size_t numerical_rank(const Matrix& m, double tolerance = kDefaultTolerance);

// Changing one entry moves the rank by at most one, so a matrix that differs
// from a rank-`block_rank` matrix in `changes` entries has rank at least
// max(0, block_rank - changes).
constexpr long rank_lower_bound_after_changes(long block_rank, long changes) {
  return block_rank > changes ? block_rank - changes : 0;
}

}  // namespace rigidity
