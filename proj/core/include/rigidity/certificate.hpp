#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rigidity/matrix.hpp"

namespace rigidity {

enum class CertificateKind { kTrivial, kFullRankPartition };
enum class ColumnPermutation { kIdentity, kBitReversal };

const char* to_string(CertificateKind kind);
const char* to_string(ColumnPermutation perm);

ColumnOrder column_order(ColumnPermutation perm, std::size_t cols);

struct BlockRank {
  std::size_t i;
  std::size_t j;
  std::size_t rank;

  friend bool operator==(const BlockRank&, const BlockRank&) = default;
};

// A verified claim R_M(r) >= bound.
//
// kTrivial: M has full rank n, and one entry change lowers the rank by at
// most one, so bound = n - r.
//
// kFullRankPartition: after permuting columns, every cell of the aligned
// (n/2r) x (n/2r) grid of 2r x 2r blocks has rank 2r. A perturbation of
// weight below gridSide^2 * r leaves some cell with fewer than r changes, and
// that cell alone keeps rank above r. Column permutations preserve both
// weight and rank, so the bound transfers back to M.
struct LowerBoundCertificate {
  std::string matrix_digest;
  std::size_t n = 0;
  std::size_t r = 0;
  std::uint64_t bound = 0;
  CertificateKind kind = CertificateKind::kTrivial;
  ColumnPermutation permutation = ColumnPermutation::kIdentity;
  std::size_t block_size = 0;
  std::size_t grid_side = 0;
  std::vector<BlockRank> blocks;

  friend bool operator==(const LowerBoundCertificate&, const LowerBoundCertificate&) = default;
};

// The grid cell that keeps a specific perturbation from reaching rank r.
struct RefutationWitness {
  std::size_t block_row = 0;
  std::size_t block_col = 0;
  std::size_t changes_in_block = 0;
  long claimed_rank_floor = 0;
  std::size_t perturbation_weight = 0;
  // exact_rank of the perturbed matrix, computed as a cross-check.
  std::size_t perturbed_rank = 0;

  friend bool operator==(const RefutationWitness&, const RefutationWitness&) = default;
};

// Requires M square, exact, of full rank; otherwise kCertificateInapplicable.
LowerBoundCertificate trivial_lower_bound(const Matrix& m, std::size_t r);

// n^2 / (4r) for n = 2^k and r a power of two with r <= n/2.
std::uint64_t sylvester_bound_value(std::uint64_t n, std::uint64_t r);

// Throws kCertificateFailed naming the first rank-deficient cell.
LowerBoundCertificate full_rank_partition_certificate(const Matrix& m, std::size_t r,
                                                      ColumnPermutation perm);

// Recomputes everything the certificate claims about M.
bool verify_certificate(const Matrix& m, const LowerBoundCertificate& cert);

// Pigeonhole step made constructive: the cell with the fewest effective
// changes (row-major first on ties). Throws kRefutationNotGuaranteed when the
// weight reaches cert.bound and kCertificateMismatch when cert is not a
// partition certificate for (M, r).
RefutationWitness refute_perturbation(const Matrix& m, const Perturbation& p, std::size_t r,
                                      const LowerBoundCertificate& cert);

// Exponent convention for the twiddle diagonal D = diag(w^(j + offset)).
enum class TwiddleConvention {
  kZeroBasedRow,  // offset 0: the convention that matches f_jk
  kOneBasedRow,   // offset 1: literal w^j with 1-based rows
};

struct DftDecompositionCheck {
  bool holds = false;
  // First mismatching entry of evens_first(dft(n)) when !holds.
  std::size_t row = 0;
  std::size_t col = 0;
};

// Checks evens_first(dft(n)) == [[F, D F], [F, -D F]] with F = dft(n/2)
// embedded in Q(w_n), exactly.
DftDecompositionCheck verify_dft_decomposition(
    std::size_t n, TwiddleConvention convention = TwiddleConvention::kZeroBasedRow);

// Largest bound among the trivial certificate and the partition certificates
// (identity, plus bit reversal when n is a power of two). Ties keep the
// earlier candidate in that order. Throws kNoCertificate if none verifies.
LowerBoundCertificate best_lower_bound(const Matrix& m, std::size_t r);

std::string certificate_to_json(const LowerBoundCertificate& cert,
                                 const std::optional<RefutationWitness>& witness = std::nullopt);
LowerBoundCertificate certificate_from_json(std::string_view text);

}  // namespace rigidity
