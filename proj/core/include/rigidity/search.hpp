#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rigidity/certificate.hpp"
#include "rigidity/matrix.hpp"

namespace rigidity {

enum class SearchKind {
  kExactValue,
  kUpperBoundOnly,
  // Exhaustive search proved R_M(1) > max_weight without finding a witness.
  kBoundExceeded,
};

enum class SearchMethod {
  kUnchanged,  // M already has rank <= r
  kSupportEnumeration,
  kSignPatternScan,
  kAlternatingDescent,
};

const char* to_string(SearchKind kind);
const char* to_string(SearchMethod method);

struct Position {
  std::size_t row;
  std::size_t col;
};

struct SearchResult {
  std::size_t target_rank = 0;
  SearchKind kind = SearchKind::kUpperBoundOnly;
  std::size_t weight = 0;
  std::optional<Perturbation> witness;
  SearchMethod method = SearchMethod::kUnchanged;
  // Support enumeration only: supports_examined[w] = number of size-w
  // supports tested.
  std::vector<std::uint64_t> supports_examined;
  // The witness rank was checked with numerical_rank instead of exact_rank.
  bool numerically_verified = false;
};

// A rank <= 1 matrix equal to M outside `support`, or nullopt if none
// exists. M must be integer or rational. Rows and columns whose constrained
// entries are all zero get factor 0.
std::optional<Matrix> rank_one_completion(const Matrix& m, std::span<const Position> support);

// R_M(1) by enumerating supports of size 0, 1, ... in lexicographic order of
// row-major positions. Rejects matrices with more than 6 rows or columns
// (kResourceLimit).
SearchResult exact_rigidity_rank1(const Matrix& m, std::size_t max_weight);

struct SearchOptions {
  std::size_t budget = 32;
  std::uint64_t seed = 0;
  double tolerance = kDefaultTolerance;
};

// Heuristic feasible point of the rigidity minimization: sign-pattern scan
// (r = 1, +1/-1 matrices up to 16 rows), then skeleton factorizations
// M[:,J] M[I,J]^-1 M[I,:] refined by alternating exact refits of one factor,
// then greedy reversion of changed entries. Deterministic for fixed options.
// The witness is re-verified before returning.
SearchResult upper_bound_search(const Matrix& m, std::size_t r, const SearchOptions& options = {});

struct CrossValidateOptions {
  SearchOptions search;
  // Also run exact_rigidity_rank1 (r = 1 and at most 6x6 only).
  bool exact = false;
  std::size_t exact_max_weight = 36;
};

struct RigidityInterval {
  std::size_t r = 0;
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  bool exact = false;
  std::vector<LowerBoundCertificate> certificates;
  std::vector<SearchResult> searches;
  std::size_t pairs_checked = 0;
};

// Every verified certificate is compared against every search result; any
// lower > upper throws kInconsistentInterval, which always indicates a bug.
RigidityInterval cross_validate(const Matrix& m, std::size_t r, const CrossValidateOptions& options = {});

std::string search_result_to_json(const SearchResult& result);
std::string interval_to_json(const RigidityInterval& interval);

}  // namespace rigidity
