#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "rigidity/scalar.hpp"

namespace rigidity {

// Dense row-major matrix over a single Domain. Entries are promoted to the
// join of their domains at construction, so a Matrix never mixes variants.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
  // Forces `domain` instead of inferring it; entries must embed into it.
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries, Domain domain);

  static Matrix zeros(std::size_t rows, std::size_t cols, Domain domain = {});
  static Matrix identity(std::size_t n, Domain domain = {});
  static Matrix from_integers(std::size_t rows, std::size_t cols, std::initializer_list<long> values);
  static Matrix from_integers(std::size_t rows, std::size_t cols, const std::vector<long>& values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  const Domain& domain() const noexcept { return domain_; }
  bool exact() const noexcept { return domain_.exact(); }

  const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return at(i, j); }
  std::span<const Scalar> entries() const noexcept { return entries_; }

  Matrix promoted_to(const Domain& domain) const;
  Matrix transpose() const;
  Matrix operator-() const;
  Matrix scaled(const Scalar& factor) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);

  // Same shape and exactly equal entries; domains may differ if the values
  // embed identically (an int matrix equals its rational promotion).
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  Domain domain_;
  std::vector<Scalar> entries_;
};

// Square +1/-1 matrix packed one bit per entry; a set bit means -1.
class SignMatrix {
 public:
  explicit SignMatrix(std::size_t n);  // all +1
  // Packed row-major bits, 64 per word; throws on a size mismatch.
  SignMatrix(std::size_t n, std::vector<std::uint64_t> words);

  // Throws unless `m` is square with integer entries in {+1, -1}.
  static SignMatrix from_matrix(const Matrix& m);

  std::size_t size() const noexcept { return n_; }
  bool negative(std::size_t i, std::size_t j) const {
    const std::size_t bit = i * n_ + j;
    return (words_[bit / 64] >> (bit % 64)) & 1u;
  }
  int sign(std::size_t i, std::size_t j) const { return negative(i, j) ? -1 : 1; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  Matrix to_matrix() const;

  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<std::uint64_t> words_;
};

struct Change {
  std::size_t row;
  std::size_t col;
  Scalar value;
};

// Sparse set of entry replacements, kept sorted by (row, col).
class Perturbation {
 public:
  Perturbation() = default;
  // Throws kInvalidArgument on a repeated (row, col).
  explicit Perturbation(std::vector<Change> changes);

  std::size_t size() const noexcept { return changes_.size(); }
  bool empty() const noexcept { return changes_.empty(); }
  std::span<const Change> changes() const noexcept { return changes_; }

 private:
  std::vector<Change> changes_;
};

// Aligned grid of block_size x block_size cells covering an n x n matrix.
struct BlockPartition {
  std::size_t n;
  std::size_t block_size;
  std::size_t grid_side;

  static BlockPartition make(std::size_t n, std::size_t block_size);
  std::size_t cell_count() const noexcept { return grid_side * grid_side; }
};

// Column orders are stored as "new column t is old column order[t]".
using ColumnOrder = std::vector<std::size_t>;

ColumnOrder invert(const ColumnOrder& order);
ColumnOrder evens_first_order(std::size_t cols);
ColumnOrder bit_reversal_order(std::size_t cols);
Matrix permute_columns(const Matrix& m, const ColumnOrder& order);

// Block (k, l) of the result is b_kl * A.
Matrix kronecker(const Matrix& a, const Matrix& b);

// S(2^k); throws kResourceLimit above k = 13.
SignMatrix sylvester(unsigned k);
Matrix sylvester_matrix(unsigned k);

// Exact DFT over Q(w_n), entry (j, k) = w^(j*k) with 0-based indices.
// n must be a power of two >= 2.
Matrix dft(std::size_t n);
// Double-precision DFT; any n >= 1.
Matrix dft_approx(std::size_t n);

bool is_hadamard(const Matrix& m);

Matrix evens_first(const Matrix& m);
Matrix bit_reversal_columns(const Matrix& m);

// The size x size submatrix at grid cell (i, j).
Matrix block(const Matrix& m, std::size_t i, std::size_t j, std::size_t size);
Matrix submatrix(const Matrix& m, std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols);

// New values are promoted together with M, so rational changes to an integer
// matrix give a rational result.
Matrix apply_perturbation(const Matrix& m, const Perturbation& p);

// Number of positions whose entries differ (tolerance comparison when either
// side is approximate).
std::size_t weight_diff(const Matrix& a, const Matrix& b, double tolerance = kDefaultTolerance);

// Changes of P that actually alter M.
std::size_t effective_weight(const Matrix& m, const Perturbation& p);

}  // namespace rigidity
