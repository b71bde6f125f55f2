#include "rigidity/matrix.hpp"

#include <algorithm>
#include <string>

#include "rigidity/error.hpp"

namespace rigidity {

namespace {

void require_positive_shape(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorCode::kInvalidArgument, "matrix dimensions must be positive");
  }
}

Domain infer_domain(const std::vector<Scalar>& entries) {
  Domain d{};
  for (const auto& e : entries) d = join(d, e.domain());
  return d;
}

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : Matrix(rows, cols, entries, infer_domain(entries)) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries, Domain domain)
    : rows_(rows), cols_(cols), domain_(domain), entries_(std::move(entries)) {
  require_positive_shape(rows, cols);
  if (entries_.size() != rows * cols) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected " + std::to_string(rows * cols) + " entries, got " +
                    std::to_string(entries_.size()));
  }
  for (auto& e : entries_) {
    if (e.domain() != domain_) e = e.promoted_to(domain_);
  }
}

Matrix Matrix::zeros(std::size_t rows, std::size_t cols, Domain domain) {
  return Matrix(rows, cols, std::vector<Scalar>(rows * cols, Scalar(0)), domain);
}

Matrix Matrix::identity(std::size_t n, Domain domain) {
  std::vector<Scalar> e(n * n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = Scalar(1);
  return Matrix(n, n, std::move(e), domain);
}

Matrix Matrix::from_integers(std::size_t rows, std::size_t cols, std::initializer_list<long> values) {
  return from_integers(rows, cols, std::vector<long>(values));
}

Matrix Matrix::from_integers(std::size_t rows, std::size_t cols, const std::vector<long>& values) {
  std::vector<Scalar> e;
  e.reserve(values.size());
  for (long v : values) e.emplace_back(v);
  return Matrix(rows, cols, std::move(e), Domain{});
}

Matrix Matrix::promoted_to(const Domain& domain) const {
  return Matrix(rows_, cols_, entries_, domain);
}

Matrix Matrix::transpose() const {
  std::vector<Scalar> e;
  e.reserve(entries_.size());
  for (std::size_t j = 0; j < cols_; ++j) {
    for (std::size_t i = 0; i < rows_; ++i) e.push_back(at(i, j));
  }
  return Matrix(cols_, rows_, std::move(e), domain_);
}

Matrix Matrix::operator-() const {
  std::vector<Scalar> e;
  e.reserve(entries_.size());
  for (const auto& x : entries_) e.push_back(-x);
  return Matrix(rows_, cols_, std::move(e), domain_);
}

Matrix Matrix::scaled(const Scalar& factor) const {
  std::vector<Scalar> e;
  e.reserve(entries_.size());
  for (const auto& x : entries_) e.push_back(x * factor);
  return Matrix(rows_, cols_, std::move(e));
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(ErrorCode::kDimensionMismatch, "cannot multiply " + shape(a) + " by " + shape(b));
  }
  const Domain d = join(a.domain_, b.domain_);
  std::vector<Scalar> e;
  e.reserve(a.rows_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      Scalar acc = Scalar(0).promoted_to(d);
      for (std::size_t k = 0; k < a.cols_; ++k) acc = acc + a.at(i, k) * b.at(k, j);
      e.push_back(std::move(acc));
    }
  }
  return Matrix(a.rows_, b.cols_, std::move(e), d);
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(ErrorCode::kDimensionMismatch, "cannot add " + shape(a) + " and " + shape(b));
  }
  std::vector<Scalar> e;
  e.reserve(a.entries_.size());
  for (std::size_t k = 0; k < a.entries_.size(); ++k) e.push_back(a.entries_[k] + b.entries_[k]);
  return Matrix(a.rows_, a.cols_, std::move(e), join(a.domain_, b.domain_));
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  try {
    for (std::size_t k = 0; k < a.entries_.size(); ++k) {
      if (!(a.entries_[k] == b.entries_[k])) return false;
    }
  } catch (const Error&) {
    return false;  // incompatible fields
  }
  return true;
}

SignMatrix::SignMatrix(std::size_t n) : n_(n), words_((n * n + 63) / 64, 0) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "sign matrix must be non-empty");
}

SignMatrix::SignMatrix(std::size_t n, std::vector<std::uint64_t> words)
    : n_(n), words_(std::move(words)) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "sign matrix must be non-empty");
  if (words_.size() != (n * n + 63) / 64) {
    throw Error(ErrorCode::kDimensionMismatch, "sign matrix bit count does not match n*n");
  }
  const std::size_t tail = (n * n) % 64;
  if (tail != 0 && (words_.back() >> tail) != 0) {
    throw Error(ErrorCode::kInvalidArgument, "sign matrix has bits beyond n*n");
  }
}

SignMatrix SignMatrix::from_matrix(const Matrix& m) {
  if (!m.square()) throw Error(ErrorCode::kDimensionMismatch, "sign matrix must be square");
  const std::size_t n = m.rows();
  std::vector<std::uint64_t> words((n * n + 63) / 64, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& x = m.at(i, j);
      if (x == Scalar(-1)) {
        const std::size_t bit = i * n + j;
        words[bit / 64] |= std::uint64_t{1} << (bit % 64);
      } else if (!(x == Scalar(1))) {
        throw Error(ErrorCode::kInvalidArgument,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not +1/-1");
      }
    }
  }
  return SignMatrix(n, std::move(words));
}

Matrix SignMatrix::to_matrix() const {
  std::vector<Scalar> e;
  e.reserve(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) e.emplace_back(sign(i, j));
  }
  return Matrix(n_, n_, std::move(e), Domain{});
}

Perturbation::Perturbation(std::vector<Change> changes) : changes_(std::move(changes)) {
  std::sort(changes_.begin(), changes_.end(), [](const Change& a, const Change& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  for (std::size_t k = 1; k < changes_.size(); ++k) {
    if (changes_[k].row == changes_[k - 1].row && changes_[k].col == changes_[k - 1].col) {
      throw Error(ErrorCode::kInvalidArgument,
                  "perturbation lists (" + std::to_string(changes_[k].row) + "," +
                      std::to_string(changes_[k].col) + ") twice");
    }
  }
}

BlockPartition BlockPartition::make(std::size_t n, std::size_t block_size) {
  if (block_size == 0 || n == 0 || n % block_size != 0) {
    throw Error(ErrorCode::kInvalidArgument, "block size " + std::to_string(block_size) +
                                                 " does not divide " + std::to_string(n));
  }
  return {n, block_size, n / block_size};
}

ColumnOrder invert(const ColumnOrder& order) {
  ColumnOrder inv(order.size());
  for (std::size_t t = 0; t < order.size(); ++t) inv.at(order[t]) = t;
  return inv;
}

ColumnOrder evens_first_order(std::size_t cols) {
  if (cols % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "evens-first needs an even column count, got " + std::to_string(cols));
  }
  ColumnOrder order;
  order.reserve(cols);
  for (std::size_t c = 0; c < cols; c += 2) order.push_back(c);
  for (std::size_t c = 1; c < cols; c += 2) order.push_back(c);
  return order;
}

ColumnOrder bit_reversal_order(std::size_t cols) {
  if (!is_power_of_two(cols)) {
    throw Error(ErrorCode::kInvalidArgument,
                "bit reversal needs 2^k columns, got " + std::to_string(cols));
  }
  unsigned bits = 0;
  while ((std::size_t{1} << bits) < cols) ++bits;
  ColumnOrder order(cols);
  for (std::size_t t = 0; t < cols; ++t) {
    std::size_t rev = 0;
    for (unsigned b = 0; b < bits; ++b) {
      if (t & (std::size_t{1} << b)) rev |= std::size_t{1} << (bits - 1 - b);
    }
    order[t] = rev;
  }
  return order;
}

Matrix permute_columns(const Matrix& m, const ColumnOrder& order) {
  if (order.size() != m.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "column order length does not match matrix");
  }
  std::vector<Scalar> e;
  e.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t t = 0; t < m.cols(); ++t) e.push_back(m.at(i, order[t]));
  }
  return Matrix(m.rows(), m.cols(), std::move(e), m.domain());
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  const Domain d = join(a.domain(), b.domain());
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  std::vector<Scalar> e(rows * cols);
  for (std::size_t k = 0; k < b.rows(); ++k) {
    for (std::size_t l = 0; l < b.cols(); ++l) {
      const Scalar& factor = b.at(k, l);
      for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
          e[(k * a.rows() + i) * cols + l * a.cols() + j] = factor * a.at(i, j);
        }
      }
    }
  }
  return Matrix(rows, cols, std::move(e), d);
}

SignMatrix sylvester(unsigned k) {
  constexpr unsigned kMaxOrderLog2 = 13;
  if (k > kMaxOrderLog2) {
    throw Error(ErrorCode::kResourceLimit,
                "S(2^" + std::to_string(k) + ") exceeds the 2^13 size guard");
  }
  // Iterate X <- X (x) S(2): block (p, q) of the next level is s_pq * X,
  // so only block (1, 1) flips sign.
  std::size_t n = 1;
  std::vector<bool> neg{false};
  for (unsigned level = 0; level < k; ++level) {
    const std::size_t m = 2 * n;
    std::vector<bool> next(m * m);
    for (std::size_t p = 0; p < 2; ++p) {
      for (std::size_t q = 0; q < 2; ++q) {
        const bool flip = p == 1 && q == 1;
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            next[(p * n + i) * m + q * n + j] = neg[i * n + j] != flip;
          }
        }
      }
    }
    neg = std::move(next);
    n = m;
  }
  std::vector<std::uint64_t> words((n * n + 63) / 64, 0);
  for (std::size_t bit = 0; bit < n * n; ++bit) {
    if (neg[bit]) words[bit / 64] |= std::uint64_t{1} << (bit % 64);
  }
  return SignMatrix(n, std::move(words));
}

Matrix sylvester_matrix(unsigned k) { return sylvester(k).to_matrix(); }

Matrix dft(std::size_t n) {
  if (n < 2 || !is_power_of_two(n)) {
    throw Error(ErrorCode::kInvalidArgument,
                "exact DFT needs n a power of two >= 2, got " + std::to_string(n));
  }
  const auto order = static_cast<unsigned>(n);
  std::vector<Scalar> e;
  e.reserve(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      e.emplace_back(Cyclotomic::root_power(order, static_cast<std::int64_t>((j * k) % n)));
    }
  }
  return Matrix(n, n, std::move(e), Domain{ScalarKind::kCyclotomic, order});
}

Matrix dft_approx(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "DFT size must be positive");
  std::vector<Scalar> e;
  e.reserve(n * n);
  const double step = 2.0 * 3.14159265358979323846 / static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      e.emplace_back(std::polar(1.0, step * static_cast<double>((j * k) % n)));
    }
  }
  return Matrix(n, n, std::move(e), Domain{ScalarKind::kApprox, 0});
}

bool is_hadamard(const Matrix& m) {
  if (!m.square() || !m.exact()) return false;
  const std::size_t n = m.rows();
  std::vector<int> s(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& x = m.at(i, j);
      if (x == Scalar(1)) {
        s[i * n + j] = 1;
      } else if (x == Scalar(-1)) {
        s[i * n + j] = -1;
      } else {
        return false;
      }
    }
  }
  // M M^T = n I, entry by entry.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i; k < n; ++k) {
      long long dot = 0;
      for (std::size_t j = 0; j < n; ++j) dot += s[i * n + j] * s[k * n + j];
      if (dot != (i == k ? static_cast<long long>(n) : 0)) return false;
    }
  }
  return true;
}

Matrix evens_first(const Matrix& m) { return permute_columns(m, evens_first_order(m.cols())); }

Matrix bit_reversal_columns(const Matrix& m) {
  return permute_columns(m, bit_reversal_order(m.cols()));
}

Matrix submatrix(const Matrix& m, std::size_t row0, std::size_t col0, std::size_t rows,
                 std::size_t cols) {
  if (row0 + rows > m.rows() || col0 + cols > m.cols()) {
    throw Error(ErrorCode::kOutOfRange, "submatrix exceeds " + shape(m));
  }
  std::vector<Scalar> e;
  e.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) e.push_back(m.at(row0 + i, col0 + j));
  }
  return Matrix(rows, cols, std::move(e), m.domain());
}

Matrix block(const Matrix& m, std::size_t i, std::size_t j, std::size_t size) {
  if (size == 0 || m.rows() % size != 0 || m.cols() % size != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "block size " + std::to_string(size) + " does not divide " + shape(m));
  }
  if (i >= m.rows() / size || j >= m.cols() / size) {
    throw Error(ErrorCode::kOutOfRange, "grid cell (" + std::to_string(i) + "," +
                                            std::to_string(j) + ") outside " + shape(m));
  }
  return submatrix(m, i * size, j * size, size, size);
}

Matrix apply_perturbation(const Matrix& m, const Perturbation& p) {
  Domain d = m.domain();
  for (const auto& c : p.changes()) {
    if (c.row >= m.rows() || c.col >= m.cols()) {
      throw Error(ErrorCode::kOutOfRange, "change at (" + std::to_string(c.row) + "," +
                                              std::to_string(c.col) + ") outside " + shape(m));
    }
    d = join(d, c.value.domain());
  }
  std::vector<Scalar> e(m.entries().begin(), m.entries().end());
  for (const auto& c : p.changes()) e[c.row * m.cols() + c.col] = c.value;
  return Matrix(m.rows(), m.cols(), std::move(e), d);
}

std::size_t weight_diff(const Matrix& a, const Matrix& b, double tolerance) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "cannot compare " + shape(a) + " with " + shape(b));
  }
  join(a.domain(), b.domain());  // rejects incompatible fields
  const bool exact = a.exact() && b.exact();
  std::size_t count = 0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    const Scalar& x = a.entries()[k];
    const Scalar& y = b.entries()[k];
    const bool same = exact ? x == y : approx_equal(x, y, tolerance);
    if (!same) ++count;
  }
  return count;
}

std::size_t effective_weight(const Matrix& m, const Perturbation& p) {
  std::size_t count = 0;
  for (const auto& c : p.changes()) {
    if (c.row >= m.rows() || c.col >= m.cols()) {
      throw Error(ErrorCode::kOutOfRange, "change outside matrix");
    }
    const Scalar& old = m.at(c.row, c.col);
    const bool same = old.exact() && c.value.exact() ? old == c.value : approx_equal(old, c.value);
    if (!same) ++count;
  }
  return count;
}

}  // namespace rigidity
