// Private helpers: dense elimination templated over the exact fields
// (mpq_class, Cyclotomic) and std::complex<double>.
#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "rigidity/cyclotomic.hpp"
#include "rigidity/error.hpp"
#include "rigidity/matrix.hpp"

namespace rigidity::detail {

// Zero test and constants for a field type. `Ctx` carries whatever the type
// needs to build constants (the cyclotomic order, the numerical tolerance).
template <typename F>
struct Field;

template <>
struct Field<mpq_class> {
  static bool is_zero(const mpq_class& x) { return sgn(x) == 0; }
  mpq_class zero() const { return 0; }
  mpq_class one() const { return 1; }
  bool zero_test(const mpq_class& x) const { return is_zero(x); }
  bool equal(const mpq_class& a, const mpq_class& b) const { return a == b; }
  static mpq_class from(const Scalar& s) { return s.to_rational(); }
  static Scalar to_scalar(const mpq_class& x) { return Scalar(x); }
};

template <>
struct Field<Cyclotomic> {
  unsigned order = 2;
  Cyclotomic zero() const { return Cyclotomic(order); }
  Cyclotomic one() const { return Cyclotomic::from_rational(order, 1); }
  bool zero_test(const Cyclotomic& x) const { return x.is_zero(); }
  bool equal(const Cyclotomic& a, const Cyclotomic& b) const { return a == b; }
  Cyclotomic from(const Scalar& s) const {
    return s.promoted_to({ScalarKind::kCyclotomic, order}).as_cyclotomic();
  }
  static Scalar to_scalar(const Cyclotomic& x) { return Scalar(x); }
};

template <>
struct Field<std::complex<double>> {
  double tolerance = kDefaultTolerance;
  std::complex<double> zero() const { return 0.0; }
  std::complex<double> one() const { return 1.0; }
  bool zero_test(const std::complex<double>& x) const { return std::abs(x) <= tolerance; }
  bool equal(const std::complex<double>& a, const std::complex<double>& b) const {
    return std::abs(a - b) <= tolerance;
  }
  static std::complex<double> from(const Scalar& s) { return s.to_complex(); }
  static Scalar to_scalar(const std::complex<double>& x) { return Scalar(x); }
};

template <typename F>
struct Dense {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<F> a;

  F& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

template <typename F>
Dense<F> to_dense(const Matrix& m, const Field<F>& field) {
  Dense<F> d{m.rows(), m.cols(), {}};
  d.a.reserve(m.rows() * m.cols());
  for (const auto& s : m.entries()) d.a.push_back(field.from(s));
  return d;
}

template <typename F>
Matrix to_matrix(const Dense<F>& d, Domain domain) {
  std::vector<Scalar> e;
  e.reserve(d.a.size());
  for (const auto& x : d.a) e.push_back(Field<F>::to_scalar(x));
  return Matrix(d.rows, d.cols, std::move(e), domain);
}

// In-place reduced row echelon form. Exact fields pivot on the first nonzero
// entry; complex pivots on the largest magnitude and treats entries at or
// below the tolerance as zero. Returns the pivot columns.
template <typename F>
std::vector<std::size_t> row_reduce(Dense<F>& m, const Field<F>& field, bool reduced = true) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = m.rows;
    if constexpr (std::is_same_v<F, std::complex<double>>) {
      double best = field.tolerance;
      for (std::size_t i = r; i < m.rows; ++i) {
        const double mag = std::abs(m(i, c));
        if (mag > best) {
          best = mag;
          p = i;
        }
      }
    } else {
      for (std::size_t i = r; i < m.rows; ++i) {
        if (!field.zero_test(m(i, c))) {
          p = i;
          break;
        }
      }
    }
    if (p == m.rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
    }
    const F inv = field.one() / m(r, c);
    for (std::size_t j = c; j < m.cols; ++j) m(r, j) = m(r, j) * inv;
    const std::size_t first = reduced ? 0 : r + 1;
    for (std::size_t i = first; i < m.rows; ++i) {
      if (i == r || field.zero_test(m(i, c))) continue;
      const F factor = m(i, c);
      for (std::size_t j = c; j < m.cols; ++j) m(i, j) = m(i, j) - factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <typename F>
std::size_t rank_of(Dense<F> m, const Field<F>& field) {
  return row_reduce(m, field, /*reduced=*/false).size();
}

// Basis of {x : M x = 0}, one vector per free column.
template <typename F>
std::vector<std::vector<F>> right_null_space(Dense<F> m, const Field<F>& field) {
  const auto pivots = row_reduce(m, field);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(m.cols, field.zero());
    v[free] = field.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solves A x = b for square A; nullopt if A is singular.
template <typename F>
std::optional<std::vector<F>> solve_square(const Dense<F>& a, const std::vector<F>& b,
                                           const Field<F>& field) {
  const std::size_t n = a.rows;
  Dense<F> aug{n, n + 1, {}};
  aug.a.reserve(n * (n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.a.push_back(a(i, j));
    aug.a.push_back(b[i]);
  }
  const auto pivots = row_reduce(aug, field);
  if (pivots.size() != n || (n > 0 && pivots.back() != n - 1)) return std::nullopt;
  std::vector<F> x;
  x.reserve(n);
  for (std::size_t i = 0; i < n; ++i) x.push_back(aug(i, n));
  return x;
}

}  // namespace rigidity::detail
