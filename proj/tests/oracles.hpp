// Reference implementations used only by the tests. Each one is written
// independently of the library routine it checks.
#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "rigidity/cyclotomic.hpp"
#include "rigidity/matrix.hpp"

namespace oracle {

// S(2^k)[i][j] = (-1)^popcount(i & j).
inline int sylvester_entry(std::size_t i, std::size_t j) {
  return std::popcount(i & j) % 2 == 0 ? 1 : -1;
}

inline rigidity::Matrix sylvester(unsigned k) {
  const std::size_t n = std::size_t{1} << k;
  std::vector<long> v;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) v.push_back(sylvester_entry(i, j));
  return rigidity::Matrix::from_integers(n, n, v);
}

// f_jk = w^((j-1)(k-1)) with 1-based j, k, expanded as coefficient vectors.
inline rigidity::Cyclotomic dft_entry(std::size_t n, std::size_t j1, std::size_t k1) {
  const std::size_t e = ((j1 - 1) * (k1 - 1)) % n;
  const std::size_t h = n / 2;
  std::vector<mpq_class> c(h == 0 ? 1 : h, 0);
  if (n == 1) {
    c[0] = 1;
  } else if (e < h) {
    c[e] = 1;
  } else {
    c[e - h] = -1;
  }
  return rigidity::Cyclotomic(static_cast<unsigned>(std::max<std::size_t>(n, 2)), c);
}

// Rank by growing a row basis in echelon form, one row at a time.
inline std::size_t rank(const std::vector<std::vector<mpq_class>>& rows) {
  std::vector<std::vector<mpq_class>> basis;
  std::vector<std::size_t> lead;
  for (auto v : rows) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (sgn(v[lead[b]]) == 0) continue;
      const mpq_class f = v[lead[b]] / basis[b][lead[b]];
      for (std::size_t t = 0; t < v.size(); ++t) v[t] -= f * basis[b][t];
    }
    std::size_t p = 0;
    while (p < v.size() && sgn(v[p]) == 0) ++p;
    if (p == v.size()) continue;
    basis.push_back(v);
    lead.push_back(p);
  }
  return basis.size();
}

inline std::vector<std::vector<mpq_class>> rows_of(const rigidity::Matrix& m) {
  std::vector<std::vector<mpq_class>> r(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = m(i, j).to_rational();
  return r;
}

inline std::size_t rank(const rigidity::Matrix& m) { return rank(rows_of(m)); }

// Column t of the reordered matrix, built by applying "evens first" to every
// contiguous segment, halving the segment each round.
inline std::vector<std::size_t> recursive_evens_first(std::size_t n) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  for (std::size_t seg = n; seg >= 2; seg /= 2) {
    std::vector<std::size_t> next;
    for (std::size_t s = 0; s < n; s += seg) {
      for (std::size_t t = 0; t < seg; t += 2) next.push_back(order[s + t]);
      for (std::size_t t = 1; t < seg; t += 2) next.push_back(order[s + t]);
    }
    order = next;
  }
  return order;
}

inline rigidity::Matrix random_rational(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                        long span = 5) {
  std::uniform_int_distribution<long> num(-span, span), den(1, 4);
  std::vector<rigidity::Scalar> e;
  for (std::size_t t = 0; t < rows * cols; ++t) e.push_back(rigidity::Scalar::rational(num(rng), den(rng)));
  return rigidity::Matrix(rows, cols, std::move(e));
}

inline rigidity::Matrix random_integer(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                       long span = 3) {
  std::uniform_int_distribution<long> d(-span, span);
  std::vector<long> v(rows * cols);
  for (auto& x : v) x = d(rng);
  return rigidity::Matrix::from_integers(rows, cols, v);
}

// rows x cols matrix of rank <= k: product of random integer factors.
inline rigidity::Matrix random_low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                        std::size_t k) {
  return random_integer(rng, rows, k) * random_integer(rng, k, cols);
}

inline rigidity::Matrix random_full_rank(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    auto m = random_rational(rng, n, n);
    if (rank(m) == n) return m;
  }
}

}  // namespace oracle
