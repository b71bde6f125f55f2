#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "rigidity/error.hpp"
#include "rigidity/matrix.hpp"

using namespace rigidity;

namespace {

// Exact S S^T computed entry by entry.
bool product_is_scaled_identity(const Matrix& s) {
  const std::size_t n = s.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      mpz_class dot = 0;
      for (std::size_t t = 0; t < n; ++t) dot += s(i, t).as_integer() * s(j, t).as_integer();
      if (dot != (i == j ? mpz_class(n) : mpz_class(0))) return false;
    }
  }
  return true;
}

}  // namespace

TEST(Sylvester, GoldenSmallCases) {
  EXPECT_EQ(sylvester_matrix(0), Matrix::from_integers(1, 1, {1}));
  EXPECT_EQ(sylvester_matrix(1), Matrix::from_integers(2, 2, {1, 1, 1, -1}));
  EXPECT_EQ(sylvester_matrix(2), Matrix::from_integers(4, 4, {1, 1, 1, 1,  //
                                                              1, -1, 1, -1,
                                                              1, 1, -1, -1,
                                                              1, -1, -1, 1}));
}

TEST(Sylvester, MatchesClosedForm) {
  for (unsigned k = 0; k <= 7; ++k) EXPECT_EQ(sylvester_matrix(k), oracle::sylvester(k)) << k;
}

TEST(Sylvester, SizeLimit) { EXPECT_THROW(sylvester(14), Error); }

TEST(Kronecker, Examples) {
  const auto s2 = sylvester_matrix(1);
  EXPECT_EQ(kronecker(s2, s2), sylvester_matrix(2));
  const auto a = Matrix::from_integers(2, 3, {1, 2, 3, 4, 5, 6});
  EXPECT_EQ(kronecker(a, Matrix::from_integers(1, 1, {1})), a);
  EXPECT_EQ(kronecker(Matrix::from_integers(1, 1, {2}), Matrix::from_integers(2, 2, {0, 1, 1, 0})),
            Matrix::from_integers(2, 2, {0, 2, 2, 0}));
}

TEST(Kronecker, BlockConvention) {
  // Block (k, l) of A (x) B is b_kl A.
  const auto a = Matrix::from_integers(2, 2, {1, 2, 3, 4});
  const auto b = Matrix::from_integers(2, 2, {5, 6, 7, 8});
  const auto k = kronecker(a, b);
  for (std::size_t bk = 0; bk < 2; ++bk)
    for (std::size_t bl = 0; bl < 2; ++bl)
      EXPECT_EQ(block(k, bk, bl, 2), a.scaled(b(bk, bl)));
}

TEST(Hadamard, SylvesterIsHadamard) {
  for (unsigned k = 0; k <= 6; ++k) {
    const auto s = sylvester_matrix(k);
    EXPECT_TRUE(product_is_scaled_identity(s));
    EXPECT_TRUE(is_hadamard(s));
  }
}

TEST(Hadamard, Negatives) {
  auto e = oracle::sylvester(2);
  std::vector<Scalar> v(e.entries().begin(), e.entries().end());
  v[0] = Scalar(-1);
  const Matrix flipped(4, 4, v);
  EXPECT_FALSE(product_is_scaled_identity(flipped));
  EXPECT_FALSE(is_hadamard(flipped));
  EXPECT_FALSE(is_hadamard(Matrix::identity(2)));
  EXPECT_FALSE(is_hadamard(Matrix::from_integers(1, 2, {1, 1})));
}

TEST(Dft, SmallCases) {
  EXPECT_EQ(dft(2), Matrix::from_integers(2, 2, {1, 1, 1, -1}));
  const auto f = dft(4);
  EXPECT_EQ(f(2, 2), Scalar(1));  // w^4
  EXPECT_EQ(f(1, 1), Scalar(Cyclotomic::root_power(4, 1)));
  EXPECT_EQ(f(1, 3), -Scalar(Cyclotomic::root_power(4, 1)));
}

TEST(Dft, MatchesExpansion) {
  for (std::size_t n : {2, 4, 8, 16}) {
    const auto f = dft(n);
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t k = 1; k <= n; ++k)
        ASSERT_EQ(f(j - 1, k - 1), Scalar(oracle::dft_entry(n, j, k))) << n << " " << j << " " << k;
  }
  EXPECT_THROW(dft(6), Error);
}

TEST(Dft, ApproxAgreesWithExact) {
  const auto e = dft(8), a = dft_approx(8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) EXPECT_TRUE(approx_equal(e(i, j), a(i, j), 1e-12));
}

TEST(Permutations, EvensFirst) {
  const auto m = Matrix::from_integers(1, 4, {1, 2, 3, 4});
  EXPECT_EQ(evens_first(m), Matrix::from_integers(1, 4, {1, 3, 2, 4}));
  const auto two = Matrix::from_integers(1, 2, {1, 2});
  EXPECT_EQ(evens_first(two), two);
}

TEST(Permutations, BitReversal) {
  EXPECT_EQ(bit_reversal_columns(Matrix::from_integers(1, 4, {1, 2, 3, 4})),
            Matrix::from_integers(1, 4, {1, 3, 2, 4}));
  EXPECT_EQ(bit_reversal_columns(Matrix::from_integers(1, 8, {1, 2, 3, 4, 5, 6, 7, 8})),
            Matrix::from_integers(1, 8, {1, 5, 3, 7, 2, 6, 4, 8}));
  for (std::size_t n = 1; n <= 256; n *= 2) {
    EXPECT_EQ(bit_reversal_order(n), oracle::recursive_evens_first(n)) << n;
    const auto order = bit_reversal_order(n);
    EXPECT_EQ(invert(order), order);  // an involution
  }
}

TEST(Permutations, InverseRoundTrip) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    ColumnOrder order(7);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const auto m = oracle::random_integer(rng, 3, 7);
    EXPECT_EQ(permute_columns(permute_columns(m, order), invert(order)), m);
  }
}

TEST(Blocks, SylvesterBlocksAreSignedSylvester) {
  EXPECT_EQ(block(sylvester_matrix(2), 0, 0, 2), sylvester_matrix(1));
  EXPECT_EQ(block(sylvester_matrix(2), 1, 1, 2), -sylvester_matrix(1));
  const auto m = sylvester_matrix(3);
  EXPECT_EQ(block(m, 0, 0, 8), m);
  EXPECT_THROW(block(m, 2, 0, 4), Error);
  EXPECT_THROW(block(m, 0, 0, 3), Error);
}

TEST(Perturbations, ApplyAndWeight) {
  const auto s2 = sylvester_matrix(1);
  EXPECT_EQ(apply_perturbation(s2, Perturbation{}), s2);
  const Perturbation p({{1, 1, Scalar(1)}});
  const auto ones = Matrix::from_integers(2, 2, {1, 1, 1, 1});
  EXPECT_EQ(apply_perturbation(s2, p), ones);
  EXPECT_EQ(weight_diff(s2, s2), 0u);
  EXPECT_EQ(weight_diff(s2, ones), 1u);
  EXPECT_EQ(weight_diff(sylvester_matrix(2), -sylvester_matrix(2)), 16u);
  // A change to the existing value does not count.
  EXPECT_EQ(effective_weight(s2, Perturbation({{0, 0, Scalar(1)}, {1, 1, Scalar(1)}})), 1u);
  EXPECT_THROW(Perturbation({{0, 0, Scalar(1)}, {0, 0, Scalar(2)}}), Error);
  EXPECT_THROW(apply_perturbation(s2, Perturbation({{2, 0, Scalar(1)}})), Error);
}

TEST(Perturbations, ApplyPromotesDomain) {
  const auto m = apply_perturbation(sylvester_matrix(1), Perturbation({{0, 1, Scalar::rational(1, 3)}}));
  EXPECT_EQ(m.domain().kind, ScalarKind::kRational);
  EXPECT_EQ(m(0, 1), Scalar::rational(1, 3));
}

TEST(SignMatrix, RoundTrip) {
  const auto s = sylvester(5);
  EXPECT_EQ(SignMatrix::from_matrix(s.to_matrix()), s);
  EXPECT_THROW(SignMatrix::from_matrix(Matrix::from_integers(2, 2, {1, 0, 1, 1})), Error);
  EXPECT_THROW(SignMatrix(3, {0, 0}), Error);
}

TEST(MatrixBasics, MixedFieldsRejected) {
  std::vector<Scalar> v{Scalar(Cyclotomic::root_power(4, 1)), Scalar(Cyclotomic::root_power(8, 1))};
  EXPECT_THROW(Matrix(1, 2, v), Error);
  EXPECT_THROW(Matrix(0, 2, {}), Error);
  EXPECT_THROW(Matrix::from_integers(2, 2, {1, 2, 3}), Error);
}
