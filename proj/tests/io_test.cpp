#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "rigidity/error.hpp"
#include "rigidity/io.hpp"

using namespace rigidity;

TEST(MatrixText, SignFormat) {
  EXPECT_EQ(format_sign_matrix(sylvester(2)), "4 4 sign\n++++\n+-+-\n++--\n+--+\n");
  EXPECT_EQ(parse_matrix("2 2 sign\n++\n+-\n"), sylvester_matrix(1));
}

TEST(MatrixText, RoundTripAllKinds) {
  std::mt19937_64 rng(9);
  const std::vector<Matrix> cases{
      oracle::random_integer(rng, 3, 5),
      oracle::random_rational(rng, 4, 2),
      dft(8),
      dft(16),
      dft_approx(4),
  };
  for (const auto& m : cases) {
    const auto back = parse_matrix(format_matrix(m));
    EXPECT_EQ(back, m);
    EXPECT_EQ(back.domain().kind, m.domain().kind);
    EXPECT_EQ(format_matrix(back), format_matrix(m));
  }
}

TEST(MatrixText, RejectsMalformed) {
  EXPECT_THROW(parse_matrix(""), Error);
  EXPECT_THROW(parse_matrix("2 2 int\n1 2\n3\n"), Error);
  EXPECT_THROW(parse_matrix("1 2 int\n1 1/2\n"), Error);
  EXPECT_THROW(parse_matrix("1 1 cyclo6\n1\n"), Error);
  EXPECT_THROW(parse_matrix("1 1 cyclo4\nw8:0,1,0,0\n"), Error);
  EXPECT_THROW(parse_matrix("2 2 sign\n++\n+*\n"), Error);
  EXPECT_THROW(parse_matrix("1 1 float\n1\n"), Error);
  EXPECT_THROW(parse_matrix("1 1 int\n1 2\n"), Error);
}

TEST(MatrixText, KindKeywords) {
  EXPECT_EQ(kind_keyword(dft(8).domain()), "cyclo8");
  EXPECT_EQ(kind_keyword(sylvester_matrix(1).domain()), "int");
}

TEST(Digest, StableAndSensitive) {
  EXPECT_EQ(matrix_digest(sylvester_matrix(3)), matrix_digest(oracle::sylvester(3)));
  EXPECT_NE(matrix_digest(sylvester_matrix(3)), matrix_digest(-sylvester_matrix(3)));
  EXPECT_EQ(matrix_digest(sylvester_matrix(1)).size(), 64u);
}

TEST(PerturbationJson, RoundTrip) {
  const Perturbation p({{2, 1, Scalar::rational(-3, 4)}, {0, 0, Scalar(5)},
                        {1, 1, Scalar(Cyclotomic::root_power(8, 3))}});
  const auto back = parse_perturbation(format_perturbation(p));
  ASSERT_EQ(back.size(), 3u);
  for (std::size_t t = 0; t < 3; ++t) {
    EXPECT_EQ(back.changes()[t].row, p.changes()[t].row);
    EXPECT_EQ(back.changes()[t].col, p.changes()[t].col);
    EXPECT_EQ(back.changes()[t].value, p.changes()[t].value);
  }
  EXPECT_EQ(parse_perturbation(R"([{"row": 0, "col": 1, "value": -2}])").changes()[0].value, Scalar(-2));
  EXPECT_THROW(parse_perturbation(R"({"row": 0})"), Error);
  EXPECT_THROW(parse_perturbation(R"([{"row": -1, "col": 0, "value": "1"}])"), Error);
  EXPECT_THROW(parse_perturbation("[1,"), Error);
}
