#include "rigidity/rank.hpp"

#include <utility>
#include <vector>

#include "field.hpp"

namespace rigidity {

namespace {

std::size_t bareiss_rank(const Matrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<mpz_class> a;
  a.reserve(rows * cols);
  for (const auto& s : m.entries()) a.push_back(s.as_integer());
  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * cols + j]; };

  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && sgn(at(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(p, j), at(rank, j));
    }
    const mpz_class& pivot = at(rank, c);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = pivot * at(i, j) - at(i, c) * at(rank, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = std::move(v);
      }
      at(i, c) = 0;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t exact_rank(const Matrix& m) {
  switch (m.domain().kind) {
    case ScalarKind::kInteger:
      return bareiss_rank(m);
    case ScalarKind::kRational: {
      const detail::Field<mpq_class> field;
      return detail::rank_of(detail::to_dense(m, field), field);
    }
    case ScalarKind::kCyclotomic: {
      const detail::Field<Cyclotomic> field{m.domain().order};
      return detail::rank_of(detail::to_dense(m, field), field);
    }
    case ScalarKind::kApprox:
      break;
  }
  throw Error(ErrorCode::kApproximateInput,
              "exact_rank needs exact entries; use numerical_rank for approximate matrices");
}

std::size_t numerical_rank(const Matrix& m, double tolerance) {
  if (!(tolerance > 0.0)) throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  const detail::Field<std::complex<double>> field{tolerance};
  return detail::rank_of(detail::to_dense(m, field), field);
}

}  // namespace rigidity
