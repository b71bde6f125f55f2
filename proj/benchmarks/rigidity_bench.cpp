#include <benchmark/benchmark.h>

#include "rigidity/certificate.hpp"
#include "rigidity/cyclotomic.hpp"
#include "rigidity/rank.hpp"
#include "rigidity/search.hpp"

using namespace rigidity;

static void BM_ExactRankSylvester(benchmark::State& state) {
  const Matrix m = sylvester_matrix(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exact_rank(m));
  state.SetLabel("n=" + std::to_string(m.rows()));
}
BENCHMARK(BM_ExactRankSylvester)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_ExactRankDft(benchmark::State& state) {
  const Matrix m = dft(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exact_rank(m));
}
BENCHMARK(BM_ExactRankDft)->RangeMultiplier(2)->Range(8, 32)->Unit(benchmark::kMillisecond);

static void BM_PartitionCertificate(benchmark::State& state) {
  const Matrix m = sylvester_matrix(6);
  const auto r = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(full_rank_partition_certificate(m, r, ColumnPermutation::kIdentity));
}
BENCHMARK(BM_PartitionCertificate)->RangeMultiplier(4)->Range(1, 16)->Unit(benchmark::kMillisecond);

static void BM_CyclotomicMul(benchmark::State& state) {
  const auto order = static_cast<unsigned>(state.range(0));
  std::vector<mpq_class> a(order / 2), b(order / 2);
  for (unsigned i = 0; i < order / 2; ++i) {
    a[i] = mpq_class(static_cast<long>(i) + 1, 3);
    b[i] = mpq_class(2 - static_cast<long>(i), 5);
  }
  const Cyclotomic x(order, a), y(order, b);
  for (auto _ : state) benchmark::DoNotOptimize(cyclo_mul(x, y));
}
BENCHMARK(BM_CyclotomicMul)->RangeMultiplier(4)->Range(4, 64);

static void BM_Refute(benchmark::State& state) {
  const Matrix m = sylvester_matrix(4);
  const auto cert = full_rank_partition_certificate(m, 2, ColumnPermutation::kIdentity);
  std::vector<Change> ch;
  for (std::size_t j = 0; j < 31; ++j) ch.push_back({j / 2, (5 * j) % 16, Scalar(0)});
  const Perturbation p(ch);
  for (auto _ : state) benchmark::DoNotOptimize(refute_perturbation(m, p, 2, cert));
}
BENCHMARK(BM_Refute)->Unit(benchmark::kMillisecond);

static void BM_ExactRigiditySylvester4(benchmark::State& state) {
  const Matrix m = sylvester_matrix(2);
  for (auto _ : state) benchmark::DoNotOptimize(exact_rigidity_rank1(m, 8));
}
BENCHMARK(BM_ExactRigiditySylvester4)->Unit(benchmark::kMillisecond);

static void BM_UpperBoundSearch(benchmark::State& state) {
  const Matrix m = sylvester_matrix(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(upper_bound_search(m, 2, {.budget = 8}));
}
BENCHMARK(BM_UpperBoundSearch)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
