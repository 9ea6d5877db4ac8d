#include <benchmark/benchmark.h>

#include <random>

#include "motivic/motives.hpp"

using namespace motivic;

static void BM_SchurMultiplyGenerator(benchmark::State& state) {
  // c_1^20 * c_7 in the 3 x 24 box over F_3, cold memo tables each iteration.
  for (auto _ : state) {
    const SchurRing R(PrimeField(3), {3, 24});
    const auto x = R.power(R.sigma(Partition({1})), static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(R.multiply(x, R.sigma(Partition({7}))));
  }
}
BENCHMARK(BM_SchurMultiplyGenerator)->Arg(6)->Arg(13)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_EchelonInsert(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const PrimeField f(3);
  std::mt19937_64 rng(1);
  std::vector<std::vector<std::int64_t>> rows(dim, std::vector<std::int64_t>(dim));
  for (auto& row : rows)
    for (auto& x : row) x = static_cast<std::int64_t>(rng() % 3);
  std::vector<FpVector> vecs;
  for (const auto& row : rows) vecs.push_back(FpVector::from_dense(f, row));
  for (auto _ : state) {
    EchelonSpan span(f, dim);
    for (const auto& v : vecs) span.insert(v);
    benchmark::DoNotOptimize(span.rank());
  }
}
BENCHMARK(BM_EchelonInsert)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_GradedSpans(benchmark::State& state) {
  const auto spec = GeometrySpec::make(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
                                       static_cast<int>(state.range(2)));
  for (auto _ : state) {
    const ChowProduct R(spec);
    benchmark::DoNotOptimize(graded_spans(R, spec.d + spec.shift_range / 2 + 1).rank(spec.d));
  }
}
BENCHMARK(BM_GradedSpans)->Args({3, 2, 1})->Args({2, 3, 2})->Args({2, 4, 2})->Unit(benchmark::kMillisecond);

static void BM_DecomposeExample(benchmark::State& state) {
  const auto spec = GeometrySpec::make(3, 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(spec).residual.total());
}
BENCHMARK(BM_DecomposeExample)->Unit(benchmark::kMillisecond)->Iterations(3);
BENCHMARK_MAIN();
