#include <benchmark/benchmark.h>

#include "degen/bell.hpp"
#include "degen/numbers.hpp"
#include "degen/series.hpp"
#include "degen/weyl.hpp"

using namespace degen;

static void BM_DegenerateProduct(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(degenerate_product(n, 3, 2));
}
BENCHMARK(BM_DegenerateProduct)->DenseRange(2, 8, 2);

static void BM_DifferentialExtract(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(differential_extract(n, 3, 2, n));
}
BENCHMARK(BM_DifferentialExtract)->DenseRange(2, 8, 2);

static void BM_StirlingRsRow(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(stirling_rs_row(n, 3, 2));
}
BENCHMARK(BM_StirlingRsRow)->DenseRange(2, 8, 2);

static void BM_DobinskiEval(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const Rational tol(1, 1000000000000L);
  for (auto _ : state) benchmark::DoNotOptimize(dobinski_eval(n, 3, 2, Rational(1), Rational(1, 2), tol));
}
BENCHMARK(BM_DobinskiEval)->DenseRange(1, 5, 2);

static void BM_SeriesExp(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const auto u = (degenerate_exp_series(XPoly(LambdaPoly(1L)), order) -
                  TruncatedSeries::constant(order, XPoly(LambdaPoly(1L))))
                     .scaled(x_var());
  for (auto _ : state) benchmark::DoNotOptimize(series_exp(u));
}
BENCHMARK(BM_SeriesExp)->Arg(6)->Arg(10)->Arg(14);

BENCHMARK_MAIN();
