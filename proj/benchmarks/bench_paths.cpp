#include <benchmark/benchmark.h>

#include <chowcount/binomial.hpp>
#include <chowcount/chow.hpp>
#include <chowcount/invariant.hpp>
#include <chowcount/series.hpp>

using namespace chowcount;

static void BM_ClosedForm(benchmark::State &state) {
  const auto n = state.range(0);
  const auto d = state.range(1);
  for (auto _ : state) {
    auto v = chow_euler_closed(ChowParams(n / 2, n, d));
    benchmark::DoNotOptimize(v.chi);
  }
}

// Fresh memo per iteration so the cost of filling the table is measured.
static void BM_RecursionColdMemo(benchmark::State &state) {
  const auto n = state.range(0);
  const auto d = state.range(1);
  for (auto _ : state) {
    RecursionMemo memo;
    auto v = memo.lookup(ChowParams(n / 2, n, d));
    benchmark::DoNotOptimize(v);
  }
}

static void BM_RecursionWarmMemo(benchmark::State &state) {
  const auto n = state.range(0);
  const auto d = state.range(1);
  RecursionMemo memo;
  memo.lookup(ChowParams(n / 2, n, d));
  for (auto _ : state) {
    auto v = memo.lookup(ChowParams(n / 2, n, d));
    benchmark::DoNotOptimize(v);
  }
}

static void BM_FunctionalSeries(benchmark::State &state) {
  const auto n = state.range(0);
  const auto order = state.range(1);
  for (auto _ : state) {
    auto s = chow_series(n / 2, n, order, SeriesMethod::functional);
    benchmark::DoNotOptimize(s);
  }
}

static void BM_SeriesMul(benchmark::State &state) {
  const auto order = state.range(0);
  const auto a = series_geom_pow(17, order);
  const auto b = series_geom_pow(23, order);
  for (auto _ : state) {
    auto c = series_mul(a, b);
    benchmark::DoNotOptimize(c);
  }
  state.SetComplexityN(order);
}

static void BM_QuaternionicP0Oracle(benchmark::State &state) {
  for (auto _ : state) {
    auto v = quaternionic_p0_oracle(state.range(0), state.range(1));
    benchmark::DoNotOptimize(v);
  }
}

BENCHMARK(BM_ClosedForm)->Args({8, 12})->Args({16, 64})->Args({32, 256});
BENCHMARK(BM_RecursionColdMemo)->Args({8, 12})->Args({16, 64})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_RecursionWarmMemo)->Args({8, 12})->Args({16, 64});
BENCHMARK(BM_FunctionalSeries)->Args({8, 12})->Args({16, 64})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SeriesMul)->RangeMultiplier(2)->Range(16, 256)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_QuaternionicP0Oracle)->Args({6, 10})->Args({32, 200});

BENCHMARK_MAIN();
