#include <benchmark/benchmark.h>

#include "numsg/apery_hilbert.hpp"
#include "numsg/construction.hpp"
#include "numsg/duplication.hpp"
#include "numsg/ideals.hpp"

using namespace numsg;

static void BM_ConstructAsd(benchmark::State& state) {
  const int ell = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(construct_asd(ell));
}
BENCHMARK(BM_ConstructAsd)->Arg(4)->Arg(8)->Arg(15)->Unit(benchmark::kMillisecond);

static void BM_HilbertByOrders(benchmark::State& state) {
  const auto s = construct_asd(static_cast<int>(state.range(0))).semigroup;
  const int h = static_cast<int>(state.range(0)) + 6;
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_by_orders(s, h));
}
BENCHMARK(BM_HilbertByOrders)->Arg(4)->Arg(8)->Arg(15)->Unit(benchmark::kMillisecond);

static void BM_HilbertBySumsets(benchmark::State& state) {
  const auto s = construct_asd(static_cast<int>(state.range(0))).semigroup;
  const int h = static_cast<int>(state.range(0)) + 6;
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_by_sumsets(s, h));
}
BENCHMARK(BM_HilbertBySumsets)->Arg(4)->Arg(8)->Arg(15)->Unit(benchmark::kMillisecond);

static void BM_AlmostSymmetry(benchmark::State& state) {
  const auto s = construct_asd(static_cast<int>(state.range(0))).semigroup;
  const auto method = state.range(1) ? AlmostSymmetryMethod::Nari : AlmostSymmetryMethod::Definition;
  for (auto _ : state) benchmark::DoNotOptimize(is_almost_symmetric(s, method));
}
BENCHMARK(BM_AlmostSymmetry)->Args({8, 0})->Args({8, 1})->Args({15, 0})->Args({15, 1});

static void BM_CanonicalDuplication(benchmark::State& state) {
  const auto s = construct_asd(static_cast<int>(state.range(0))).semigroup;
  const auto e = shift(standard_canonical_ideal(s), s.frobenius() + 1);
  const Int b = smallest_odd_element(s);
  for (auto _ : state) benchmark::DoNotOptimize(numerical_duplication(s, e, b));
}
BENCHMARK(BM_CanonicalDuplication)->Arg(4)->Arg(8)->Arg(15)->Unit(benchmark::kMillisecond);

static void BM_Witness(benchmark::State& state) {
  const int level = static_cast<int>(state.range(0));
  const Int drop = state.range(1);
  for (auto _ : state) benchmark::DoNotOptimize(gorenstein_witness(level, drop));
}
BENCHMARK(BM_Witness)->Args({2, 1})->Args({4, 3})->Args({5, 2})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
