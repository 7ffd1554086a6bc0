#include <benchmark/benchmark.h>

#include "hkpos/hilbert_square.hpp"
#include "hkpos/rr_derivation.hpp"
#include "hkpos/threshold.hpp"

using namespace hkpos;

static void BM_IsolateCubic(benchmark::State& state) {
  const UniPoly p({-10560, -31680, -35640, 6930});
  for (auto _ : state) benchmark::DoNotOptimize(isolate_real_roots(p));
}
BENCHMARK(BM_IsolateCubic);

static void BM_IsolateRationalProduct(benchmark::State& state) {
  UniPoly p({1});
  for (int i = 0; i < state.range(0); ++i) p = p * UniPoly({Rational(-(2 * i + 1), i + 2), Rational(1)});
  for (auto _ : state) benchmark::DoNotOptimize(isolate_real_roots(p));
}
BENCHMARK(BM_IsolateRationalProduct)->Arg(3)->Arg(6)->Arg(10);

static void BM_Decimal(benchmark::State& state) {
  const auto C = *constant_C(preset(Preset::K3_3));
  for (auto _ : state) benchmark::DoNotOptimize(C.decimal(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Decimal)->Arg(6)->Arg(30);

static void BM_SeriesInverse(benchmark::State& state) {
  const GradedSeries c = GradedSeries::total_chern(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(series_inverse(c));
}
BENCHMARK(BM_SeriesInverse)->Arg(6)->Arg(12);

static void BM_SqrtTodd(benchmark::State& state) {
  const GradedSeries td = todd6();
  for (auto _ : state) benchmark::DoNotOptimize(series_sqrt(td));
}
BENCHMARK(BM_SqrtTodd);

static void BM_ZPairing(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(square::z_pairing());
}
BENCHMARK(BM_ZPairing);

static void BM_ThresholdK3_3(benchmark::State& state) {
  const HKFamily f = preset(Preset::K3_3);
  for (auto _ : state) benchmark::DoNotOptimize(compute_threshold(f));
}
BENCHMARK(BM_ThresholdK3_3);

static void BM_DeriveConstants(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(derive_constants());
}
BENCHMARK(BM_DeriveConstants);

BENCHMARK_MAIN();
