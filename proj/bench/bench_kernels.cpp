// This file is part of edcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
//
// Serial reference kernels vs. their OpenMP counterparts on a prime large
// enough that the x-stripe loops dominate.

#include <benchmark/benchmark.h>

#include "edcount/analysis.hpp"
#include "edcount/enumerate.hpp"

namespace {

constexpr edcount::u64 kPrime = 1'000'003;
constexpr edcount::u64 kCoeff = 5;

void BM_EdwardsCountSerial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        edcount::count_edwards_affine_serial(kPrime, kCoeff));
}
BENCHMARK(BM_EdwardsCountSerial)->Unit(benchmark::kMillisecond);

void BM_EdwardsCountParallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(edcount::count_edwards_affine(kPrime, kCoeff));
}
BENCHMARK(BM_EdwardsCountParallel)->Unit(benchmark::kMillisecond);

void BM_MontgomeryCountSerial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        edcount::count_montgomery_affine_serial(kPrime, kCoeff));
}
BENCHMARK(BM_MontgomeryCountSerial)->Unit(benchmark::kMillisecond);

void BM_MontgomeryCountParallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(edcount::count_montgomery_affine(kPrime, kCoeff));
}
BENCHMARK(BM_MontgomeryCountParallel)->Unit(benchmark::kMillisecond);

void BM_ProductCountSerial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        edcount::count_product_curve_serial(kPrime, kCoeff));
}
BENCHMARK(BM_ProductCountSerial)->Unit(benchmark::kMillisecond);

void BM_ProductCountParallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(edcount::count_product_curve(kPrime, kCoeff));
}
BENCHMARK(BM_ProductCountParallel)->Unit(benchmark::kMillisecond);

// Whole-grid classification; cells run concurrently inside scan().
void BM_ScanGrid(benchmark::State& state) {
  edcount::ScanOptions options;
  options.p_min = 3;
  options.p_max = static_cast<edcount::u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(edcount::scan(options));
}
BENCHMARK(BM_ScanGrid)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
