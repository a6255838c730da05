// Copyright 2026 The liepowers Authors.
// Licensed under the Apache License, Version 2.0 (see LICENSE).

#include <random>

#include <benchmark/benchmark.h>

#include "liepowers/decompose.hpp"

namespace {

using namespace liepowers;

Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint32_t p, std::uint32_t seed) {
  std::mt19937 rng(seed);
  PrimeField f(p);
  Matrix m(rows, cols, f);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, std::uint8_t(rng() % p));
  return m;
}

void BM_Rref(benchmark::State& state) {
  const auto n = std::size_t(state.range(0));
  const auto p = std::uint32_t(state.range(1));
  Matrix m = random_matrix(n, n, p, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->ArgsProduct({{128, 256, 512}, {2, 3}})->Unit(benchmark::kMillisecond);

void BM_PbwFiltration(benchmark::State& state) {
  const int n = int(state.range(0)), r = int(state.range(1));
  for (auto _ : state) {
    PbwBasis pbw(n, r, PrimeField(2));
    benchmark::DoNotOptimize(filtration(pbw));
  }
}
BENCHMARK(BM_PbwFiltration)->Args({2, 8})->Args({2, 10})->Args({3, 6})->Unit(benchmark::kMillisecond);

void BM_DescentMultiply(benchmark::State& state) {
  const int r = int(state.range(0));
  FpRing ring{3};
  std::mt19937 rng(5);
  DescentElement a(r, ring), b(r, ring);
  for (std::uint32_t m = 0; m < a.size(); ++m) {
    a.set(m, ring.from_int(long(rng() % 3)));
    b.set(m, ring.from_int(long(rng() % 3)));
  }
  benchmark::DoNotOptimize(a * b);  // fills the structure-constant cache
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_DescentMultiply)->DenseRange(4, 8, 2)->Unit(benchmark::kMicrosecond);

void BM_LiftIdempotents(benchmark::State& state) {
  const int r = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lift_idempotents(r, 2));
}
BENCHMARK(BM_LiftIdempotents)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_SplitTensorPower(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(split_tensor_power(2, int(state.range(0)), 2));
}
BENCHMARK(BM_SplitTensorPower)->DenseRange(4, 6, 2)->Unit(benchmark::kMillisecond);

void BM_ConstructBFamily(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(construct_B_family(2, 2, 3, int(state.range(0))));
}
BENCHMARK(BM_ConstructBFamily)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
