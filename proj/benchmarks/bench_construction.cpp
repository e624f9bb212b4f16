#include <benchmark/benchmark.h>

#include "filebasis/construction.hpp"

using namespace filebasis;

static void BM_ValidateParams(benchmark::State& state) {
  ConstructionParams const p;
  for (auto _ : state) {
    benchmark::DoNotOptimize(validate_params(p));
  }
}
BENCHMARK(BM_ValidateParams);

static void BM_FirstRelatorTheoremScale(benchmark::State& state) {
  ConstructionParams const p;
  Budget const             b;
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate(p, 1, b));
  }
}
BENCHMARK(BM_FirstRelatorTheoremScale);
