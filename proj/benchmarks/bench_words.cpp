#include <benchmark/benchmark.h>

#include "filebasis/words.hpp"

using namespace filebasis;

static void BM_DeglexEnumerate(benchmark::State& state) {
  Alphabet const alphabet{static_cast<int>(state.range(0))};
  for (auto _ : state) {
    PowerWord w;
    for (int k = 0; k < 10000; ++k) {
      w = deglex_successor(w, alphabet);
    }
    benchmark::DoNotOptimize(w);
  }
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_DeglexEnumerate)->Arg(3)->Arg(63);

static void BM_FreeReduce(benchmark::State& state) {
  Letters raw;
  for (int k = 0; k < state.range(0); ++k) {
    raw.push_back(1 + k % 5);
    raw.push_back(-(1 + (k + 2) % 5));
    raw.push_back(1 + (k + 2) % 5);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(free_reduce(raw));
  }
}
BENCHMARK(BM_FreeReduce)->Arg(1000)->Arg(40000);

static void BM_LeastRotation(benchmark::State& state) {
  Letters w;
  for (int k = 0; k < state.range(0); ++k) {
    w.push_back(1 + (k * 7) % 13);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(least_rotation(w));
  }
}
BENCHMARK(BM_LeastRotation)->Arg(1000)->Arg(40000);
