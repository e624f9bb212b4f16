#include <benchmark/benchmark.h>

#include "filebasis/decision.hpp"

using namespace filebasis;

namespace {
  Presentation toy() {
    ConstructionParams p;
    p.n          = 3;
    p.lambda1    = Rational(1, 15);
    p.N          = 2;
    p.q_override = Rational(3);
    return generate(p, 1, Budget{}).presentation;
  }
}  // namespace

static void BM_EqualsConjugatedRelator(benchmark::State& state) {
  Presentation const P = toy();
  PowerWord const    a = parse_word("x2 x3^-1");
  PowerWord const    g = a * P.relators.front().r * a.inverse();
  Budget const       b{64, 64, 20000};
  for (auto _ : state) {
    benchmark::DoNotOptimize(equals_in_G(P, g, PowerWord{}, b, Engine::diagram));
  }
}
BENCHMARK(BM_EqualsConjugatedRelator);

static void BM_RewriteSearch(benchmark::State& state) {
  Presentation const P = toy();
  auto const         S = P.relator_words();
  PowerWord const    u = parse_word("x2 x1");
  PowerWord const    v = parse_word("x1^5 x2^5 x3^5");
  Budget const       b{64, 64, 20000};
  for (auto _ : state) {
    benchmark::DoNotOptimize(rewrite_search(S, u, v, b));
  }
}
BENCHMARK(BM_RewriteSearch);

static void BM_ConjugateShift(benchmark::State& state) {
  Presentation const P = toy();
  PowerWord const    u = parse_word("x1 x2^2 x3^-1 x2");
  PowerWord const    v = parse_word("x2 x1 x2^2 x3^-1");
  Budget const       b{64, 64, 20000};
  for (auto _ : state) {
    benchmark::DoNotOptimize(are_conjugate(P, u, v, b));
  }
}
BENCHMARK(BM_ConjugateShift);
