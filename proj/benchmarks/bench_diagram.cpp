#include <benchmark/benchmark.h>

#include "filebasis/construction.hpp"
#include "filebasis/diagram.hpp"

using namespace filebasis;

namespace {
  Presentation theorem_scale() {
    return generate(ConstructionParams{}, 1, Budget{}).presentation;
  }
}  // namespace

static void BM_SpecialSelectionTheoremFace(benchmark::State& state) {
  Presentation const P = theorem_scale();
  Diagram const      d = face_double(P.relators.front().r.letters());
  for (auto _ : state) {
    benchmark::DoNotOptimize(special_selection(d, P.params.n));
  }
}
BENCHMARK(BM_SpecialSelectionTheoremFace);

static void BM_ValidateTheoremFace(benchmark::State& state) {
  Presentation const P = theorem_scale();
  Diagram const      d = one_face_disc(P.relators.front().r.letters());
  auto const         S = P.relator_words();
  for (auto _ : state) {
    benchmark::DoNotOptimize(validate_diagram(d, S));
  }
}
BENCHMARK(BM_ValidateTheoremFace);

static void BM_MainLemmaTheoremFace(benchmark::State& state) {
  Presentation const P   = theorem_scale();
  Diagram const      d   = one_face_disc(P.relators.front().r.letters());
  Selection const    sel = special_selection(d, P.params.n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_main_lemma(d, sel, P.params.lambda1, P.params.lambda2()));
  }
}
BENCHMARK(BM_MainLemmaTheoremFace);

static void BM_CancellablePairsSphere(benchmark::State& state) {
  Presentation const P = theorem_scale();
  Diagram const      d = face_double(P.relators.front().r.letters());
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_immediately_cancellable(d));
  }
}
BENCHMARK(BM_CancellablePairsSphere);
