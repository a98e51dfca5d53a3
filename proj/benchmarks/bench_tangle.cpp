#include <benchmark/benchmark.h>

#include "knotkit/tangle.hpp"

using knotkit::Int;
using namespace knotkit::tangle;

static void BM_CanonicalExpansionSweep(benchmark::State& state) {
  const int cap = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int p = 1; p <= cap; ++p)
      for (int q = 1; q <= cap; ++q) {
        if (gcd(Int(p), Int(q)) > 1) continue;
        benchmark::DoNotOptimize(canonical_continued_fraction(Fraction(p, q)));
      }
  }
}
BENCHMARK(BM_CanonicalExpansionSweep)->Arg(32)->Arg(128);

static void BM_WordEvaluation(benchmark::State& state) {
  TwistWord word;
  word.base = BaseTangle::Zero;
  for (int i = 0; i < state.range(0); ++i) {
    word.steps.emplace_back(AddInteger{3});
    word.steps.emplace_back(StarVertical{2});
  }
  for (auto _ : state) benchmark::DoNotOptimize(fraction_of(word));
}
BENCHMARK(BM_WordEvaluation)->Arg(8)->Arg(64);

BENCHMARK_MAIN();
