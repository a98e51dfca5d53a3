#include <benchmark/benchmark.h>

#include "knotkit/poly.hpp"

using namespace knotkit::poly;

static void BM_FamilyPolynomial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(conway_kn(n));
}
BENCHMARK(BM_FamilyPolynomial)->Arg(10)->Arg(30);

static void BM_DeterminantChain(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    knotkit::Int last = 0;
    for (int i = 1; i <= n; ++i)
      last = alexander_at_minus1(conway_kn(i));
    benchmark::DoNotOptimize(last);
  }
}
BENCHMARK(BM_DeterminantChain)->Arg(30);
