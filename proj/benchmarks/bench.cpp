#include <benchmark/benchmark.h>

#include "slq/chern.hpp"
#include "slq/projectors.hpp"

namespace {

using namespace slq;

void BM_MonomialProduct(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const PbwMonomial x = PbwMonomial::make(d, d, d, 0);
  const PbwMonomial y = PbwMonomial::make(0, d, d, d);
  for (auto _ : state) benchmark::DoNotOptimize(multiply_monomials(x, y));
}
BENCHMARK(BM_MonomialProduct)->DenseRange(1, 6);

void BM_BuildProjector(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_e(n));
}
BENCHMARK(BM_BuildProjector)->Arg(-6)->Arg(6);

void BM_Idempotency(benchmark::State& state) {
  const AlgebraMatrix e = build_e(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_idempotent(e, "e"));
}
BENCHMARK(BM_Idempotency)->Arg(-6)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_Pairing(benchmark::State& state) {
  const AlgebraMatrix e = build_e(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pairing(e));
}
BENCHMARK(BM_Pairing)->Arg(-5)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
