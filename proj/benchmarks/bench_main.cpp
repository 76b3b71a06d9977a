#include <benchmark/benchmark.h>

#include "dicolor/coloring.hpp"
#include "dicolor/dichromatic.hpp"
#include "dicolor/families.hpp"
#include "dicolor/independence.hpp"

namespace {

using namespace dicolor;

Digraph bench_digraph(int n) {
  Rng rng(static_cast<std::uint64_t>(n));
  return random_digraph(n, 0.3, rng);
}

void BM_AcyclicTable(benchmark::State& state) {
  const Digraph d = bench_digraph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(AcyclicTable(d));
}
BENCHMARK(BM_AcyclicTable)->DenseRange(10, 20, 2);

void BM_DichromaticPolynomial(benchmark::State& state) {
  const Digraph d = bench_digraph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dichromatic_polynomial(d));
}
BENCHMARK(BM_DichromaticPolynomial)->DenseRange(6, 14, 2)->Unit(benchmark::kMillisecond);

void BM_ExactChromaticNumber(benchmark::State& state) {
  const Digraph d = bench_digraph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exact_chromatic_number(d));
}
BENCHMARK(BM_ExactChromaticNumber)->DenseRange(8, 16, 2)->Unit(benchmark::kMillisecond);

void BM_ExactMaxAcyclicSet(benchmark::State& state) {
  Rng rng(1);
  const Digraph d = random_tournament(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(exact_max_acyclic_set(d));
}
BENCHMARK(BM_ExactMaxAcyclicSet)->Arg(16)->Arg(24)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_DnMaximality(benchmark::State& state) {
  const int ks[] = {2, 3, 4, 5};
  for (auto _ : state) benchmark::DoNotOptimize(verify_dn_maximality(static_cast<int>(state.range(0)), ks));
}
BENCHMARK(BM_DnMaximality)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
