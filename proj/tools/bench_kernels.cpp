#include <benchmark/benchmark.h>

#include "gwps3/grading.hpp"
#include "gwps3/veronese.hpp"

// Serial reference vs OpenMP kernels on the heaviest inputs of the suite:
// monomial enumeration/counting and the Veronese closure certificate.

namespace {

using namespace gwps3;

const WeightedSpace& heavy_space() {
  static const WeightedSpace w({1, 6, 14, 21});
  return w;
}

void BM_count_serial(benchmark::State& state) {
  const auto d = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(count_by_enumeration_serial(heavy_space(), d));
}
BENCHMARK(BM_count_serial)->Arg(600)->Arg(1200);

void BM_count_omp(benchmark::State& state) {
  const auto d = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(count_by_enumeration(heavy_space(), d));
}
BENCHMARK(BM_count_omp)->Arg(600)->Arg(1200);

void BM_hilbert_dp(benchmark::State& state) {
  const auto d = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_count(heavy_space(), d));
}
BENCHMARK(BM_hilbert_dp)->Arg(600)->Arg(1200);

void BM_enumerate_serial(benchmark::State& state) {
  const auto d = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(monomials_of_degree_serial(heavy_space(), d));
}
BENCHMARK(BM_enumerate_serial)->Arg(600);

void BM_enumerate_omp(benchmark::State& state) {
  const auto d = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(monomials_of_degree(heavy_space(), d));
}
BENCHMARK(BM_enumerate_omp)->Arg(600);

void BM_closure_serial(benchmark::State& state) {
  const auto gens = veronese_generators(heavy_space(), 7);
  for (auto _ : state) {
    ExpVec bad;
    benchmark::DoNotOptimize(closure_scan_serial(heavy_space(), 7, gens, 43, 84, &bad));
  }
}
BENCHMARK(BM_closure_serial);

void BM_closure_omp(benchmark::State& state) {
  const auto gens = veronese_generators(heavy_space(), 7);
  for (auto _ : state) {
    ExpVec bad;
    benchmark::DoNotOptimize(closure_scan(heavy_space(), 7, gens, 43, 84, &bad));
  }
}
BENCHMARK(BM_closure_omp);

}  // namespace

BENCHMARK_MAIN();
