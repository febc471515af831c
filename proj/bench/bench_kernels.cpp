// Serial reference against the OpenMP kernels on the same inputs.
#include <benchmark/benchmark.h>

#include "monochrome/coloring.hpp"
#include "monochrome/counting.hpp"
#include "monochrome/generators.hpp"
#include "monochrome/io.hpp"
#include "monochrome/limits.hpp"

namespace {

void BM_InjectiveHomsSerial(benchmark::State& state) {
  const auto g = mono::gnp(static_cast<std::size_t>(state.range(0)), 0.5, 1);
  const auto h = mono::parse_pattern("K4");
  for (auto _ : state) benchmark::DoNotOptimize(mono::serial::count_injective_homs(h.graph(), g));
}

void BM_InjectiveHomsParallel(benchmark::State& state) {
  const auto g = mono::gnp(static_cast<std::size_t>(state.range(0)), 0.5, 1);
  const auto h = mono::parse_pattern("K4");
  for (auto _ : state) benchmark::DoNotOptimize(mono::count_injective_homs(h.graph(), g));
}

void BM_MonteCarloSerial(benchmark::State& state) {
  const auto g = mono::complete_graph(60);
  const auto h = mono::parse_pattern("K3");
  for (auto _ : state) {
    benchmark::DoNotOptimize(mono::serial::run_monte_carlo(h, g, 3, static_cast<std::size_t>(state.range(0)), 1));
  }
}

void BM_MonteCarloParallel(benchmark::State& state) {
  const auto g = mono::complete_graph(60);
  const auto h = mono::parse_pattern("K3");
  for (auto _ : state) {
    benchmark::DoNotOptimize(mono::run_monte_carlo(h, g, 3, static_cast<std::size_t>(state.range(0)), 1));
  }
}

void BM_TwoPointMatrixSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = mono::complete_bipartite(n / 2, n / 2);
  const auto h = mono::parse_pattern("K1,2");
  for (auto _ : state) benchmark::DoNotOptimize(mono::serial::scaled_two_point_matrix(h, g));
}

void BM_TwoPointMatrixParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = mono::complete_bipartite(n / 2, n / 2);
  const auto h = mono::parse_pattern("K1,2");
  for (auto _ : state) benchmark::DoNotOptimize(mono::scaled_two_point_matrix(h, g));
}

}  // namespace

BENCHMARK(BM_InjectiveHomsSerial)->Arg(60)->Arg(120);
BENCHMARK(BM_InjectiveHomsParallel)->Arg(60)->Arg(120);
BENCHMARK(BM_MonteCarloSerial)->Arg(1000);
BENCHMARK(BM_MonteCarloParallel)->Arg(1000);
BENCHMARK(BM_TwoPointMatrixSerial)->Arg(100)->Arg(200);
BENCHMARK(BM_TwoPointMatrixParallel)->Arg(100)->Arg(200);

BENCHMARK_MAIN();
