// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include <map>

#include "arrcount/generators.hpp"
#include "arrcount/signoracle.hpp"
#include "arrcount/spectrum.hpp"

namespace {

using namespace arrcount;

const projarr::ProjArrangement& oracle_input(std::size_t n) {
  static std::map<std::size_t, projarr::ProjArrangement> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, generators::general_position(n, 3).arrangement).first;
  return it->second;
}

void BM_OracleSerial(benchmark::State& state) {
  const auto& arr = oracle_input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(signoracle::count_regions_oracle_serial(arr));
}

void BM_OracleParallel(benchmark::State& state) {
  const auto& arr = oracle_input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(signoracle::count_regions_oracle(arr));
}

void BM_Search(benchmark::State& state, bool parallel) {
  spectrum::SearchOptions opt;
  opt.parallel = parallel;
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectrum::search_projective(static_cast<std::size_t>(state.range(0)), 3, opt).found.size());
  }
}

}  // namespace

BENCHMARK(BM_OracleSerial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Search, serial, false)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Search, parallel, true)->Arg(14)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
