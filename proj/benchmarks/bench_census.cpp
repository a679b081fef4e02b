#include <benchmark/benchmark.h>

#include "hnnkit/census/census.hpp"
#include "hnnkit/grphom/homology.hpp"

using namespace hnnkit;

namespace {

void BM_Census(benchmark::State& state) {
  for (auto _ : state) {
    grphom::clear_homology_cache();
    benchmark::DoNotOptimize(census::run_catalog());
  }
}
BENCHMARK(BM_Census)->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace
