#include <benchmark/benchmark.h>

#include "hnnkit/fingrp/catalog.hpp"
#include "hnnkit/grphom/homology.hpp"

using namespace hnnkit;

namespace {

void BM_Homology(benchmark::State& state, const char* group, int k) {
  const auto g = fingrp::catalog_group(group);
  grphom::HomologyOptions opts;
  opts.cache = false;
  for (auto _ : state) benchmark::DoNotOptimize(grphom::homology(*g, k, opts));
}
BENCHMARK_CAPTURE(BM_Homology, H2_D8xZ2, "D8xZ/2", 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Homology, H2_Q16, "Q(16)", 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Homology, H3_Q8, "Q(8)", 3)->Unit(benchmark::kMillisecond);

}  // namespace
