#include <benchmark/benchmark.h>

#include "hnnkit/tri4/triangulation.hpp"

using namespace hnnkit;

namespace {

void BM_FaceLattice(benchmark::State& state) {
  const auto m = tri4::builtin_triangulation();
  for (auto _ : state) benchmark::DoNotOptimize(tri4::face_lattice(m));
}
BENCHMARK(BM_FaceLattice);

void BM_Automorphisms(benchmark::State& state) {
  const auto m = tri4::builtin_triangulation();
  for (auto _ : state) benchmark::DoNotOptimize(tri4::automorphisms(m));
}
BENCHMARK(BM_Automorphisms);

void BM_LinkHomology(benchmark::State& state) {
  const auto m = tri4::builtin_triangulation();
  const auto l = tri4::vertex_link(m, 0);
  for (auto _ : state) benchmark::DoNotOptimize(tri4::homology(l.link));
}
BENCHMARK(BM_LinkHomology)->Unit(benchmark::kMillisecond);

}  // namespace
