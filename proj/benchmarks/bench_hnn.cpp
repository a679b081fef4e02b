#include <benchmark/benchmark.h>

#include <random>

#include "hnnkit/hnn/identify.hpp"
#include "hnnkit/presentations/tietze.hpp"
#include "hnnkit/tri4/triangulation.hpp"

using namespace hnnkit;

namespace {

std::vector<hnn::HnnWord> random_words(const hnn::HnnData& d, int t_length, int count) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> elem(0, d.base().order() - 1);
  std::vector<hnn::HnnWord> out;
  for (int i = 0; i < count; ++i) {
    hnn::HnnWord w;
    w.b = {elem(rng)};
    for (int k = 0; k < t_length; ++k) {
      w.t.push_back(rng() % 2 ? 1 : -1);
      w.b.push_back(elem(rng));
    }
    out.push_back(w);
  }
  return out;
}

void BM_Reduce(benchmark::State& state) {
  const auto d = hnn::quaternion_extension();
  const auto words = random_words(d, static_cast<int>(state.range(0)), 256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(hnn::reduce(d, words[i++ % words.size()]));
}
BENCHMARK(BM_Reduce)->Arg(4)->Arg(16)->Arg(64);

void BM_Identify(benchmark::State& state) {
  const auto d = hnn::quaternion_extension();
  const auto spine = pres::tietze_simplify(tri4::dual_spine(tri4::builtin_triangulation()).presentation).presentation;
  for (auto _ : state) benchmark::DoNotOptimize(hnn::identify(d, spine));
}
BENCHMARK(BM_Identify)->Unit(benchmark::kMillisecond);

}  // namespace
