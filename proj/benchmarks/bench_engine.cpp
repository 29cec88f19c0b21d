#include <benchmark/benchmark.h>

#include "delpezzo/point_engine.hpp"

using namespace delpezzo;

namespace {

const SurfaceParams kWorked{0, 0, 1, 2, 3, {0, 0, 0, 1}};

void BM_Sweep(benchmark::State& state) {
  const Surface s = Surface::build(kWorked);
  const WPoint p = WPoint::parse("[-1:1:-1:1]");
  GenerationConfig cfg;
  cfg.t_height_bound = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cp_sweep(s, p, cfg));
}
BENCHMARK(BM_Sweep)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_Generate(benchmark::State& state) {
  const Surface s = Surface::build(kWorked);
  const WPoint p = WPoint::parse("[-1:1:-1:1]");
  GenerationConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(generate(s, p, cfg));
}
BENCHMARK(BM_Generate)->Unit(benchmark::kMillisecond);

}  // namespace
