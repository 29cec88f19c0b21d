#include <benchmark/benchmark.h>

#include "delpezzo/surface.hpp"

using namespace delpezzo;

namespace {

const SurfaceParams kWorked{0, 0, 1, 2, 3, {0, 0, 0, 1}};

void BM_SmoothnessCheck(benchmark::State& state) {
  const SurfaceParams p{Rational(3, 2), -2, Rational(-4, 5), 1, 3, {1, -2, Rational(1, 3), 2}};
  const Surface s = Surface::build(p);
  for (auto _ : state) benchmark::DoNotOptimize(smoothness_check(s));
}
BENCHMARK(BM_SmoothnessCheck);

void BM_ModpScan(benchmark::State& state) {
  const Surface s = Surface::build(kWorked);
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(modp_singular_scan(s, p));
}
BENCHMARK(BM_ModpScan)->Arg(19)->Arg(257)->Arg(1031)->Arg(4099)->Unit(benchmark::kMillisecond);

void BM_SingularFiberReport(benchmark::State& state) {
  const Surface s = Surface::build(kWorked);
  for (auto _ : state) benchmark::DoNotOptimize(singular_fiber_report(s));
}
BENCHMARK(BM_SingularFiberReport);

}  // namespace
