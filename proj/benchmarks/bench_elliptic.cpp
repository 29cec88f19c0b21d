#include <benchmark/benchmark.h>

#include "delpezzo/elliptic.hpp"

using namespace delpezzo;

namespace {

void BM_Multiply(benchmark::State& state) {
  const auto e = FiberCurve::weierstrass(0, 2);
  const ECPoint p(-1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(ec::multiply(e, state.range(0), p));
}
BENCHMARK(BM_Multiply)->RangeMultiplier(2)->Range(2, 64);

void BM_TorsionOrder(benchmark::State& state) {
  const auto e = FiberCurve::weierstrass(0, 2);
  const ECPoint p(-1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(ec::torsion_order(e, p));
}
BENCHMARK(BM_TorsionOrder);

}  // namespace
