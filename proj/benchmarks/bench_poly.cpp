#include <benchmark/benchmark.h>

#include "delpezzo/uni_poly.hpp"

using namespace delpezzo;

namespace {

// prod (q t - p) over small p/q, times an irreducible quadratic.
UniPoly product_of_roots(int count) {
  UniPoly f{Rational(1)};
  for (int i = 1; i <= count; ++i) f *= UniPoly({Rational(-i), Rational(i + 1)});
  return f * UniPoly({Rational(2), Rational(0), Rational(1)});
}

void BM_RationalRoots(benchmark::State& state) {
  const UniPoly f = product_of_roots(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rational_roots(f));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RationalRoots)->DenseRange(2, 12, 2);

void BM_Gcd(benchmark::State& state) {
  const UniPoly f = product_of_roots(static_cast<int>(state.range(0)));
  const UniPoly g = f.derivative() * UniPoly({Rational(-1), Rational(1)});
  for (auto _ : state) benchmark::DoNotOptimize(gcd(f, g));
}
BENCHMARK(BM_Gcd)->DenseRange(4, 16, 4);

}  // namespace
