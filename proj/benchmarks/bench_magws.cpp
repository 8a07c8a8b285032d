#include <benchmark/benchmark.h>

#include "magws/algebra.hpp"
#include "magws/convolution.hpp"
#include "magws/dirac.hpp"
#include "magws/dixmier.hpp"

namespace {

const magws::MagneticParams P{};

void BM_LaguerreFn(benchmark::State& state) {
  const int n = int(state.range(0));
  magws::Vec2 x{0.3, -0.7};
  for (auto _ : state) {
    benchmark::DoNotOptimize(magws::laguerre_fn({n, n + 1}, x, P));
    x.x1 += 1e-9;
  }
}
BENCHMARK(BM_LaguerreFn)->Arg(1)->Arg(8)->Arg(32);

void BM_TwistedConvolve(benchmark::State& state) {
  const magws::QuadGrid grid = magws::polar_grid(int(state.range(0)), P);
  const auto f = magws::basis_kernel({1, 2}, P), g = magws::basis_kernel({2, 0}, P);
  for (auto _ : state) benchmark::DoNotOptimize(magws::twisted_convolve(f, g, {0.4, 0.1}, grid, P));
}
BENCHMARK(BM_TwistedConvolve)->Arg(12)->Arg(24);

void BM_AlgebraMultiply(benchmark::State& state) {
  const int K = int(state.range(0));
  const auto x = magws::heat_element(1.0, K, P) + magws::upsilon(0, K, K, P);
  for (auto _ : state) benchmark::DoNotOptimize(magws::multiply(x, x));
}
BENCHMARK(BM_AlgebraMultiply)->Arg(16)->Arg(64);

void BM_DiracCensus(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(magws::spectrum(magws::build_dirac(int(state.range(0)), P)));
}
BENCHMARK(BM_DiracCensus)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_AnalyticDixmier(benchmark::State& state) {
  const long long N = state.range(0);
  for (auto _ : state) {
    const auto spec = magws::analytic_spectrum(magws::AnalyticKind::dirac_power, {4.0, 1.0, 1.0, 0, 0}, N);
    benchmark::DoNotOptimize(magws::dixmier_estimate(spec, N));
  }
}
BENCHMARK(BM_AnalyticDixmier)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

void BM_ResolventTrace(benchmark::State& state) {
  const auto t = magws::upsilon(0, 1, 1, P);
  for (auto _ : state) benchmark::DoNotOptimize(magws::tr_dix_resolvent(t, {1.0}, state.range(0)));
}
BENCHMARK(BM_ResolventTrace)->Arg(1 << 14)->Unit(benchmark::kMillisecond);

void BM_ConnesPi0(benchmark::State& state) {
  const auto a = magws::landau_projection(0, 1, P);
  for (auto _ : state) benchmark::DoNotOptimize(magws::connes_formula(a, a, 1.0, state.range(0)));
}
BENCHMARK(BM_ConnesPi0)->Arg(1 << 14)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
