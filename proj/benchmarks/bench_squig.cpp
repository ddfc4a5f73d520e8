#include <cmath>
#include <vector>

#include <benchmark/benchmark.h>

#include "squig/quadrature.hpp"
#include "squig/squigfn.hpp"
#include "squig/verify.hpp"

using namespace squig;

namespace {

const geometry::SquigContext& context(int n) {
  static std::vector<geometry::SquigContext> cache = [] {
    std::vector<geometry::SquigContext> v;
    for (int k = 0; k <= 64; ++k) v.push_back(k >= 3 ? geometry::make_context(k) : geometry::SquigContext{});
    return v;
  }();
  return cache.at(n);
}

void BM_MakeContext(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(geometry::make_context(n));
}
BENCHMARK(BM_MakeContext)->Arg(3)->Arg(8)->Arg(64)->Unit(benchmark::kMicrosecond);

void BM_SinN(benchmark::State& state) {
  const auto& ctx = context(static_cast<int>(state.range(0)));
  const auto pts = verify::sample_omega(ctx, 64, verify::kDefaultSeed);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(squigfn::sin_n(ctx, pts[i++ % pts.size()]));
}
BENCHMARK(BM_SinN)->Arg(3)->Arg(4)->Arg(8)->Arg(32)->Unit(benchmark::kMicrosecond);

void BM_ArcsinN(benchmark::State& state) {
  const auto& ctx = context(static_cast<int>(state.range(0)));
  std::vector<Complex> pts;
  for (Complex z : verify::sample_omega(ctx, 64, verify::kDefaultSeed)) pts.push_back(*squigfn::sin_n(ctx, z).value);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(squigfn::arcsin_n(ctx, pts[i++ % pts.size()]));
}
BENCHMARK(BM_ArcsinN)->Arg(3)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_PrimitiveNearRoot(benchmark::State& state) {
  const auto& F = *context(4).primitive;
  for (auto _ : state) benchmark::DoNotOptimize(F(Complex(1.0 + 1e-6, 1e-6)));
}
BENCHMARK(BM_PrimitiveNearRoot)->Unit(benchmark::kMicrosecond);

void BM_Sin3Global(benchmark::State& state) {
  const auto& ctx = context(3);
  const Complex z(7.3, -11.9);
  for (auto _ : state) benchmark::DoNotOptimize(squigfn::sin3_global(ctx, z));
}
BENCHMARK(BM_Sin3Global)->Unit(benchmark::kMicrosecond);

void BM_Maclaurin(benchmark::State& state) {
  const int terms = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(squigfn::maclaurin_series(4, terms));
}
BENCHMARK(BM_Maclaurin)->Arg(10)->Arg(40)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_EndpointSingularQuadrature(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const double alpha = (n - 1.0) / n;
  for (auto _ : state) {
    benchmark::DoNotOptimize(numerics::integrate_endpoint_singular(
        [n, alpha](double t, double, double to_one) {
          const double u = t <= 0.5 ? 1.0 - std::pow(t, n) : -std::expm1(n * std::log1p(-to_one));
          return std::pow(u, -alpha);
        },
        0.0, 1.0, 0.0, alpha));
  }
}
BENCHMARK(BM_EndpointSingularQuadrature)->Arg(3)->Arg(64)->Unit(benchmark::kMicrosecond);

void BM_VerifyAll(benchmark::State& state) {
  verify::VerificationConfig config;
  config.parallel = false;
  for (auto _ : state) benchmark::DoNotOptimize(verify::run_all(config));
}
BENCHMARK(BM_VerifyAll)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
