#include <benchmark/benchmark.h>

#include <cmath>
#include <memory>
#include <numbers>

#include "gsp/gsp.hpp"

using namespace gsp;

namespace {

BasisPtr share(FourierBasis b) { return std::make_shared<const FourierBasis>(std::move(b)); }

FrequencyResponse omega_powers(Index n) {
  FrequencyResponse a(n);
  for (Index k = 0; k < n; ++k) a(k) = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
  return a;
}

Signal ramp(Index n) {
  Signal x(n);
  for (Index v = 0; v < n; ++v) x(v) = Complex(std::sin(0.3 * static_cast<double>(v)), std::cos(0.7 * static_cast<double>(v)));
  return x;
}

}  // namespace

static void BM_EigendecomposeSensor(benchmark::State& state) {
  const Index n = state.range(0);
  const RealMatrix l = gen_sensor(n, SensorParams{0.35}, 42).laplacian();
  for (auto _ : state) benchmark::DoNotOptimize(eigendecompose(l));
  state.SetComplexityN(n);
}
BENCHMARK(BM_EigendecomposeSensor)->RangeMultiplier(2)->Range(32, 512)->Complexity(benchmark::oNCubed);

static void BM_MakeFilterFromThetas(benchmark::State& state) {
  const Index n = state.range(0);
  const BasisPtr b = share(real_basis(eigendecompose(generate(kind::Path{}, n).laplacian())));
  const RealVector thetas = uniform_thetas(n);
  for (auto _ : state) benchmark::DoNotOptimize(make_from_thetas(b, thetas));
}
BENCHMARK(BM_MakeFilterFromThetas)->RangeMultiplier(2)->Range(16, 256);

static void BM_CheckProperties(benchmark::State& state) {
  const Index n = state.range(0);
  const Graph g = generate(kind::Ring{}, n);
  const BasisPtr b = share(attach_eigenvalues(dft_basis(n), g.laplacian()));
  const Filter f = make_from_thetas(b, uniform_thetas(n)).filter;
  for (auto _ : state) benchmark::DoNotOptimize(check_properties(f, g.laplacian()));
}
BENCHMARK(BM_CheckProperties)->RangeMultiplier(2)->Range(16, 128);

static void BM_BuildFrame(benchmark::State& state) {
  const Index n = state.range(0);
  const BasisPtr b = share(dft_basis(n));
  const ComplexMatrix a = power_responses(omega_powers(n));
  const Signal g = Signal::Ones(n);
  for (auto _ : state) benchmark::DoNotOptimize(build_frame(b, g, a));
}
BENCHMARK(BM_BuildFrame)->RangeMultiplier(2)->Range(16, 128);

static void BM_AnalyzeSynthesize(benchmark::State& state) {
  const Index n = state.range(0);
  const FrameDictionary d = build_frame(share(dft_basis(n)), Signal::Ones(n), power_responses(omega_powers(n)));
  const Signal f = ramp(n);
  for (auto _ : state) {
    const ComplexMatrix c = analyze(d, f);
    benchmark::DoNotOptimize(synthesize(d, c));
  }
}
BENCHMARK(BM_AnalyzeSynthesize)->RangeMultiplier(2)->Range(16, 128);
BENCHMARK_MAIN();
