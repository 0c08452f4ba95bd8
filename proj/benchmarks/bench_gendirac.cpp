#include <benchmark/benchmark.h>

#include "gendirac/clifford.hpp"
#include "gendirac/evolution.hpp"
#include "gendirac/invariance.hpp"
#include "gendirac/operators.hpp"

namespace {

using namespace gendirac;

const GeneralizedParams& shifted() {
  static const auto p = GeneralizedParams::from_physical(1.0, 0.5, {0.0, 0.0, 0.25});
  return p;
}

void BM_BasisDecompose(benchmark::State& state) {
  const ComplexMatrix4 m = gamma(1) * gamma(2) + gamma5() * gamma(0);
  for (auto _ : state) benchmark::DoNotOptimize(basis_decompose(m));
}
BENCHMARK(BM_BasisDecompose);

void BM_PlaneWaveSolve(benchmark::State& state) {
  const Momentum k{0.3, -0.2, 0.7};
  for (auto _ : state) benchmark::DoNotOptimize(plane_wave_solve(k, shifted()));
}
BENCHMARK(BM_PlaneWaveSolve);

void BM_PropagatorAdvance(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  GaussianSpec spec;
  spec.n = n;
  spec.length = 400.0;
  spec.k0 = 0.5;
  WavePacket packet = init_gaussian(spec, shifted());
  const SpectralPropagator propagator(n, spec.length, shifted());
  propagator.advance(packet, 0.01);
  for (auto _ : state) {
    propagator.advance(packet, 0.01);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PropagatorAdvance)->RangeMultiplier(4)->Range(256, 16384);

void BM_InitGaussian(benchmark::State& state) {
  GaussianSpec spec;
  spec.n = 1024;
  spec.k0 = 0.5;
  for (auto _ : state) benchmark::DoNotOptimize(init_gaussian(spec, shifted()));
}
BENCHMARK(BM_InitGaussian);

}  // namespace

BENCHMARK_MAIN();
