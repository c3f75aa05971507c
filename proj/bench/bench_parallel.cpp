// Serial reference vs OpenMP execution of the batch kernels. Both paths
// produce bit-identical results (see tests); these measure the speedup.

#include <benchmark/benchmark.h>

#include "resgrass/lie_poisson.hpp"
#include "resgrass/pathology.hpp"
#include "resgrass/random_inputs.hpp"
#include "resgrass/suites.hpp"

using namespace resgrass;

namespace {

Exec exec_of(const benchmark::State& state) {
  return state.range(0) ? Exec::openmp : Exec::serial;
}

void bm_cocycle_suite(benchmark::State& state) {
  const SplitSpace space(8, 8);
  for (auto _ : state) {
    const SuiteResult r = cocycle_suite(space, 200, 42, exec_of(state));
    benchmark::DoNotOptimize(r.max_error);
  }
}

void bm_equivariance_suite(benchmark::State& state) {
  const SplitSpace space(8, 8);
  for (auto _ : state) {
    const SuiteResult r = equivariance_suite(space, 100, 42, exec_of(state));
    benchmark::DoNotOptimize(r.max_error);
  }
}

void bm_fd_gradient(benchmark::State& state) {
  const SplitSpace space(6, 6);
  Rng rng = trial_rng(42, 0);
  const RestrictedElement c = random_restricted(rng, space);
  const ExtendedElement x(random_predual(rng, space), 0.5);
  const ScalarField h{[c](const ExtendedElement& y) { return pairing(y.mu, c); }, 1e-6};
  for (auto _ : state) {
    const RestrictedElement g = fd_gradient(h, x, exec_of(state));
    benchmark::DoNotOptimize(g.op().entries()(0, 0));
  }
}

void bm_cone_sampling(benchmark::State& state) {
  const SplitSpace space(6, 6);
  for (auto _ : state) {
    const ConeSpanResult r = cone_span_demo(2000, space, 7, exec_of(state));
    benchmark::DoNotOptimize(r.max_ratio);
  }
}

void bm_orbit_map_assembly(benchmark::State& state) {
  const SplitSpace space(4, 4);
  Rng rng = trial_rng(42, 1);
  const ExtendedElement x(random_predual(rng, space), 1.0);
  for (auto _ : state) {
    const auto basis = isotropy_algebra(x, Tolerances{}, exec_of(state));
    benchmark::DoNotOptimize(basis.size());
  }
}

}  // namespace

BENCHMARK(bm_cocycle_suite)->Arg(0)->Arg(1)->ArgNames({"omp"})->Unit(benchmark::kMillisecond);
BENCHMARK(bm_equivariance_suite)
    ->Arg(0)
    ->Arg(1)
    ->ArgNames({"omp"})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(bm_fd_gradient)->Arg(0)->Arg(1)->ArgNames({"omp"})->Unit(benchmark::kMillisecond);
BENCHMARK(bm_cone_sampling)->Arg(0)->Arg(1)->ArgNames({"omp"})->Unit(benchmark::kMillisecond);
BENCHMARK(bm_orbit_map_assembly)
    ->Arg(0)
    ->Arg(1)
    ->ArgNames({"omp"})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
