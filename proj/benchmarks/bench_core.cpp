#include <benchmark/benchmark.h>

#include "tjcm/entanglement.hpp"
#include "tjcm/fock.hpp"
#include "tjcm/observables.hpp"

namespace {

using namespace tjcm;

BlockEvolver make_evolver(double alpha, int k, double g) {
  const SdnParams sdn{alpha, 0.0, 0};
  const int nc = default_field_cutoff(sdn, k) - 2 * k;
  return BlockEvolver(build_sdn_state(sdn, nc + 2 * k), CouplingParams{k, g, nc});
}

void BM_BuildSdnState(benchmark::State& state) {
  const double alpha = static_cast<double>(state.range(0));
  const SdnParams sdn{alpha, 1.0, 2};
  const int cutoff = default_field_cutoff(sdn, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_sdn_state(sdn, cutoff));
  }
}
BENCHMARK(BM_BuildSdnState)->Arg(3)->Arg(7);

void BM_EvolveState(benchmark::State& state) {
  const BlockEvolver evolver = make_evolver(7.0, 1, 0.5);
  double t = 0.0;
  for (auto _ : state) {
    t += 0.05;
    benchmark::DoNotOptimize(evolver.evolve(t));
  }
}
BENCHMARK(BM_EvolveState);

void BM_TangleFieldAtoms(benchmark::State& state) {
  const BlockEvolver evolver = make_evolver(7.0, 2, 1.0);
  const JointState joint = evolver.evolve(1.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tangle_field_atoms(joint));
  }
}
BENCHMARK(BM_TangleFieldAtoms);

void BM_WignerGrid(benchmark::State& state) {
  const BlockEvolver evolver = make_evolver(3.0, 1, 1.0);
  const JointState joint = evolver.evolve(5.36);
  const GridSpec grid{static_cast<int>(state.range(0)), default_grid_radius(3.0)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(wigner(joint, grid));
  }
}
BENCHMARK(BM_WignerGrid)->Arg(41)->Arg(101)->Unit(benchmark::kMillisecond);

void BM_PhaseDistribution(benchmark::State& state) {
  const BlockEvolver evolver = make_evolver(7.0, 1, 0.5);
  const JointState joint = evolver.evolve(21.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(phase_distribution(joint, 720));
  }
}
BENCHMARK(BM_PhaseDistribution);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}
