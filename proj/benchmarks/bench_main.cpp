#include <benchmark/benchmark.h>

#include <cmath>

#include "photodissim/analysis.hpp"
#include "photodissim/generators.hpp"
#include "photodissim/observables.hpp"
#include "photodissim/solvers.hpp"

using namespace photodissim;

namespace {

EvolutionSpec spec(Frame frame) {
  EvolutionSpec s;
  s.hamiltonian = {1.0, 0.0, 1.0, 0.01};
  s.dissipation = {0.05, 0, 0, 0.05, 0, 0};
  s.initial = vectorize(DensityMatrix::left());
  s.t_final = 50.0;
  s.samples = 501;
  s.frame = frame;
  return s;
}

IntensitySeries series(std::size_t n) {
  IntensitySeries s;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = 100.0 * static_cast<double>(i) / static_cast<double>(n - 1);
    s.times.push_back(t);
    s.values.push_back(prob_dissipative(1.0, 0.05, 0.01, 0.3, t));
  }
  return s;
}

void BM_RK4Lab(benchmark::State& state) {
  const EvolutionSpec s = spec(Frame::lab);
  for (auto _ : state) benchmark::DoNotOptimize(evolve_numerical(s));
}
BENCHMARK(BM_RK4Lab)->Unit(benchmark::kMillisecond);

void BM_RK4Adiabatic(benchmark::State& state) {
  const EvolutionSpec s = spec(Frame::adiabatic);
  for (auto _ : state) benchmark::DoNotOptimize(evolve_numerical(s));
}
BENCHMARK(BM_RK4Adiabatic)->Unit(benchmark::kMillisecond);

void BM_ExactDissipative(benchmark::State& state) {
  EvolutionSpec s = spec(Frame::lab);
  s.solver = SolverKind::exact_dissipative;
  for (auto _ : state) benchmark::DoNotOptimize(evolve(s));
}
BENCHMARK(BM_ExactDissipative)->Unit(benchmark::kMicrosecond);

void BM_TransformedDissipator(benchmark::State& state) {
  const DissipationCombos k = combos({0.3, 0.05, 0.02, 0.2, 0.01, 0.15});
  const HamiltonianParams p{1.0, 0.4, 0.8, 0.02};
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(transformed_dissipator(k, p, t));
    t += 0.001;
  }
}
BENCHMARK(BM_TransformedDissipator);

void BM_ClosedFormDissipative(benchmark::State& state) {
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(prob_dissipative(1.0, 0.05, 0.01, 0.3, t));
    t += 0.001;
  }
}
BENCHMARK(BM_ClosedFormDissipative);

void BM_ClosedFormPerturbative(benchmark::State& state) {
  const DissipationCombos k = combos({0.02, 0.003, 0.002, 0.03, 0.001, 0.025});
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(prob_perturbative({1.0, 0.0, 1.0, 0.01}, k, 0.3, t));
    t += 0.001;
  }
}
BENCHMARK(BM_ClosedFormPerturbative);

void BM_Spectrum(benchmark::State& state) {
  const IntensitySeries s = series(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(s));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Spectrum)->RangeMultiplier(2)->Range(256, 4096)->Unit(benchmark::kMillisecond)->Complexity();

void BM_Fit(benchmark::State& state) {
  const IntensitySeries s = series(2048);
  for (auto _ : state) benchmark::DoNotOptimize(fit_dissipative(s, {1.1, 0.045, 0.011, 0.27, 0.5}));
}
BENCHMARK(BM_Fit)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
