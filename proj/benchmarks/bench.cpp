#include <benchmark/benchmark.h>

#include "paulidyn/paulidyn.hpp"

using namespace paulidyn;

static void BM_mc_body_fraction(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(mc_body_fraction(n, 1));
}
BENCHMARK(BM_mc_body_fraction)->Arg(100000)->Arg(1000000);

static void BM_run_factorized(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const double tau = 1.0 / n;
  const double g = stroboscopic_coupling(1.0, tau);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        run_factorized({HamiltonianXY{g, g, 0, 1}, tau}, n));
}
BENCHMARK(BM_run_factorized)->Arg(1000)->Arg(10000);

static void BM_classify_trajectory(benchmark::State& state) {
  const Trajectory traj =
      sample_family(volume_example(), 1.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(classify_trajectory(traj));
}
BENCHMARK(BM_classify_trajectory)->Arg(1001)->Arg(4001);

static void BM_schedule_pauli(benchmark::State& state) {
  const AnalyticFamily fam = volume_example();
  const int n = static_cast<int>(state.range(0));
  const double tau = 1.0 / n;
  for (auto _ : state)
    benchmark::DoNotOptimize(schedule_pauli(fam.lambda, 60.0, tau, n, "vol"));
}
BENCHMARK(BM_schedule_pauli)->Arg(3000)->Arg(30000);

static void BM_hermitian_exp(benchmark::State& state) {
  const Matrix h = hamiltonian_xy_matrix({1.3, 0.7, 0, 1});
  for (auto _ : state)
    benchmark::DoNotOptimize(hermitian_exp(h, 0.37));
}
BENCHMARK(BM_hermitian_exp);

static void BM_tomography(benchmark::State& state) {
  const PauliTriple t{0.7, -0.2, 0.4};
  for (auto _ : state)
    benchmark::DoNotOptimize(tomography(
        [&t](const Matrix& r) { return apply_pauli_channel(t, r); }));
}
BENCHMARK(BM_tomography);

BENCHMARK_MAIN();
