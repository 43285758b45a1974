#include <benchmark/benchmark.h>

#include <random>

#include "opinfo/compression.hpp"
#include "opinfo/metrics.hpp"
#include "opinfo/optim.hpp"

using namespace opinfo;

namespace {

// Random feasible LP: maximize c.x over a bounded polytope with n variables.
LinearProgram random_lp(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  LinearProgram p;
  p.objective = Vec(n);
  p.a_ub = Mat(2 * n, n);
  p.b_ub = Vec(2 * n);
  for (int j = 0; j < n; ++j) p.objective(j) = u(rng);
  for (int i = 0; i < 2 * n; ++i) {
    for (int j = 0; j < n; ++j) p.a_ub(i, j) = u(rng);
    p.b_ub(i) = 1.0 + u(rng);
  }
  return p;
}

void BM_LpSolve(benchmark::State& state) {
  const auto p = random_lp(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(lp_solve(p).value);
}
BENCHMARK(BM_LpSolve)->Arg(8)->Arg(32)->Arg(64);

void BM_TypicalSetError(benchmark::State& state) {
  const double p[] = {0.89, 0.11};
  const auto rho = classical_state(p);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(typical_set_error(rho.coords, n, n / 2));
}
BENCHMARK(BM_TypicalSetError)->Arg(100)->Arg(1000)->Arg(10000);

void BM_QuantumFidelity(benchmark::State& state) {
  const auto sys = SystemLabel::quantum(static_cast<int>(state.range(0)));
  const auto a = random_state(sys, 1), b = random_state(sys, 2);
  for (auto _ : state) benchmark::DoNotOptimize(fidelity(a, b).value);
}
BENCHMARK(BM_QuantumFidelity)->Arg(2)->Arg(4)->Arg(8);

void BM_SquitFidelitySearch(benchmark::State& state) {
  const auto sys = SystemLabel::squit();
  const auto a = random_state(sys, 1), b = random_state(sys, 2);
  const SearchConfig cfg{2, 400, 1, 1e-10};
  for (auto _ : state) benchmark::DoNotOptimize(fidelity(a, b, cfg).value);
}
BENCHMARK(BM_SquitFidelitySearch);

}  // namespace
BENCHMARK_MAIN();
