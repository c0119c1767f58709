#include <benchmark/benchmark.h>

#include "suliciu/exact_riemann.hpp"
#include "suliciu/grh_oracle.hpp"
#include "suliciu/lax_friedrichs.hpp"
#include "suliciu/verification.hpp"

namespace {

using namespace suliciu;

const State kLeft{9.0, 5.0, 14.0 / 5.0};
const State kRight{1.0, 3.0, 2.0};
const Params kUnit{};

void BM_SolveDelta(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(solve_delta(kLeft, kRight, kUnit));
}
BENCHMARK(BM_SolveDelta);

void BM_SolveClassical(benchmark::State& state) {
  const State l{1.0, 1.0, 0.0};
  const State r{1.0, 0.0, 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(solve_classical(l, r, kUnit));
}
BENCHMARK(BM_SolveClassical);

void BM_LxfStep(benchmark::State& state) {
  const fv::Grid g{-1.0, 1.0, static_cast<std::size_t>(state.range(0))};
  const fv::Field f = fv::init_riemann(g, kLeft, kRight);
  const double dt = 0.1969889 * g.dx();
  for (auto _ : state) benchmark::DoNotOptimize(fv::lxf_step(f, g.dx(), dt, kUnit));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LxfStep)->Arg(445)->Arg(1780)->Arg(7120);

void BM_ExperimentRun(benchmark::State& state) {
  fv::SimConfig c;
  c.grid = {-1.0, 1.0, static_cast<std::size_t>(state.range(0))};
  c.cfl = 0.1969889;
  c.t_final = 0.1;
  c.policy = fv::TimeStepPolicy::kFixedRatio;
  for (auto _ : state) benchmark::DoNotOptimize(fv::run(c, kLeft, kRight));
}
BENCHMARK(BM_ExperimentRun)->Arg(1780)->Unit(benchmark::kMillisecond);

void BM_WeakResidual(benchmark::State& state) {
  const RiemannSolution sol = solve_delta(kLeft, kRight, kUnit);
  const auto phi = verify::standard_bump(sol, 0.1);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify::weak_residual(sol, phi, kUnit, n));
}
BENCHMARK(BM_WeakResidual)->Arg(16)->Arg(64);

void BM_VerifyDerivatives(benchmark::State& state) {
  const auto sol = solve_delta(kLeft, kRight, kUnit);
  const double h = 1e-4;
  const auto tr = grh::trajectory_from_solution(sol, grh::stencil_times(0.01, 0.1, h));
  for (auto _ : state) benchmark::DoNotOptimize(grh::verify_derivatives(tr, kLeft, kRight, kUnit, h));
}
BENCHMARK(BM_VerifyDerivatives);

}  // namespace

BENCHMARK_MAIN();
