#include <benchmark/benchmark.h>

#include <cmath>

#include "twofilm/twofilm.hpp"

using namespace twofilm;

namespace {

const State kLeft{1.24, 0.90, 2.2, 2.50};
const State kRight{1.5, 1.56, 1.7, 0.90};

State riemann_ic(double x) { return x < 0 ? kLeft : kRight; }

void BM_Solve(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(solve(kLeft, kRight));
}
BENCHMARK(BM_Solve);

void BM_SolveCase2(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(solve(kRight, kLeft, {SolveOptions::Ordering::Report}));
}
BENCHMARK(BM_SolveCase2);

void BM_SampleRaref2(benchmark::State& st) {
  const RiemannFan fan = solve(kLeft, kRight);
  double xi = 1.7;
  for (auto _ : st) {
    benchmark::DoNotOptimize(sample(fan, xi));
    xi = xi > 3.5 ? 1.7 : xi + 0.01;
  }
}
BENCHMARK(BM_SampleRaref2);

void BM_GodunovFlux(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(godunov_flux(kLeft, kRight));
}
BENCHMARK(BM_GodunovFlux);

void BM_Step(benchmark::State& st) {
  const Grid1D grid(-2, 12, static_cast<int>(st.range(0)));
  const Scheme scheme = st.range(1) == 0 ? Scheme::Godunov : Scheme::LaxFriedrichs;
  // a developed profile rather than the initial jump
  const CellField field = run(grid, riemann_ic, {scheme, 0.45, 0.5}).field;
  const double dt = cfl_dt(field, grid.dx(), 0.45);
  for (auto _ : st) benchmark::DoNotOptimize(step(field, grid, dt, scheme));
  st.SetItemsProcessed(st.iterations() * grid.n_cells());
}
BENCHMARK(BM_Step)->ArgsProduct({{320, 1280}, {0, 1}});

void BM_Run(benchmark::State& st) {
  const Grid1D grid(-2, 12, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(run(grid, riemann_ic, {Scheme::Godunov, 0.45, 1.0}));
}
BENCHMARK(BM_Run)->Arg(160)->Arg(320)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
