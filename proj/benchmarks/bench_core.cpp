#include <benchmark/benchmark.h>

#include "splineframes/dual.hpp"
#include "splineframes/gram.hpp"
#include "splineframes/regions.hpp"
#include "splineframes/verify.hpp"

using namespace splineframes;

namespace {

// a point inside T_m for N = 2, a at 60% of the T_m a-range, b mid-interval
LatticeParams point_in_tm(int m) {
  const double N = 2.0;
  const double a_lo = m == 1 ? 0.0 : N * (m - 2) / (2.0 * m - 3);
  const double a = a_lo + 0.6 * (N / 2.0 - a_lo);
  const BInterval iv = *tm_bounds(N, a, m);
  return LatticeParams::make(N, a, 0.5 * (iv.lo + iv.hi));
}

void BM_BuildGram(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Window g = Window::bspline(2);
  const LatticeParams p = point_in_tm(m);
  for (auto _ : state) benchmark::DoNotOptimize(build_gram(g, p, m, -0.1 * p.a));
}
BENCHMARK(BM_BuildGram)->Arg(1)->Arg(3)->Arg(8)->Arg(16);

void BM_DetDirect(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const LatticeParams p = point_in_tm(m);
  const GramMatrix G = build_gram(Window::bspline(2), p, m, -0.1 * p.a);
  for (auto _ : state) benchmark::DoNotOptimize(det_direct(G));
}
BENCHMARK(BM_DetDirect)->Arg(3)->Arg(8)->Arg(16);

void BM_DetFormula(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Window g = Window::bspline(2);
  const LatticeParams p = point_in_tm(m);
  for (auto _ : state) benchmark::DoNotOptimize(det_formula(g, p, m, -0.1 * p.a));
}
BENCHMARK(BM_DetFormula)->Arg(3)->Arg(8)->Arg(16);

void BM_SolveDualAt(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Window g = Window::bspline(2);
  const LatticeParams p = point_in_tm(m);
  for (auto _ : state) benchmark::DoNotOptimize(solve_dual_at(g, p, m, -0.1 * p.a));
}
BENCHMARK(BM_SolveDualAt)->Arg(3)->Arg(8)->Arg(16);

void BM_BuildDual(benchmark::State& state) {
  const Window g = Window::bspline(2);
  const LatticeParams p = LatticeParams::make(2, 0.9, 8.0 / 9.0);
  const int samples = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_dual(g, p, 3, samples));
  state.SetItemsProcessed(state.iterations() * samples);
}
BENCHMARK(BM_BuildDual)->Arg(64)->Arg(512)->Unit(benchmark::kMicrosecond);

void BM_DualityResidual(benchmark::State& state) {
  const Window g = Window::bspline(2);
  const LatticeParams p = LatticeParams::make(2, 0.75, 35.0 / 36.0);
  const DualWindow d = build_dual(g, p, 3, 512);
  DualityOptions opts;
  opts.lookup = state.range(0) == 0 ? DualLookup::Resolve : DualLookup::Sample;
  for (auto _ : state) benchmark::DoNotOptimize(duality_residual(g, d, p, 3, opts));
}
BENCHMARK(BM_DualityResidual)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_RegionMap(benchmark::State& state) {
  const int res = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(region_map(2, 2, 2, res));
  state.SetItemsProcessed(state.iterations() * res * res);
}
BENCHMARK(BM_RegionMap)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);

void BM_WalnutBound(benchmark::State& state) {
  const Window g = Window::bspline(3);
  const LatticeParams p = LatticeParams::make(3, 0.8, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(bessel_bound_walnut(g, p, 1024));
}
BENCHMARK(BM_WalnutBound)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
