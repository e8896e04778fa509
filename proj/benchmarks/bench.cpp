#include <benchmark/benchmark.h>

#include "semitoric/actions.hpp"
#include "semitoric/elliptic.hpp"
#include "semitoric/reduced.hpp"
#include "semitoric/taylor.hpp"
#include "semitoric/twisting.hpp"
#include "semitoric/vanishing.hpp"

using namespace semitoric;

static void BM_EllipticPi(benchmark::State& st) {
  double n = -0.7;
  for (auto _ : st) {
    benchmark::DoNotOptimize(ellip_Pi(n, 0.6));
    n = n < 0.5 ? n + 1e-3 : -0.7;
  }
}
BENCHMARK(BM_EllipticPi);

static void BM_QuarticRoots(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(quartic_roots(0.5, 0.3, 0.1));
}
BENCHMARK(BM_QuarticRoots);

static void BM_ActionArccos(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(action_I(0.5, 0.3, 0.1));
}
BENCHMARK(BM_ActionArccos);

static void BM_ActionElliptic(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(action_I_elliptic(0.5, 0.3, 0.1));
}
BENCHMARK(BM_ActionElliptic);

static void BM_PeriodRotation(benchmark::State& st) {
  for (auto _ : st) {
    benchmark::DoNotOptimize(period_T(0.5, 0.3, 0.1));
    benchmark::DoNotOptimize(rotation_W(0.5, 0.3, 0.1));
  }
}
BENCHMARK(BM_PeriodRotation);

static void BM_VanishingContour(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(vanishing_contour(0.5, 0.01, 0.02));
}
BENCHMARK(BM_VanishingContour)->Unit(benchmark::kMillisecond);

static void BM_TaylorNumeric(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(taylor_coeffs_numeric(0.5));
}
BENCHMARK(BM_TaylorNumeric)->Unit(benchmark::kMillisecond)->Iterations(3);

static void BM_ImageCloud(benchmark::State& st) {
  const GridSpec g{1, static_cast<int>(st.range(0)), 40, 64};
  for (auto _ : st) benchmark::DoNotOptimize(sample_privileged_image(0.5, 1, g));
  st.SetItemsProcessed(st.iterations() * g.size());
}
BENCHMARK(BM_ImageCloud)->Arg(38)->Arg(151)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
