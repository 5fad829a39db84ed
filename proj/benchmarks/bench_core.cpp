#include <benchmark/benchmark.h>

#include "kahler/curvature.hpp"
#include "kahler/geometry.hpp"
#include "kahler/positivity.hpp"
#include "kahler/radial_potential.hpp"

namespace {

using namespace kahler;

const FamilyParams kParams = FamilyParams::make(4.0, 1.0, 3);

void BM_Jet(benchmark::State& state) {
  const LogRadius u(static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(jet(kParams, u));
}
BENCHMARK(BM_Jet)->Arg(0)->Arg(1)->Arg(1000);

void BM_Abc(benchmark::State& state) {
  const LogRadius u(static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(abc(kParams, u));
}
BENCHMARK(BM_Abc)->Arg(1)->Arg(1000);

void BM_HscForm(benchmark::State& state) {
  const CurvatureScalars sc = abc(kParams, LogRadius(5.0));
  double p = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hsc_form(sc, p, 0.7));
    p += 1e-9;
  }
}
BENCHMARK(BM_HscForm);

void BM_GeodesicDistance(benchmark::State& state) {
  const LogRadius u(static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(geodesic_distance(kParams, u));
}
BENCHMARK(BM_GeodesicDistance)->Arg(10)->Arg(1000000)->Unit(benchmark::kMicrosecond);

void BM_CheckConditions(benchmark::State& state) {
  const auto grid = log_grid(1e-6, 1e4, 200);
  for (auto _ : state) benchmark::DoNotOptimize(check_conditions(kParams, grid));
}
BENCHMARK(BM_CheckConditions)->Unit(benchmark::kMillisecond);

void BM_MakeProfile(benchmark::State& state) {
  const auto grid = log_grid(1e-6, 1e4, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(make_profile(kParams, grid));
}
BENCHMARK(BM_MakeProfile)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
