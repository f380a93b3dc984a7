#include <benchmark/benchmark.h>

#include "hrlab/charts.hpp"
#include "hrlab/series.hpp"

namespace {

void BM_EisensteinSeries(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hrlab::eisenstein_series(6, order));
}
BENCHMARK(BM_EisensteinSeries)->Arg(50)->Arg(200)->Arg(800);

void BM_VerifyRamanujan(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hrlab::verify_series_solution(hrlab::SeriesCheck::ramanujan, order));
}
BENCHMARK(BM_VerifyRamanujan)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_VerifyJRelation(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hrlab::verify_series_solution(hrlab::SeriesCheck::j_relation, 100));
}
BENCHMARK(BM_VerifyJRelation)->Unit(benchmark::kMillisecond);

void BM_Curvature(benchmark::State& state) {
  const auto conn = hrlab::gauss_manin_matrix(hrlab::Chart::b_chart);
  for (auto _ : state) benchmark::DoNotOptimize(hrlab::connection_curvature(conn));
}
BENCHMARK(BM_Curvature)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
