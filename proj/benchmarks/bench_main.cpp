#include <benchmark/benchmark.h>

#include "schlicht/catalog.hpp"
#include "schlicht/grunsky.hpp"
#include "schlicht/koebe.hpp"
#include "schlicht/membership.hpp"
#include "schlicht/series.hpp"

using namespace schlicht;

namespace {

TruncatedSeries test_series(int order) {
  TruncatedSeries s(order);
  s.at(0) = 1.0;
  for (int k = 1; k <= order; ++k) s.at(k) = Complex(0.5 / k, 0.25 / (k + 1));
  return s;
}

void BM_SeriesMul(benchmark::State& state) {
  const TruncatedSeries a = test_series(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(series_mul(a, a));
}
BENCHMARK(BM_SeriesMul)->Arg(16)->Arg(64)->Arg(256);

void BM_SeriesLog(benchmark::State& state) {
  const TruncatedSeries a = test_series(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(series_log(a));
}
BENCHMARK(BM_SeriesLog)->Arg(16)->Arg(64)->Arg(256);

void BM_SeriesCompose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const TruncatedSeries outer = test_series(n);
  TruncatedSeries inner = test_series(n);
  inner.at(0) = 0.0;
  for (auto _ : state) benchmark::DoNotOptimize(series_compose(outer, inner));
}
BENCHMARK(BM_SeriesCompose)->Arg(16)->Arg(64);

void BM_UMembership(benchmark::State& state) {
  const AnalyticFunction f = parse_function("f1");
  SamplingPlan plan = SamplingPlan::with_outer_radius(0.999);
  plan.angular_count = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(u_membership(f, plan));
}
BENCHMARK(BM_UMembership)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_TwoPointSup(benchmark::State& state) {
  const AnalyticFunction k = parse_function("koebe");
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(two_point_sup(k, 0.3, grid, true));
}
BENCHMARK(BM_TwoPointSup)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_GrunskyTable(benchmark::State& state) {
  const AnalyticFunction f = parse_function("f1");
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(grunsky_table(f, order));
}
BENCHMARK(BM_GrunskyTable)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
