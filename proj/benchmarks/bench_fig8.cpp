#include <benchmark/benchmark.h>

#include "cjones/asymptotics.hpp"
#include "cjones/fig8.hpp"

namespace {

void BM_DoubleSum(benchmark::State& state) {
  const cjones::RootContext ctx(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cjones::fig8_double_sum(ctx));
}
BENCHMARK(BM_DoubleSum)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_SingleSum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cjones::fig8_single_sum(n));
}
BENCHMARK(BM_SingleSum)->Range(64, 2048);

void BM_LogJn(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cjones::fig8_log_jn(n));
}
BENCHMARK(BM_LogJn)->Range(1 << 10, 1 << 20);

void BM_LeColoredJones(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const cjones::RootContext ctx(n);
  for (auto _ : state) benchmark::DoNotOptimize(cjones::le_colored_jones(n, ctx.q()));
}
BENCHMARK(BM_LeColoredJones)->Range(64, 2048);

void BM_EkholmReport(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cjones::ekholm_report(n));
}
BENCHMARK(BM_EkholmReport)->Arg(2000)->Arg(100000);

}  // namespace
