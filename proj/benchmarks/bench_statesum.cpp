#include <benchmark/benchmark.h>

#include "cjones/statesum.hpp"

namespace {

void BM_EvaluateFigureEight(benchmark::State& state) {
  const auto d = cjones::builtin_diagram("4_1");
  const cjones::RootContext ctx(static_cast<int>(state.range(0)));
  const cjones::EvaluateOptions opts{0, static_cast<unsigned>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(cjones::evaluate(d, ctx, opts));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EvaluateFigureEight)
    ->ArgsProduct({{16, 64, 256, 1024}, {1, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_ReduceConstraints(benchmark::State& state) {
  const auto d = cjones::builtin_diagram("4_1");
  for (auto _ : state) benchmark::DoNotOptimize(cjones::reduce_constraints(d, 0));
}
BENCHMARK(BM_ReduceConstraints);

void BM_SymbolTable(benchmark::State& state) {
  const cjones::RootContext ctx(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cjones::q_symbol_table(ctx));
}
BENCHMARK(BM_SymbolTable)->Range(64, 16384);

}  // namespace
