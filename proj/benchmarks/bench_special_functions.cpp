#include <benchmark/benchmark.h>

#include <complex>

#include "cjones/special_functions.hpp"

namespace {

void BM_Lobachevsky(benchmark::State& state) {
  double theta = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cjones::lobachevsky(theta));
    theta += 0.001;
  }
}
BENCHMARK(BM_Lobachevsky);

void BM_Li2(benchmark::State& state) {
  double arg = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cjones::li2(std::polar(0.9, arg)));
    arg += 0.001;
  }
}
BENCHMARK(BM_Li2);

}  // namespace
