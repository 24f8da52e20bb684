#include <benchmark/benchmark.h>

#include "tol/dimensions.hpp"
#include "tol/zoo.hpp"

namespace {

void BM_LittlestoneDim(benchmark::State& state) {
  const auto cls = tol::random_class(6, 2, state.range(0), 42);
  for (auto _ : state) benchmark::DoNotOptimize(tol::littlestone_dim(cls));
}
BENCHMARK(BM_LittlestoneDim)->Arg(16)->Arg(32)->Arg(64);

void BM_ThresholdDim(benchmark::State& state) {
  const auto cls = tol::thresholds(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tol::threshold_dim(cls));
}
BENCHMARK(BM_ThresholdDim)->Arg(8)->Arg(12)->Arg(16);

void BM_DsDim(benchmark::State& state) {
  const auto cls = tol::ds_claim_class(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tol::ds_dim(cls));
}
BENCHMARK(BM_DsDim)->Arg(2)->Arg(3);

}  // namespace
