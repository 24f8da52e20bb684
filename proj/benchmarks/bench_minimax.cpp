#include <benchmark/benchmark.h>

#include "tol/minimax.hpp"
#include "tol/zoo.hpp"

namespace {

void BM_FixedSequenceValue_Cube(benchmark::State& state) {
  const auto cls = tol::full_cube(static_cast<int>(state.range(0)));
  std::vector<int> seq(static_cast<std::size_t>(cls.domain_size()));
  for (std::size_t i = 0; i < seq.size(); ++i) seq[i] = static_cast<int>(i);
  for (auto _ : state) benchmark::DoNotOptimize(tol::fixed_sequence_value(cls, seq));
}
BENCHMARK(BM_FixedSequenceValue_Cube)->Arg(3)->Arg(4)->Arg(5);

void BM_TransductiveValue_Thresholds(benchmark::State& state) {
  const auto cls = tol::thresholds(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(tol::transductive_value(cls, cls.domain_size()));
}
BENCHMARK(BM_TransductiveValue_Thresholds)->Arg(4)->Arg(5)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
