#include <benchmark/benchmark.h>

#include "tol/engine.hpp"
#include "tol/strategies.hpp"
#include "tol/zoo.hpp"

namespace {

// The large-regime run: implicit branch counting over 2^17 witnesses.
void BM_BfsAdversary_TreeCube(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  const auto cls = tol::tree_cube_class(depth);
  const int n = std::min((1 << (depth + 1)) - 1, 65536);
  for (auto _ : state) {
    auto adversary = tol::make_bfs_tree_adversary();
    auto learner = tol::make_halving_learner();
    benchmark::DoNotOptimize(tol::run_realizable(cls, *adversary, *learner, n).mistake_count());
  }
}
BENCHMARK(BM_BfsAdversary_TreeCube)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_AgnosticMw(benchmark::State& state) {
  const auto cls = tol::thresholds(7);
  for (auto _ : state) {
    const auto report = tol::run_agnostic(
        cls, [](tol::Rng rng) { return tol::make_random_label_adversary(rng); },
        [](tol::Rng rng) { return tol::make_mw_learner(rng); }, 200,
        state.range(0), 7);
    benchmark::DoNotOptimize(report.mean_regret);
  }
}
BENCHMARK(BM_AgnosticMw)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

}  // namespace
