#include <benchmark/benchmark.h>

#include "credcycle/bank.hpp"
#include "credcycle/engine.hpp"
#include "credcycle/market.hpp"
#include "credcycle/presets.hpp"
#include "credcycle/rng.hpp"

using namespace credcycle;

static void BM_ClearMarket(benchmark::State& state) {
  double psi = 0.1;
  for (auto _ : state) {
    MarketState s = clear_market(0.8, psi, 0.05, 0.0);
    benchmark::DoNotOptimize(s.cleared_price);
  }
}
BENCHMARK(BM_ClearMarket);

static void BM_RequiredLiquidation(benchmark::State& state) {
  for (auto _ : state) {
    double s = required_liquidation(2.5, 0.3, 0.85);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_RequiredLiquidation);

static void BM_RunPath(benchmark::State& state) {
  ScenarioConfig cfg = preset_config("securitization-fair");
  std::uint64_t i = 0;
  for (auto _ : state) {
    auto rng = path_rng(42, i++);
    PathResult r = run_path(cfg, rng);
    benchmark::DoNotOptimize(r.final_equity);
  }
}
BENCHMARK(BM_RunPath);

static void BM_RunPathLevered(benchmark::State& state) {
  ScenarioConfig cfg = preset_config("leverage-firesale");
  std::uint64_t i = 0;
  for (auto _ : state) {
    auto rng = path_rng(42, i++);
    PathResult r = run_path(cfg, rng);
    benchmark::DoNotOptimize(r.liquidation);
  }
}
BENCHMARK(BM_RunPathLevered);

static void BM_MonteCarlo(benchmark::State& state) {
  ScenarioConfig cfg = preset_config("securitization-fair");
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    RunSummary s = run_monte_carlo(cfg, n, 42);
    benchmark::DoNotOptimize(s.n_paths);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n));
}
BENCHMARK(BM_MonteCarlo)->Arg(100)->Arg(1000);

BENCHMARK_MAIN();
