#include <vector>

#include <benchmark/benchmark.h>

#include "hyperjaya/engine.hpp"
#include "hyperjaya/objective.hpp"
#include "hyperjaya/worker.hpp"

namespace {

using hyperjaya::FunctionId;

void BM_Evaluate(benchmark::State& state) {
  const auto& spec = hyperjaya::objective(static_cast<FunctionId>(state.range(0)));
  const auto m = static_cast<std::size_t>(state.range(1));
  hyperjaya::RngStream rng(1);
  std::vector<double> x(m);
  for (auto& v : x) v = spec.lower_bound + rng.uniform() * (spec.upper_bound - spec.lower_bound);
  for (auto _ : state) benchmark::DoNotOptimize(hyperjaya::evaluate(spec, x));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(m));
  state.SetLabel(std::string(spec.name));
}
BENCHMARK(BM_Evaluate)->ArgsProduct({{0, 1, 2, 3, 4}, {64, 512}});

// One greedy sweep over a br x bc block inside an m-wide slab.
void BM_UpdateBlock(benchmark::State& state) {
  const auto& spec = hyperjaya::objective(FunctionId::rastrigin);
  const auto br = static_cast<std::size_t>(state.range(0));
  const auto bc = static_cast<std::size_t>(state.range(1));
  const std::size_t m = 512;
  hyperjaya::RngStream rng(7);
  std::vector<double> slab(br * m);
  for (auto& v : slab) v = -5.0 + 10.0 * rng.uniform();
  std::vector<double> fitness(br);
  for (std::size_t i = 0; i < br; ++i) {
    fitness[i] = hyperjaya::evaluate(spec, std::span<const double>(slab.data() + i * m, bc));
  }
  const std::vector<double> best(bc, 0.0);
  const std::vector<double> worst(bc, 4.0);
  std::vector<double> scratch(bc);
  for (auto _ : state) {
    hyperjaya::BlockRef block{slab.data(), br, bc, m, fitness.data()};
    benchmark::DoNotOptimize(hyperjaya::update_block(block, best, worst, hyperjaya::bounds(spec),
                                                     spec, rng, scratch));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(br * bc));
}
BENCHMARK(BM_UpdateBlock)->Args({8, 64})->Args({4, 16})->Args({64, 512});

// Whole engine runs of a fixed iteration count; wall time per run.
void BM_EngineIterations(benchmark::State& state) {
  const auto threads = static_cast<std::size_t>(state.range(0));
  const auto conf_v = static_cast<std::size_t>(state.range(1));
  hyperjaya::EngineConfig config;
  config.function = FunctionId::griewank;
  config.plan = hyperjaya::plan(64, 512, threads, 1, conf_v,
                                hyperjaya::objective(config.function));
  config.max_iter = 20;
  for (auto _ : state) {
    config.base_seed = static_cast<std::uint64_t>(state.iterations());
    benchmark::DoNotOptimize(hyperjaya::run_hhcp(config).record.best_fitness);
  }
  state.SetItemsProcessed(state.iterations() * 20);
}
BENCHMARK(BM_EngineIterations)
    ->Args({1, 1})
    ->Args({2, 1})
    ->Args({4, 1})
    ->Args({4, 4})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
