#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hyperjaya/decomposition.hpp"
#include "hyperjaya/jaya.hpp"
#include "hyperjaya/objective.hpp"
#include "hyperjaya/run_record.hpp"
#include "hyperjaya/worker.hpp"

namespace hyperjaya {

struct EngineConfig {
  DecompositionPlan plan;
  FunctionId function = FunctionId::sphere;
  std::uint64_t max_iter = 0;
  std::optional<double> target_fitness;
  std::optional<std::uint64_t> eval_budget;
  std::uint64_t base_seed = 0;
};

struct EngineResult {
  RunRecord record;
  RunTrace trace;
  // Full-length evaluations spent merging block bests into complete
  // solutions; not part of record.evaluations.
  std::uint64_t merge_evaluations = 0;
};

// Read-only view handed to an observer by the master after the level-2
// reduction, while every other worker is parked at a barrier.
struct IterationView {
  std::uint64_t iteration;  // 1-based
  const DecompositionPlan& plan;
  std::span<const WorkerState> workers;
  const SharedExchange& exchange;
};

/// Hierarchical hyper-population cooperative parallel Jaya.
///
/// `plan.threads` long-lived workers evolve their blocks in bulk-synchronous
/// iterations: local memorize | local update, memorize, level-1 reduce |
/// master level-2 reduce | copy globals, global update, then a termination
/// check on the merged full-length solution. Every random draw comes from
/// the stream of the block it updates, so results do not depend on
/// scheduling.
class HhcpEngine {
 public:
  using Observer = std::function<void(const IterationView&)>;

  explicit HhcpEngine(EngineConfig config);

  void set_observer(Observer observer) { observer_ = std::move(observer); }

  /// Runs to termination. May be called once.
  EngineResult run();

  const EngineConfig& config() const { return config_; }
  std::span<const WorkerState> workers() const { return workers_; }

  /// The full n x m population reassembled from the worker slabs.
  Population assemble_population() const;
  /// Fitness cells (br values) of a block, by global subpopulation id.
  std::vector<double> block_fitness(std::size_t subpop_id) const;

 private:
  struct RunContext;
  void worker_main(std::size_t tid, RunContext& ctx);

  EngineConfig config_;
  const ObjectiveSpec* spec_;
  std::vector<WorkerState> workers_;
  Observer observer_;
  bool ran_ = false;
};

EngineResult run_hhcp(const EngineConfig& config);

}  // namespace hyperjaya
