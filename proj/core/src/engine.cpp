#include "hyperjaya/engine.hpp"

#include <chrono>
#include <condition_variable>
#include <exception>
#include <mutex>
#include <thread>

#include <fmt/format.h>

#include "hyperjaya/errors.hpp"

namespace hyperjaya {
namespace {

// Reusable barrier that can be cancelled: once cancel() is called every
// pending and future wait returns false immediately.
class CancellableBarrier {
 public:
  explicit CancellableBarrier(std::size_t count) : count_(count) {}

  bool arrive_and_wait() {
    std::unique_lock lock(mutex_);
    if (cancelled_) return false;
    const std::uint64_t phase = phase_;
    if (++arrived_ == count_) {
      arrived_ = 0;
      ++phase_;
      cv_.notify_all();
      return true;
    }
    cv_.wait(lock, [&] { return phase_ != phase || cancelled_; });
    return !cancelled_;
  }

  void cancel() {
    {
      std::lock_guard lock(mutex_);
      cancelled_ = true;
    }
    cv_.notify_all();
  }

 private:
  std::mutex mutex_;
  std::condition_variable cv_;
  std::size_t count_;
  std::size_t arrived_ = 0;
  std::uint64_t phase_ = 0;
  bool cancelled_ = false;
};

}  // namespace

// State shared by the worker team for the duration of one run.
struct HhcpEngine::RunContext {
  explicit RunContext(const DecompositionPlan& plan)
      : sync(plan.threads),
        exchange(plan.threads, plan.bc),
        slot_fitness(plan.threads, 0.0),
        slot_solution(plan.threads, std::vector<double>(plan.m, 0.0)),
        slot_variables(plan.threads, 0) {}

  CancellableBarrier sync;
  SharedExchange exchange;

  // Termination slots, one per worker: best merged candidate and the
  // worker's running count of evaluated variables.
  std::vector<double> slot_fitness;
  std::vector<std::vector<double>> slot_solution;
  std::vector<std::uint64_t> slot_variables;

  std::mutex error_mutex;
  std::exception_ptr error;

  // Master-only bookkeeping.
  RunRecord record;
  RunTrace trace;
  std::uint64_t merge_evaluations = 0;

  void fail(std::exception_ptr e) {
    {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::move(e);
    }
    sync.cancel();
  }

  // Waits for the whole team; false means another worker failed.
  bool barrier() { return sync.arrive_and_wait(); }
};

HhcpEngine::HhcpEngine(EngineConfig config)
    : config_(std::move(config)), spec_(&objective(config_.function)) {
  const auto& p = config_.plan;
  // Re-derive so a hand-built plan cannot bypass divisibility or arity checks.
  const DecompositionPlan checked = plan(p.n, p.m, p.threads, p.conf_h, p.conf_v, *spec_);
  if (!(checked == p)) throw PlanError("decomposition plan is inconsistent with its inputs");
  workers_.reserve(p.threads);
  for (std::size_t t = 0; t < p.threads; ++t) {
    workers_.push_back(make_worker(p, t, bounds(*spec_), config_.base_seed));
  }
}

void HhcpEngine::worker_main(std::size_t tid, RunContext& ctx) {
  const auto& p = config_.plan;
  const ObjectiveSpec& spec = *spec_;
  const StopRule stop{config_.max_iter, config_.target_fitness, config_.eval_budget};
  WorkerState& self = workers_[tid];
  const bool master = tid == 0;
  // Running minimum of the merged fitness. Every worker computes the same
  // value from the same slots, so the stop decision is unanimous.
  double best_so_far = 0.0;

  // Publishes this worker's merged candidate, then every worker reads all
  // slots and reaches the same stop decision.
  auto termination_check = [&](std::uint64_t iteration) -> std::optional<bool> {
    local_memorize(self);
    auto rows = merge_worker_rows(self, spec);
    std::size_t pick = 0;
    for (std::size_t r = 1; r < rows.size(); ++r) {
      if (rows[r].fitness < rows[pick].fitness) pick = r;
    }
    ctx.slot_fitness[tid] = rows[pick].fitness;
    ctx.slot_solution[tid] = std::move(rows[pick].solution);
    ctx.slot_variables[tid] = self.evaluated_variables;
    if (!ctx.barrier()) return std::nullopt;

    std::size_t best = 0;
    std::uint64_t variables = 0;
    for (std::size_t t = 0; t < p.threads; ++t) {
      if (ctx.slot_fitness[t] < ctx.slot_fitness[best]) best = t;
      variables += ctx.slot_variables[t];
    }
    const std::uint64_t evaluations = variables / p.m;
    const bool improved = iteration == 0 || ctx.slot_fitness[best] < best_so_far;
    if (improved) best_so_far = ctx.slot_fitness[best];

    if (master) {
      ctx.merge_evaluations += p.threads * p.conf_h;
      if (improved) {
        ctx.record.best_fitness = best_so_far;
        ctx.record.best_solution = ctx.slot_solution[best];
      }
      ctx.record.iterations = iteration;
      ctx.record.evaluations = evaluations;
      if (iteration > 0) {
        ctx.trace.best_fitness.push_back(best_so_far);
        ctx.trace.evaluations.push_back(evaluations);
        if (!ctx.trace.target_iteration && stop.reached_target(best_so_far)) {
          ctx.trace.target_iteration = iteration;
        }
      }
    }
    return iteration >= stop.max_iter || stop.reached_target(best_so_far) ||
           stop.budget_exhausted(evaluations);
  };

  try {
    initialize_worker(self, spec);
    auto done = termination_check(0);
    if (!done) return;
    std::uint64_t iteration = 0;
    while (!*done) {
      ++iteration;
      local_memorize(self);
      if (!ctx.barrier()) return;

      parallel_block_update(self, spec);
      local_memorize(self);
      level1_reduce(self, ctx.exchange);
      if (!ctx.barrier()) return;

      if (master) {
        level2_reduce(ctx.exchange);
        if (observer_) observer_(IterationView{iteration, p, workers_, ctx.exchange});
      }
      if (!ctx.barrier()) return;

      copy_global_solutions(self, ctx.exchange);
      parallel_block_update(self, spec);

      done = termination_check(iteration);
      if (!done) return;
    }
  } catch (...) {
    ctx.fail(std::current_exception());
  }
}

EngineResult HhcpEngine::run() {
  if (ran_) throw UsageError("HhcpEngine::run may only be called once");
  ran_ = true;

  const auto start = std::chrono::steady_clock::now();
  RunContext ctx(config_.plan);
  {
    std::vector<std::jthread> team;
    team.reserve(config_.plan.threads - 1);
    for (std::size_t t = 1; t < config_.plan.threads; ++t) {
      team.emplace_back([this, t, &ctx] { worker_main(t, ctx); });
    }
    worker_main(0, ctx);
  }
  if (ctx.error) std::rethrow_exception(ctx.error);

  EngineResult result;
  result.record = std::move(ctx.record);
  result.record.seed = config_.base_seed;
  result.record.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.trace = std::move(ctx.trace);
  result.merge_evaluations = ctx.merge_evaluations;
  return result;
}

Population HhcpEngine::assemble_population() const {
  const auto& p = config_.plan;
  Population pop(p.n, p.m, bounds(*spec_));
  for (const auto& w : workers_) {
    const std::size_t first_row = w.tid * w.slab_rows();
    for (std::size_t r = 0; r < w.slab_rows(); ++r) {
      for (std::size_t j = 0; j < p.m; ++j) pop.at(first_row + r, j) = w.slab[r * p.m + j];
    }
  }
  return pop;
}

std::vector<double> HhcpEngine::block_fitness(std::size_t subpop_id) const {
  const auto extent = block_extent(config_.plan, subpop_id);
  const WorkerState& w = workers_[extent.owner_tid];
  const std::size_t local = subpop_id - w.first_subpop;
  const double* cells = w.block_fitness(local / w.nv, local % w.nv);
  return {cells, cells + w.br};
}

EngineResult run_hhcp(const EngineConfig& config) { return HhcpEngine(config).run(); }

}  // namespace hyperjaya
