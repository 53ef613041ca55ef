#include "hyperjaya/experiment.hpp"

#include <fmt/format.h>

#include "hyperjaya/engine.hpp"
#include "hyperjaya/errors.hpp"

namespace hyperjaya {

std::optional<ExperimentMode> parse_mode(std::string_view name) {
  if (name == "quality") return ExperimentMode::quality;
  if (name == "convergence") return ExperimentMode::convergence;
  if (name == "timing") return ExperimentMode::timing;
  return std::nullopt;
}

std::string_view mode_name(ExperimentMode mode) {
  switch (mode) {
    case ExperimentMode::quality:
      return "quality";
    case ExperimentMode::convergence:
      return "convergence";
    case ExperimentMode::timing:
      return "timing";
  }
  return "unknown";
}

StopRule ExperimentSpec::stop_rule() const {
  StopRule rule;
  rule.max_iter = max_iter;
  rule.eval_budget = eval_budget;
  if (mode == ExperimentMode::convergence) rule.target_fitness = target_fitness;
  return rule;
}

ExperimentSpec with_mode_defaults(ExperimentSpec spec) {
  if (spec.mode == ExperimentMode::convergence) {
    if (!spec.target_fitness) spec.target_fitness = kConvergenceTarget;
  } else if (!spec.eval_budget) {
    spec.eval_budget = kQualityEvaluationBudget;
  }
  return spec;
}

void validate(const ExperimentSpec& spec) {
  if (spec.repeats == 0) throw ConfigError("repeats must be >= 1");
  if (spec.threads.empty()) throw ConfigError("at least one thread count is required");
  for (auto t : spec.threads) {
    if (t == 0) throw ConfigError("thread counts must be >= 1");
  }
  if (spec.n == 0 || spec.m == 0) throw ConfigError("n and m must be >= 1");
  if (spec.conf_h == 0 || spec.conf_v == 0) throw ConfigError("conf_h and conf_v must be >= 1");
}

ExperimentResult run_experiment(const ExperimentSpec& spec, const RunCallback& on_run) {
  validate(spec);
  ExperimentResult result;
  result.spec = spec;
  const ObjectiveSpec& objective_spec = objective(spec.function);
  const StopRule stop = spec.stop_rule();

  for (std::size_t threads : spec.threads) {
    CellResult cell;
    cell.threads = threads;
    try {
      cell.plan = plan(spec.n, spec.m, threads, spec.conf_h, spec.conf_v, objective_spec);
    } catch (const PlanError& e) {
      cell.plan_error = e.what();
      result.cells.push_back(std::move(cell));
      continue;
    }

    for (std::size_t r = 0; r < spec.repeats; ++r) {
      EngineConfig config;
      config.plan = *cell.plan;
      config.function = spec.function;
      config.max_iter = stop.max_iter;
      config.target_fitness = stop.target_fitness;
      config.eval_budget = stop.eval_budget;
      config.base_seed = spec.base_seed + r;
      EngineResult run = run_hhcp(config);
      cell.records.push_back(std::move(run.record));
      cell.traces.push_back(std::move(run.trace));
      if (on_run) on_run(cell, cell.records.back());
    }
    cell.summary = summarize(cell.records, spec.success_threshold());
    result.cells.push_back(std::move(cell));
  }
  return result;
}

std::vector<SpeedupRow> speedup_report(const std::map<std::size_t, StatsSummary>& by_threads) {
  const auto baseline = by_threads.find(1);
  if (baseline == by_threads.end()) {
    throw UsageError("speedup needs a 1-thread baseline");
  }
  std::vector<SpeedupRow> rows;
  for (const auto& [threads, summary] : by_threads) {
    const double speedup =
        threads == 1 ? 1.0 : baseline->second.mean_time_s / summary.mean_time_s;
    rows.push_back({threads, summary.mean_time_s, speedup});
  }
  return rows;
}

std::map<std::size_t, StatsSummary> summaries_by_threads(const ExperimentResult& result) {
  std::map<std::size_t, StatsSummary> out;
  for (const auto& cell : result.cells) {
    if (cell.summary) out.emplace(cell.threads, *cell.summary);
  }
  return out;
}

}  // namespace hyperjaya
