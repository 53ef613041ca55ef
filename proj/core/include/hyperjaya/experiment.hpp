#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperjaya/decomposition.hpp"
#include "hyperjaya/objective.hpp"
#include "hyperjaya/run_record.hpp"
#include "hyperjaya/stats.hpp"

namespace hyperjaya {

enum class ExperimentMode { quality, convergence, timing };

std::optional<ExperimentMode> parse_mode(std::string_view name);
std::string_view mode_name(ExperimentMode mode);

inline constexpr double kConvergenceTarget = 1e-7;
inline constexpr std::uint64_t kConvergenceIterationCap = 10000;
inline constexpr std::uint64_t kQualityEvaluationBudget = 128000;
inline constexpr std::size_t kDefaultRepeats = 20;

// One experiment: `repeats` seeded runs for every thread count.
//
// In convergence mode the target stops each run. In quality and timing modes
// runs go to the budget / iteration cap, and the target only defines the
// success rate.
struct ExperimentSpec {
  FunctionId function = FunctionId::sphere;
  std::size_t n = 64;
  std::size_t m = 512;
  std::vector<std::size_t> threads{1};
  std::size_t conf_h = 1;
  std::size_t conf_v = 1;
  std::uint64_t max_iter = kConvergenceIterationCap;
  std::optional<double> target_fitness;
  std::optional<std::uint64_t> eval_budget;
  std::size_t repeats = kDefaultRepeats;
  std::uint64_t base_seed = 1;
  ExperimentMode mode = ExperimentMode::quality;

  double success_threshold() const { return target_fitness.value_or(kConvergenceTarget); }
  StopRule stop_rule() const;
};

/// Fills the mode's protocol defaults where the spec leaves them unset:
/// convergence → target 1e-7, cap 10000; quality/timing → budget 128000.
ExperimentSpec with_mode_defaults(ExperimentSpec spec);

/// Throws ConfigError for repeats == 0, an empty thread list, or a mode
/// without any effective stopping rule.
void validate(const ExperimentSpec& spec);

// Results for one thread count. `plan_error` is set (and records empty) when
// the decomposition is invalid for this cell, e.g. Rosenbrock with bc = 1.
struct CellResult {
  std::size_t threads = 0;
  std::optional<DecompositionPlan> plan;
  std::string plan_error;
  std::vector<RunRecord> records;
  std::vector<RunTrace> traces;
  std::optional<StatsSummary> summary;

  bool valid() const { return plan.has_value(); }
};

struct ExperimentResult {
  ExperimentSpec spec;
  std::vector<CellResult> cells;
};

using RunCallback = std::function<void(const CellResult&, const RunRecord&)>;

/// Runs every (thread count, repeat) pair with seed base_seed + repeat.
ExperimentResult run_experiment(const ExperimentSpec& spec, const RunCallback& on_run = {});

struct SpeedupRow {
  std::size_t threads;
  double mean_time_s;
  double speedup;
};

/// speedup(t) = mean_time(1) / mean_time(t). Throws UsageError without a
/// 1-thread entry.
std::vector<SpeedupRow> speedup_report(const std::map<std::size_t, StatsSummary>& by_threads);

std::map<std::size_t, StatsSummary> summaries_by_threads(const ExperimentResult& result);

}  // namespace hyperjaya
