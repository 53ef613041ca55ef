// hyperjaya: run HHCPJaya experiments, print decomposition plans and compare
// result files with the rank-sum test.

#include <cstdio>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "hyperjaya/decomposition.hpp"
#include "hyperjaya/errors.hpp"
#include "hyperjaya/experiment.hpp"
#include "hyperjaya/objective.hpp"
#include "hyperjaya/report.hpp"
#include "hyperjaya/stats.hpp"

namespace {

enum ExitCode : int { kOk = 0, kConfig = 2, kPlan = 3, kIo = 4 };

using hyperjaya::ExperimentMode;
using hyperjaya::FunctionId;

struct RunOptions {
  std::string function = "sphere";
  std::size_t n = 64;
  std::size_t m = 512;
  std::vector<std::size_t> threads{1};
  std::size_t conf_h = 1;
  std::size_t conf_v = 1;
  std::optional<std::uint64_t> max_iter;
  std::optional<double> target;
  std::optional<std::uint64_t> budget;
  std::size_t repeats = hyperjaya::kDefaultRepeats;
  std::uint64_t seed = 1;
  std::string mode = "quality";
  std::string out = "results.csv";
  std::string plot_format = "dat";
  bool quiet = false;
};

struct PlanOptions {
  std::string function = "sphere";
  std::size_t n = 64;
  std::size_t m = 512;
  std::vector<std::size_t> threads{1, 2, 4, 8, 16};
  std::size_t conf_h = 1;
  std::size_t conf_v = 1;
};

struct CompareOptions {
  std::string a;
  std::string b;
  std::optional<std::size_t> threads;
};

FunctionId require_function(const std::string& name) {
  auto id = hyperjaya::parse_function(name);
  if (!id) {
    throw hyperjaya::ConfigError(fmt::format(
        "unknown function '{}' (expected sphere, rastrigin, ackley, griewank, rosenbrock)",
        name));
  }
  return *id;
}

void warn_oversubscription(const std::vector<std::size_t>& threads) {
  const unsigned hw = std::thread::hardware_concurrency();
  for (auto t : threads) {
    if (hw != 0 && t > hw) {
      fmt::print(stderr,
                 "warning: {} workers exceed the {} hardware threads; results are valid, "
                 "timings are not representative\n",
                 t, hw);
    }
  }
}

int cmd_run(const RunOptions& opt) {
  hyperjaya::ExperimentSpec spec;
  spec.function = require_function(opt.function);
  const auto mode = hyperjaya::parse_mode(opt.mode);
  if (!mode) throw hyperjaya::ConfigError(fmt::format("unknown mode '{}'", opt.mode));
  const auto plot_format = hyperjaya::parse_plot_format(opt.plot_format);
  if (!plot_format) {
    throw hyperjaya::ConfigError(fmt::format("unknown plot format '{}'", opt.plot_format));
  }
  spec.mode = *mode;
  spec.n = opt.n;
  spec.m = opt.m;
  spec.threads = opt.threads;
  spec.conf_h = opt.conf_h;
  spec.conf_v = opt.conf_v;
  if (opt.max_iter) spec.max_iter = *opt.max_iter;
  spec.target_fitness = opt.target;
  spec.eval_budget = opt.budget;
  spec.repeats = opt.repeats;
  spec.base_seed = opt.seed;
  spec = hyperjaya::with_mode_defaults(spec);
  hyperjaya::validate(spec);
  warn_oversubscription(spec.threads);

  const auto result = hyperjaya::run_experiment(
      spec, [&](const hyperjaya::CellResult& cell, const hyperjaya::RunRecord& rec) {
        if (!opt.quiet) {
          fmt::print(stderr, "threads={} repeat={} fitness={:.6g} iterations={} time={:.4f}s\n",
                     cell.threads, cell.records.size() - 1, rec.best_fitness, rec.iterations,
                     rec.wall_time_s);
        }
      });

  const auto paths = hyperjaya::output_paths(opt.out, *plot_format);
  hyperjaya::emit_csv(result, paths.runs);

  fmt::print("{} n={} m={} conf_h={} conf_v={} mode={}\n",
             hyperjaya::objective(spec.function).name, spec.n, spec.m, spec.conf_h, spec.conf_v,
             hyperjaya::mode_name(spec.mode));
  fmt::print("{:>7} {:>12} {:>12} {:>10} {:>10} {:>10} {:>8}\n", "threads", "mean", "stddev",
             "time_s", "time_sd", "iters", "success");
  std::size_t valid_cells = 0;
  for (const auto& cell : result.cells) {
    if (!cell.summary) {
      fmt::print("{:>7} {:>12} {:>12} {:>10} {:>10} {:>10} {:>8}   ({})\n", cell.threads, "*",
                 "*", "*", "*", "*", "*", cell.plan_error);
      continue;
    }
    ++valid_cells;
    const auto& s = *cell.summary;
    fmt::print("{:>7} {:>12.4e} {:>12.4e} {:>10.4f} {:>10.4f} {:>10.1f} {:>8.2f}\n", cell.threads,
               s.mean_fitness, s.stddev_fitness, s.mean_time_s, s.stddev_time_s,
               s.mean_iterations, s.success_rate);
  }

  const auto by_threads = hyperjaya::summaries_by_threads(result);
  const bool plotted = by_threads.contains(1);
  if (plotted) {
    const auto rows = hyperjaya::speedup_report(by_threads);
    const std::string title =
        fmt::format("{} n={} m={} conf_h={} conf_v={}", hyperjaya::objective(spec.function).name,
                    spec.n, spec.m, spec.conf_h, spec.conf_v);
    hyperjaya::write_text_file(paths.speedup_plot,
                               *plot_format == hyperjaya::PlotFormat::svg
                                   ? hyperjaya::format_speedup_svg(title, rows)
                                   : hyperjaya::format_speedup_dat(title, rows));
    if (spec.mode == ExperimentMode::timing) {
      fmt::print("\n{:>7} {:>10} {:>8}\n", "threads", "time_s", "speedup");
      for (const auto& r : rows) {
        fmt::print("{:>7} {:>10.4f} {:>8.2f}\n", r.threads, r.mean_time_s, r.speedup);
      }
    }
  } else if (spec.mode == ExperimentMode::timing) {
    throw hyperjaya::UsageError("timing mode needs threads=1 in --threads for the speedup baseline");
  }

  if (plotted) {
    fmt::print("wrote {}, {} and {}\n", paths.runs.string(), paths.summary.string(),
               paths.speedup_plot.string());
  } else {
    fmt::print("wrote {} and {}\n", paths.runs.string(), paths.summary.string());
  }
  return valid_cells == 0 ? kPlan : kOk;
}

int cmd_explain_plan(const PlanOptions& opt) {
  const auto& spec = hyperjaya::objective(require_function(opt.function));
  fmt::print("n={} m={} conf_h={} conf_v={} function={}\n", opt.n, opt.m, opt.conf_h, opt.conf_v,
             spec.name);
  std::vector<hyperjaya::DecompositionPlan> plans;
  std::vector<std::string> failures;
  for (auto t : opt.threads) {
    try {
      plans.push_back(hyperjaya::plan(opt.n, opt.m, t, opt.conf_h, opt.conf_v, spec));
    } catch (const hyperjaya::PlanError& e) {
      failures.push_back(fmt::format("{:>6} *  {}", t, e.what()));
    }
  }
  fmt::print("{}", hyperjaya::format_plan_table(plans));
  for (const auto& f : failures) fmt::print("{}\n", f);
  return failures.empty() ? kOk : kPlan;
}

std::vector<double> fitness_column(const std::vector<hyperjaya::CsvRun>& runs,
                                   std::optional<std::size_t> threads) {
  std::vector<double> values;
  for (const auto& r : runs) {
    if (r.valid && (!threads || r.threads == *threads)) values.push_back(r.best_fitness);
  }
  return values;
}

int cmd_compare(const CompareOptions& opt) {
  const auto a = fitness_column(hyperjaya::read_runs_csv(opt.a), opt.threads);
  const auto b = fitness_column(hyperjaya::read_runs_csv(opt.b), opt.threads);
  if (a.empty() || b.empty()) {
    throw hyperjaya::UsageError("both files need at least one valid run to compare");
  }
  const auto r = hyperjaya::wilcoxon_rank_sum(a, b);
  fmt::print("samples: {} vs {}\n", a.size(), b.size());
  fmt::print("rank_sum: {}\n", r.statistic);
  fmt::print("method: {}\n", r.degenerate ? "degenerate (all tied)"
                             : r.exact    ? "exact"
                                          : "normal approximation");
  if (!r.exact && !r.degenerate) fmt::print("z: {:.6f}\n", r.z);
  fmt::print("p_value: {:.6g}\n", r.p_value);
  fmt::print("significant at {}: {}\n", hyperjaya::kSignificanceLevel,
             r.significant() ? "yes" : "no");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"HHCPJaya: hierarchical hyper-population parallel Jaya optimiser"};
  app.require_subcommand(1);

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "Run a seeded experiment and write CSV files");
  run_cmd->add_option("--function", run.function, "sphere|rastrigin|ackley|griewank|rosenbrock")
      ->required();
  run_cmd->add_option("--n", run.n, "Population size")->required();
  run_cmd->add_option("--m", run.m, "Number of variables")->required();
  run_cmd->add_option("--threads", run.threads, "Worker counts, e.g. 1,2,4,8")
      ->delimiter(',')
      ->required();
  run_cmd->add_option("--conf-h", run.conf_h, "Horizontal multiplier")->required();
  run_cmd->add_option("--conf-v", run.conf_v, "Vertical multiplier")->required();
  run_cmd->add_option("--max-iter", run.max_iter, "Iteration cap (default 10000)");
  run_cmd->add_option("--target", run.target,
                      "Target fitness: stops convergence runs; success threshold otherwise "
                      "(default 1e-7)");
  run_cmd->add_option("--budget", run.budget,
                      "Evaluation budget (default 128000 in quality/timing modes)");
  run_cmd->add_option("--repeats", run.repeats, "Seeded repeats per thread count")->required();
  run_cmd->add_option("--seed", run.seed, "Base seed; repeat r uses seed + r")->required();
  run_cmd->add_option("--mode", run.mode, "quality|convergence|timing")->required();
  run_cmd->add_option("--out", run.out, "Per-run CSV path")->required();
  run_cmd->add_option("--plot-format", run.plot_format, "Speedup plot: dat|svg");
  run_cmd->add_flag("--quiet", run.quiet, "Suppress per-run progress");

  PlanOptions plan_opt;
  auto* plan_cmd = app.add_subcommand("explain-plan", "Print the block decomposition table");
  plan_cmd->add_option("--function", plan_opt.function, "Objective (checks arity)");
  plan_cmd->add_option("--n", plan_opt.n, "Population size");
  plan_cmd->add_option("--m", plan_opt.m, "Number of variables");
  plan_cmd->add_option("--threads", plan_opt.threads, "Worker counts")->delimiter(',');
  plan_cmd->add_option("--conf-h", plan_opt.conf_h, "Horizontal multiplier");
  plan_cmd->add_option("--conf-v", plan_opt.conf_v, "Vertical multiplier");

  CompareOptions cmp;
  auto* cmp_cmd = app.add_subcommand("compare", "Two-sided Wilcoxon rank-sum on best_fitness");
  cmp_cmd->add_option("csv_a", cmp.a, "First per-run CSV")->required();
  cmp_cmd->add_option("csv_b", cmp.b, "Second per-run CSV")->required();
  cmp_cmd->add_option("--threads", cmp.threads, "Only compare rows with this thread count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  try {
    if (*run_cmd) return cmd_run(run);
    if (*plan_cmd) return cmd_explain_plan(plan_opt);
    if (*cmp_cmd) return cmd_compare(cmp);
  } catch (const hyperjaya::PlanError& e) {
    fmt::print(stderr, "plan error: {}\n", e.what());
    return kPlan;
  } catch (const hyperjaya::IoError& e) {
    fmt::print(stderr, "i/o error: {}\n", e.what());
    return kIo;
  } catch (const hyperjaya::Error& e) {
    fmt::print(stderr, "configuration error: {}\n", e.what());
    return kConfig;
  }
  return kConfig;
}
