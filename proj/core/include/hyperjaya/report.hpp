#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperjaya/experiment.hpp"

namespace hyperjaya {

inline constexpr std::string_view kRunsHeader =
    "function,n,m,threads,conf_h,conf_v,repeat,seed,best_fitness,iterations,evaluations,"
    "wall_time_s";
inline constexpr std::string_view kSummaryHeader =
    "function,n,m,threads,conf_h,conf_v,runs,mean_fitness,stddev_fitness,mean_time_s,"
    "stddev_time_s,mean_iterations,success_rate";

/// Per-run rows ordered by thread count, then repeat. Reals use 17
/// significant digits so parsing reproduces them exactly. Invalid cells emit
/// one row of NA markers.
std::string format_runs_csv(const ExperimentResult& result);
std::string format_summary_csv(const ExperimentResult& result);

// One parsed row of a per-run file. `valid` is false for NA rows.
struct CsvRun {
  std::string function;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t threads = 0;
  std::size_t conf_h = 0;
  std::size_t conf_v = 0;
  bool valid = false;
  std::size_t repeat = 0;
  std::uint64_t seed = 0;
  double best_fitness = 0.0;
  std::uint64_t iterations = 0;
  std::uint64_t evaluations = 0;
  double wall_time_s = 0.0;
};

std::vector<CsvRun> parse_runs_csv(std::string_view text);
std::vector<CsvRun> read_runs_csv(const std::filesystem::path& path);

/// Writes `content` to `path`, throwing IoError with the path on failure.
void write_text_file(const std::filesystem::path& path, std::string_view content);

// Output files derived from the per-run path: results.csv gives
// results_summary.csv and results_speedup.{dat,svg}.
struct OutputPaths {
  std::filesystem::path runs;
  std::filesystem::path summary;
  std::filesystem::path speedup_plot;
};

enum class PlotFormat { dat, svg };
std::optional<PlotFormat> parse_plot_format(std::string_view name);

OutputPaths output_paths(const std::filesystem::path& runs_path, PlotFormat format);

/// Writes the per-run and summary files; returns the paths written.
OutputPaths emit_csv(const ExperimentResult& result, const std::filesystem::path& runs_path);

/// gnuplot-style table: "# threads mean_time_s speedup" then one row per count.
std::string format_speedup_dat(std::string_view title, const std::vector<SpeedupRow>& rows);
/// Standalone SVG line chart of speedup against thread count.
std::string format_speedup_svg(std::string_view title, const std::vector<SpeedupRow>& rows);

}  // namespace hyperjaya
