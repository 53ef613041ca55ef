#pragma once

#include <cstddef>
#include <span>

namespace hyperjaya {

struct StatsSummary {
  std::size_t runs = 0;
  double mean_fitness = 0.0;
  double stddev_fitness = 0.0;  // sample (n-1) deviation; 0 for one run
  double mean_time_s = 0.0;
  double stddev_time_s = 0.0;
  double mean_iterations = 0.0;
  double success_rate = 0.0;  // fraction of runs with fitness < target
};

struct RunRecord;

/// Mean and sample standard deviation, one pass (Welford).
struct MeanStd {
  double mean;
  double stddev;
};
MeanStd mean_and_stddev(std::span<const double> values);

StatsSummary summarize(std::span<const RunRecord> records, double target_fitness);

inline constexpr double kSignificanceLevel = 0.05;

struct RankSumResult {
  double statistic = 0.0;  // sum of the midranks of sample a
  double p_value = 1.0;    // two-sided
  double z = 0.0;          // normal score; 0 when the exact path is used
  bool exact = false;
  bool degenerate = false;  // every observation tied: no evidence, p = 1
  bool significant() const { return p_value < kSignificanceLevel; }
};

/// Two-sided Wilcoxon rank-sum test with midranks for ties.
///
/// Small samples (|a| + |b| <= kExactRankSumLimit) use the exact permutation
/// distribution of the midrank sum; larger samples use the normal
/// approximation with tie-corrected variance and continuity correction.
inline constexpr std::size_t kExactRankSumLimit = 20;
RankSumResult wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b);

}  // namespace hyperjaya
