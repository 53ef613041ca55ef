#include "hyperjaya/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "hyperjaya/errors.hpp"
#include "hyperjaya/run_record.hpp"

namespace hyperjaya {

MeanStd mean_and_stddev(std::span<const double> values) {
  if (values.empty()) throw UsageError("statistics of an empty sample");
  double mean = 0.0;
  double m2 = 0.0;
  std::size_t count = 0;
  for (double v : values) {
    ++count;
    const double delta = v - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (v - mean);
  }
  const double var = count > 1 ? m2 / static_cast<double>(count - 1) : 0.0;
  return {mean, std::sqrt(std::max(var, 0.0))};
}

StatsSummary summarize(std::span<const RunRecord> records, double target_fitness) {
  if (records.empty()) throw UsageError("summarize needs at least one record");
  std::vector<double> fitness;
  std::vector<double> time;
  std::vector<double> iterations;
  std::size_t successes = 0;
  for (const auto& r : records) {
    fitness.push_back(r.best_fitness);
    time.push_back(r.wall_time_s);
    iterations.push_back(static_cast<double>(r.iterations));
    if (r.best_fitness < target_fitness) ++successes;
  }
  StatsSummary s;
  s.runs = records.size();
  const auto f = mean_and_stddev(fitness);
  const auto t = mean_and_stddev(time);
  s.mean_fitness = f.mean;
  s.stddev_fitness = f.stddev;
  s.mean_time_s = t.mean;
  s.stddev_time_s = t.stddev;
  s.mean_iterations = mean_and_stddev(iterations).mean;
  s.success_rate = static_cast<double>(successes) / static_cast<double>(records.size());
  return s;
}

namespace {

// Midranks of the pooled sample, doubled so ties stay integral.
std::vector<std::int64_t> doubled_midranks(std::span<const double> pooled) {
  std::vector<std::size_t> order(pooled.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return pooled[x] < pooled[y]; });
  std::vector<std::int64_t> ranks(pooled.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && pooled[order[j + 1]] == pooled[order[i]]) ++j;
    // positions i..j (0-based) share rank ((i+1)+(j+1))/2; doubled: i+j+2
    for (std::size_t q = i; q <= j; ++q) ranks[order[q]] = static_cast<std::int64_t>(i + j + 2);
    i = j + 1;
  }
  return ranks;
}

// Exact two-sided p: probability over all C(N, n1) equally likely label
// assignments that |2W - n1(N+1)| is at least the observed deviation.
double exact_two_sided_p(const std::vector<std::int64_t>& ranks, std::size_t n1,
                         std::int64_t observed) {
  const std::size_t total = ranks.size();
  const std::int64_t max_sum = std::accumulate(ranks.begin(), ranks.end(), std::int64_t{0});
  // ways[c][s] = number of c-subsets of the ranks seen so far with doubled sum s
  std::vector<std::vector<double>> ways(n1 + 1,
                                        std::vector<double>(static_cast<std::size_t>(max_sum) + 1));
  ways[0][0] = 1.0;
  for (std::size_t idx = 0; idx < total; ++idx) {
    const auto r = static_cast<std::size_t>(ranks[idx]);
    for (std::size_t c = std::min(n1, idx + 1); c >= 1; --c) {
      auto& dst = ways[c];
      const auto& src = ways[c - 1];
      for (std::size_t s = dst.size(); s-- > r;) dst[s] += src[s - r];
    }
  }
  const std::int64_t center = static_cast<std::int64_t>(n1 * (total + 1));
  const std::int64_t deviation = std::llabs(observed - center);
  double extreme = 0.0;
  double all = 0.0;
  for (std::size_t s = 0; s < ways[n1].size(); ++s) {
    all += ways[n1][s];
    if (std::llabs(static_cast<std::int64_t>(s) - center) >= deviation) extreme += ways[n1][s];
  }
  return std::min(1.0, extreme / all);
}

}  // namespace

RankSumResult wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw UsageError("rank-sum test needs two non-empty samples");
  std::vector<double> pooled(a.begin(), a.end());
  pooled.insert(pooled.end(), b.begin(), b.end());
  const auto ranks = doubled_midranks(pooled);

  const std::size_t n1 = a.size();
  const std::size_t n2 = b.size();
  const std::size_t total = n1 + n2;
  const std::int64_t doubled_w =
      std::accumulate(ranks.begin(), ranks.begin() + static_cast<std::ptrdiff_t>(n1),
                      std::int64_t{0});

  RankSumResult result;
  result.statistic = static_cast<double>(doubled_w) / 2.0;

  const bool all_tied = std::all_of(pooled.begin(), pooled.end(),
                                    [&](double v) { return v == pooled.front(); });
  if (all_tied) {
    result.degenerate = true;
    result.p_value = 1.0;
    return result;
  }

  if (total <= kExactRankSumLimit) {
    result.exact = true;
    result.p_value = exact_two_sided_p(ranks, n1, doubled_w);
    return result;
  }

  // Tie correction: sum over tie groups of t^3 - t.
  std::vector<double> sorted = pooled;
  std::sort(sorted.begin(), sorted.end());
  double tie_term = 0.0;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const auto t = static_cast<double>(j - i);
    tie_term += t * t * t - t;
    i = j;
  }
  const auto dn1 = static_cast<double>(n1);
  const auto dn2 = static_cast<double>(n2);
  const auto dn = static_cast<double>(total);
  const double mean = dn1 * (dn + 1.0) / 2.0;
  const double variance = dn1 * dn2 / 12.0 * ((dn + 1.0) - tie_term / (dn * (dn - 1.0)));
  if (!(variance > 0.0)) {
    result.degenerate = true;
    result.p_value = 1.0;
    return result;
  }
  const double deviation = std::max(0.0, std::abs(result.statistic - mean) - 0.5);
  result.z = std::copysign(deviation / std::sqrt(variance), result.statistic - mean);
  result.p_value = std::min(1.0, std::erfc(deviation / std::sqrt(variance) / std::sqrt(2.0)));
  return result;
}

}  // namespace hyperjaya
