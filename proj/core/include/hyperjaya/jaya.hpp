#pragma once

// Sequential Jaya: population initialisation, evaluation, best/worst
// memorisation and the greedy move-toward-best / away-from-worst update.
// Also the reference oracle for the parallel engine.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hyperjaya/errors.hpp"
#include "hyperjaya/objective.hpp"
#include "hyperjaya/rng.hpp"
#include "hyperjaya/run_record.hpp"

namespace hyperjaya {

/// Row-major n x m candidate matrix with its box bounds.
class Population {
 public:
  Population(std::size_t n, std::size_t m, Bounds bounds);

  std::size_t rows() const { return n_; }
  std::size_t cols() const { return m_; }
  Bounds bounds() const { return bounds_; }

  std::span<double> row(std::size_t i) { return {values_.data() + i * m_, m_}; }
  std::span<const double> row(std::size_t i) const {
    return {values_.data() + i * m_, m_};
  }
  double& at(std::size_t i, std::size_t j) { return values_[i * m_ + j]; }
  double at(std::size_t i, std::size_t j) const { return values_[i * m_ + j]; }

  std::span<const double> values() const { return values_; }

 private:
  std::size_t n_;
  std::size_t m_;
  Bounds bounds_;
  std::vector<double> values_;
};

using FitnessVector = std::vector<double>;

struct BestWorst {
  std::vector<double> best;
  std::vector<double> worst;
  double best_fitness = 0.0;
  double worst_fitness = 0.0;
  std::size_t best_index = 0;
  std::size_t worst_index = 0;
};

struct JayaConfig {
  std::uint64_t max_iter = 0;
  std::optional<double> target_fitness;
  std::optional<std::uint64_t> eval_budget;
};

void validate_bounds(Bounds bounds);

/// X[i][j] = lower + u * (upper - lower), u drawn row-major.
template <UniformSource Rng>
Population init_population(std::size_t n, std::size_t m, Bounds bounds, Rng& rng) {
  validate_bounds(bounds);
  if (n == 0 || m == 0) throw ConfigError("population needs n >= 1 and m >= 1");
  Population pop(n, m, bounds);
  const double width = bounds.upper - bounds.lower;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      pop.at(i, j) = std::clamp(bounds.lower + rng.uniform() * width,
                                bounds.lower, bounds.upper);
    }
  }
  return pop;
}

FitnessVector evaluate_population(const Population& pop, const ObjectiveSpec& spec,
                                  std::uint64_t& evaluations);

/// Strict-inequality scan: the lowest index wins ties for both best and worst.
BestWorst memorize_best_worst(const Population& pop, std::span<const double> fv);

/// One greedy update sweep. For every (i, j) draws r1 then r2, moves
///   x' = x + r1 (best_j - |x|) - r2 (worst_j - |x|),
/// clamps to the bounds, and replaces row i only when f(x') < fv[i].
/// Returns the number of accepted rows.
template <UniformSource Rng>
std::size_t update_population(Population& pop, FitnessVector& fv, const BestWorst& bw,
                              const ObjectiveSpec& spec, Rng& rng,
                              std::uint64_t& evaluations) {
  const std::size_t m = pop.cols();
  const Bounds b = pop.bounds();
  std::vector<double> candidate(m);
  std::size_t accepted = 0;
  for (std::size_t i = 0; i < pop.rows(); ++i) {
    auto row = pop.row(i);
    for (std::size_t j = 0; j < m; ++j) {
      const double r1 = rng.uniform();
      const double r2 = rng.uniform();
      const double x = row[j];
      const double moved = x + r1 * (bw.best[j] - std::abs(x)) - r2 * (bw.worst[j] - std::abs(x));
      candidate[j] = std::clamp(moved, b.lower, b.upper);
    }
    const double fnew = evaluate(spec, candidate);
    ++evaluations;
    if (fnew < fv[i]) {
      std::copy(candidate.begin(), candidate.end(), row.begin());
      fv[i] = fnew;
      ++accepted;
    }
  }
  return accepted;
}

/// Full sequential run: init, evaluate, then memorize/update until max_iter,
/// best < target, or evaluations >= budget. `trace` (optional) receives the
/// best fitness after every iteration.
RunRecord run_sequential(const ObjectiveSpec& spec, std::size_t n, std::size_t m,
                         const JayaConfig& config, std::uint64_t seed,
                         RunTrace* trace = nullptr);

}  // namespace hyperjaya
