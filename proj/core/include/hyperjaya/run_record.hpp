#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace hyperjaya {

// Outcome of a single optimisation run (sequential or parallel).
struct RunRecord {
  double best_fitness = 0.0;
  std::vector<double> best_solution;
  std::uint64_t iterations = 0;
  // Objective evaluations in full-solution units; a block evaluation on bc of
  // m variables counts bc/m. Sweeps over a whole population add exactly n.
  std::uint64_t evaluations = 0;
  double wall_time_s = 0.0;
  std::uint64_t seed = 0;
};

// Per-iteration best fitness (index t holds the value after iteration t+1).
struct RunTrace {
  std::vector<double> best_fitness;
  std::vector<std::uint64_t> evaluations;
  std::optional<std::uint64_t> target_iteration;
};

// Stopping rules shared by both engines. max_iter is always enforced; the
// target and budget are optional.
struct StopRule {
  std::uint64_t max_iter = 0;
  std::optional<double> target_fitness;
  std::optional<std::uint64_t> eval_budget;

  bool reached_target(double best) const {
    return target_fitness && best < *target_fitness;
  }
  bool budget_exhausted(std::uint64_t evaluations) const {
    return eval_budget && evaluations >= *eval_budget;
  }
};

}  // namespace hyperjaya
