#include "hyperjaya/jaya.hpp"

#include <chrono>
#include <cmath>

#include <fmt/format.h>

namespace hyperjaya {

Population::Population(std::size_t n, std::size_t m, Bounds bounds)
    : n_(n), m_(m), bounds_(bounds), values_(n * m, bounds.lower) {}

void validate_bounds(Bounds bounds) {
  if (!(std::isfinite(bounds.lower) && std::isfinite(bounds.upper)) ||
      !(bounds.lower < bounds.upper)) {
    throw ConfigError(fmt::format("invalid bounds [{}, {}]: lower must be < upper",
                                  bounds.lower, bounds.upper));
  }
}

FitnessVector evaluate_population(const Population& pop, const ObjectiveSpec& spec,
                                  std::uint64_t& evaluations) {
  FitnessVector fv(pop.rows());
  for (std::size_t i = 0; i < pop.rows(); ++i) fv[i] = evaluate(spec, pop.row(i));
  evaluations += pop.rows();
  return fv;
}

BestWorst memorize_best_worst(const Population& pop, std::span<const double> fv) {
  if (pop.rows() == 0 || fv.empty()) throw UsageError("memorize on an empty population");
  if (fv.size() != pop.rows()) throw UsageError("fitness vector does not match population");
  BestWorst bw;
  bw.best_fitness = fv[0];
  bw.worst_fitness = fv[0];
  for (std::size_t i = 1; i < fv.size(); ++i) {
    if (fv[i] < bw.best_fitness) {
      bw.best_fitness = fv[i];
      bw.best_index = i;
    }
    if (fv[i] > bw.worst_fitness) {
      bw.worst_fitness = fv[i];
      bw.worst_index = i;
    }
  }
  const auto best = pop.row(bw.best_index);
  const auto worst = pop.row(bw.worst_index);
  bw.best.assign(best.begin(), best.end());
  bw.worst.assign(worst.begin(), worst.end());
  return bw;
}

RunRecord run_sequential(const ObjectiveSpec& spec, std::size_t n, std::size_t m,
                         const JayaConfig& config, std::uint64_t seed, RunTrace* trace) {
  if (m < spec.min_arity) {
    throw ArityError(fmt::format("{} requires at least {} variables, got m = {}",
                                 spec.name, spec.min_arity, m));
  }
  const StopRule stop{config.max_iter, config.target_fitness, config.eval_budget};
  const auto start = std::chrono::steady_clock::now();

  RngStream rng(derive_stream_seed(seed, 0));
  RunRecord record;
  record.seed = seed;
  Population pop = init_population(n, m, bounds(spec), rng);
  FitnessVector fv = evaluate_population(pop, spec, record.evaluations);
  BestWorst bw = memorize_best_worst(pop, fv);

  while (record.iterations < stop.max_iter && !stop.reached_target(bw.best_fitness) &&
         !stop.budget_exhausted(record.evaluations)) {
    update_population(pop, fv, bw, spec, rng, record.evaluations);
    ++record.iterations;
    bw = memorize_best_worst(pop, fv);
    if (trace) {
      trace->best_fitness.push_back(bw.best_fitness);
      trace->evaluations.push_back(record.evaluations);
      if (!trace->target_iteration && stop.reached_target(bw.best_fitness)) {
        trace->target_iteration = record.iterations;
      }
    }
  }

  record.best_fitness = bw.best_fitness;
  record.best_solution = std::move(bw.best);
  record.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return record;
}

}  // namespace hyperjaya
