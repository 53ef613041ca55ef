#include "hyperjaya/worker.hpp"

#include "hyperjaya/errors.hpp"

namespace hyperjaya {

WorkerState make_worker(const DecompositionPlan& plan, std::size_t tid, Bounds bounds,
                        std::uint64_t base_seed) {
  if (tid >= plan.threads) throw UsageError("worker id out of range");
  WorkerState w;
  w.tid = tid;
  w.stripes = plan.conf_h;
  w.nv = plan.nv;
  w.br = plan.br;
  w.bc = plan.bc;
  w.m = plan.m;
  w.first_subpop = tid * plan.conf_h * plan.nv;
  w.bounds = bounds;
  w.slab.assign(w.slab_rows() * w.m, 0.0);
  w.fitness.assign(w.nv * w.slab_rows(), 0.0);
  w.local_best.assign(w.stripes * w.m, 0.0);
  w.local_worst.assign(w.stripes * w.m, 0.0);
  w.block_best_fitness.assign(w.blocks(), 0.0);
  w.block_worst_fitness.assign(w.blocks(), 0.0);
  w.streams.reserve(w.blocks());
  for (std::size_t b = 0; b < w.blocks(); ++b) {
    w.streams.emplace_back(derive_stream_seed(base_seed, w.first_subpop + b));
  }
  w.scratch.assign(w.bc, 0.0);
  return w;
}

void initialize_worker(WorkerState& w, const ObjectiveSpec& spec) {
  const double width = w.bounds.upper - w.bounds.lower;
  for (std::size_t s = 0; s < w.stripes; ++s) {
    for (std::size_t c = 0; c < w.nv; ++c) {
      RngStream& rng = w.streams[w.block_index(s, c)];
      double* origin = w.block_origin(s, c);
      double* fit = w.block_fitness(s, c);
      for (std::size_t i = 0; i < w.br; ++i) {
        double* x = origin + i * w.m;
        for (std::size_t j = 0; j < w.bc; ++j) {
          x[j] = std::clamp(w.bounds.lower + rng.uniform() * width, w.bounds.lower,
                            w.bounds.upper);
        }
        fit[i] = evaluate(spec, std::span<const double>(x, w.bc));
      }
      w.evaluated_variables += w.br * w.bc;
    }
  }
}

void local_memorize(WorkerState& w) {
  for (std::size_t s = 0; s < w.stripes; ++s) {
    for (std::size_t c = 0; c < w.nv; ++c) {
      const double* fit = w.block_fitness(s, c);
      std::size_t best = 0;
      std::size_t worst = 0;
      for (std::size_t i = 1; i < w.br; ++i) {
        if (fit[i] < fit[best]) best = i;
        if (fit[i] > fit[worst]) worst = i;
      }
      const double* origin = w.block_origin(s, c);
      std::copy_n(origin + best * w.m, w.bc, w.best_segment(s, c).begin());
      std::copy_n(origin + worst * w.m, w.bc, w.worst_segment(s, c).begin());
      w.block_best_fitness[w.block_index(s, c)] = fit[best];
      w.block_worst_fitness[w.block_index(s, c)] = fit[worst];
    }
  }
}

std::size_t parallel_block_update(WorkerState& w, const ObjectiveSpec& spec) {
  std::size_t accepted = 0;
  for (std::size_t s = 0; s < w.stripes; ++s) {
    for (std::size_t c = 0; c < w.nv; ++c) {
      BlockRef block{w.block_origin(s, c), w.br, w.bc, w.m, w.block_fitness(s, c)};
      accepted += update_block(block, w.best_segment(s, c), w.worst_segment(s, c), w.bounds,
                               spec, w.streams[w.block_index(s, c)], w.scratch);
      w.evaluated_variables += w.br * w.bc;
    }
  }
  return accepted;
}

SharedExchange::SharedExchange(std::size_t thread_count, std::size_t block_cols)
    : threads(thread_count),
      bc(block_cols),
      best_rows(thread_count * block_cols, 0.0),
      worst_rows(thread_count * block_cols, 0.0),
      best_row_fitness(thread_count, 0.0),
      worst_row_fitness(thread_count, 0.0),
      global_best(block_cols, 0.0),
      global_worst(block_cols, 0.0) {}

void level1_reduce(const WorkerState& w, SharedExchange& exchange) {
  std::size_t best = 0;
  std::size_t worst = 0;
  for (std::size_t b = 1; b < w.blocks(); ++b) {
    if (w.block_best_fitness[b] < w.block_best_fitness[best]) best = b;
    if (w.block_worst_fitness[b] > w.block_worst_fitness[worst]) worst = b;
  }
  const auto best_seg = w.best_segment(best / w.nv, best % w.nv);
  const auto worst_seg = w.worst_segment(worst / w.nv, worst % w.nv);
  std::copy(best_seg.begin(), best_seg.end(), exchange.best_row(w.tid).begin());
  std::copy(worst_seg.begin(), worst_seg.end(), exchange.worst_row(w.tid).begin());
  exchange.best_row_fitness[w.tid] = w.block_best_fitness[best];
  exchange.worst_row_fitness[w.tid] = w.block_worst_fitness[worst];
}

void level2_reduce(SharedExchange& exchange) {
  std::size_t best = 0;
  std::size_t worst = 0;
  for (std::size_t t = 1; t < exchange.threads; ++t) {
    if (exchange.best_row_fitness[t] < exchange.best_row_fitness[best]) best = t;
    if (exchange.worst_row_fitness[t] > exchange.worst_row_fitness[worst]) worst = t;
  }
  const auto best_row = exchange.best_row(best);
  const auto worst_row = exchange.worst_row(worst);
  std::copy(best_row.begin(), best_row.end(), exchange.global_best.begin());
  std::copy(worst_row.begin(), worst_row.end(), exchange.global_worst.begin());
  exchange.global_best_fitness = exchange.best_row_fitness[best];
  exchange.global_worst_fitness = exchange.worst_row_fitness[worst];
}

void copy_global_solutions(WorkerState& w, const SharedExchange& exchange) {
  for (std::size_t s = 0; s < w.stripes; ++s) {
    for (std::size_t c = 0; c < w.nv; ++c) {
      std::copy(exchange.global_best.begin(), exchange.global_best.end(),
                w.best_segment(s, c).begin());
      std::copy(exchange.global_worst.begin(), exchange.global_worst.end(),
                w.worst_segment(s, c).begin());
    }
  }
}

std::vector<MergedSolution> merge_worker_rows(const WorkerState& w, const ObjectiveSpec& spec) {
  std::vector<MergedSolution> merged;
  merged.reserve(w.stripes);
  for (std::size_t s = 0; s < w.stripes; ++s) {
    MergedSolution candidate;
    candidate.tid = w.tid;
    candidate.row = s;
    const auto row = std::span<const double>(w.local_best).subspan(s * w.m, w.m);
    candidate.solution.assign(row.begin(), row.end());
    candidate.fitness = evaluate(spec, candidate.solution);
    merged.push_back(std::move(candidate));
  }
  return merged;
}

MergedSolution merge_full_solution(std::span<const WorkerState> workers,
                                   const ObjectiveSpec& spec) {
  if (workers.empty()) throw UsageError("merge over zero workers");
  MergedSolution best;
  bool have = false;
  for (const auto& w : workers) {
    for (auto& candidate : merge_worker_rows(w, spec)) {
      if (!have || candidate.fitness < best.fitness) {
        best = std::move(candidate);
        have = true;
      }
    }
  }
  return best;
}

}  // namespace hyperjaya
