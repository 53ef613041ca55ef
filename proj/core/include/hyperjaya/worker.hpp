#pragma once

// Per-worker storage and the phase operations of the hierarchical engine.
// Every function here touches a single worker's state (or the shared
// exchange in a phase where the caller has exclusive access to it), so the
// engine only needs barriers between phases.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hyperjaya/decomposition.hpp"
#include "hyperjaya/objective.hpp"
#include "hyperjaya/rng.hpp"

namespace hyperjaya {

struct WorkerState {
  std::size_t tid = 0;
  std::size_t stripes = 0;  // conf_h horizontal stripes owned
  std::size_t nv = 0;
  std::size_t br = 0;
  std::size_t bc = 0;
  std::size_t m = 0;
  std::size_t first_subpop = 0;  // global id of block (stripe 0, col 0)
  Bounds bounds{};

  std::vector<double> slab;                 // (stripes*br) x m, row-major
  std::vector<double> fitness;              // nv x (stripes*br)
  std::vector<double> local_best;           // stripes x m, nv segments of bc
  std::vector<double> local_worst;          // stripes x m
  std::vector<double> block_best_fitness;   // stripes x nv
  std::vector<double> block_worst_fitness;  // stripes x nv
  std::vector<RngStream> streams;           // stripes x nv
  std::vector<double> scratch;              // bc

  // Variables passed to the objective by block sweeps; divide by m for
  // full-solution evaluation units.
  std::uint64_t evaluated_variables = 0;

  std::size_t slab_rows() const { return stripes * br; }
  std::size_t blocks() const { return stripes * nv; }
  std::size_t block_index(std::size_t stripe, std::size_t col) const {
    return stripe * nv + col;
  }

  double* block_origin(std::size_t stripe, std::size_t col) {
    return slab.data() + stripe * br * m + col * bc;
  }
  const double* block_origin(std::size_t stripe, std::size_t col) const {
    return slab.data() + stripe * br * m + col * bc;
  }
  // Fitness cells of block (stripe, col): br contiguous values.
  double* block_fitness(std::size_t stripe, std::size_t col) {
    return fitness.data() + col * slab_rows() + stripe * br;
  }
  const double* block_fitness(std::size_t stripe, std::size_t col) const {
    return fitness.data() + col * slab_rows() + stripe * br;
  }
  std::span<double> best_segment(std::size_t stripe, std::size_t col) {
    return {local_best.data() + stripe * m + col * bc, bc};
  }
  std::span<double> worst_segment(std::size_t stripe, std::size_t col) {
    return {local_worst.data() + stripe * m + col * bc, bc};
  }
  std::span<const double> best_segment(std::size_t stripe, std::size_t col) const {
    return {local_best.data() + stripe * m + col * bc, bc};
  }
  std::span<const double> worst_segment(std::size_t stripe, std::size_t col) const {
    return {local_worst.data() + stripe * m + col * bc, bc};
  }
};

// A rows x cols window into a row-major matrix plus its rows fitness cells.
struct BlockRef {
  double* origin;
  std::size_t rows;
  std::size_t cols;
  std::size_t stride;
  double* fitness;
};

/// Allocates storage and seeds one stream per owned block from
/// derive_stream_seed(base_seed, global subpop id). Does not initialise.
WorkerState make_worker(const DecompositionPlan& plan, std::size_t tid, Bounds bounds,
                        std::uint64_t base_seed);

/// Fills each owned block row-major from its own stream and evaluates every
/// block row on its bc-slice.
void initialize_worker(WorkerState& worker, const ObjectiveSpec& spec);

/// Strict best/worst scan per block (first index wins ties): writes block best/worst segments and scalars.
void local_memorize(WorkerState& worker);

/// Greedy update of one block against `best`/`worst` (each cols long).
/// Draws r1 then r2 per element. Returns the number of accepted rows.
template <UniformSource Rng>
std::size_t update_block(BlockRef block, std::span<const double> best,
                         std::span<const double> worst, Bounds bounds,
                         const ObjectiveSpec& spec, Rng& rng, std::span<double> scratch) {
  std::size_t accepted = 0;
  for (std::size_t i = 0; i < block.rows; ++i) {
    double* x = block.origin + i * block.stride;
    for (std::size_t j = 0; j < block.cols; ++j) {
      const double r1 = rng.uniform();
      const double r2 = rng.uniform();
      const double a = std::abs(x[j]);
      scratch[j] = std::clamp(x[j] + r1 * (best[j] - a) - r2 * (worst[j] - a), bounds.lower,
                              bounds.upper);
    }
    const double fnew = evaluate(spec, scratch.first(block.cols));
    if (fnew < block.fitness[i]) {
      std::copy_n(scratch.data(), block.cols, x);
      block.fitness[i] = fnew;
      ++accepted;
    }
  }
  return accepted;
}

/// Updates every owned block against its segment of local_best/local_worst,
/// each with its own stream. Returns accepted rows.
std::size_t parallel_block_update(WorkerState& worker, const ObjectiveSpec& spec);

// Shared cooperation surfaces. Level-1 rows are written by their owning
// worker only; the global vectors only by the master.
struct SharedExchange {
  std::size_t threads = 0;
  std::size_t bc = 0;
  std::vector<double> best_rows;  // threads x bc
  std::vector<double> worst_rows;
  std::vector<double> best_row_fitness;  // threads
  std::vector<double> worst_row_fitness;
  std::vector<double> global_best;  // bc
  std::vector<double> global_worst;
  double global_best_fitness = 0.0;
  double global_worst_fitness = 0.0;

  SharedExchange(std::size_t thread_count, std::size_t block_cols);

  std::span<double> best_row(std::size_t tid) { return {best_rows.data() + tid * bc, bc}; }
  std::span<double> worst_row(std::size_t tid) { return {worst_rows.data() + tid * bc, bc}; }
  std::span<const double> best_row(std::size_t tid) const {
    return {best_rows.data() + tid * bc, bc};
  }
  std::span<const double> worst_row(std::size_t tid) const {
    return {worst_rows.data() + tid * bc, bc};
  }
};

/// Writes the worker's best block-best and worst block-worst (first
/// occurrence in (stripe, col) order) into row `tid` of the exchange.
void level1_reduce(const WorkerState& worker, SharedExchange& exchange);

/// Master-only: global best/worst over the level-1 rows, lowest tid on ties.
void level2_reduce(SharedExchange& exchange);

/// Overwrites every block segment of local_best/local_worst with the global
/// vectors.
void copy_global_solutions(WorkerState& worker, const SharedExchange& exchange);

struct MergedSolution {
  double fitness = 0.0;
  std::vector<double> solution;
  std::size_t tid = 0;
  std::size_t row = 0;
};

/// One full-length candidate per owned stripe: the concatenated block-best
/// segments, evaluated on the full objective. Requires local_best current.
std::vector<MergedSolution> merge_worker_rows(const WorkerState& worker,
                                              const ObjectiveSpec& spec);

/// Minimum-fitness merged candidate over all workers, ties to lowest
/// (tid, row).
MergedSolution merge_full_solution(std::span<const WorkerState> workers,
                                   const ObjectiveSpec& spec);

}  // namespace hyperjaya
