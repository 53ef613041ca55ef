#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hyperjaya/objective.hpp"

namespace hyperjaya {

/// Hyper-population block decomposition of an n x m population.
///
/// The matrix is cut into nh = conf_h * threads horizontal stripes and
/// nv = conf_v * threads vertical stripes, giving k = nh * nv uniform blocks
/// of br x bc. Worker t owns the conf_h consecutive horizontal stripes
/// starting at t * conf_h, i.e. l = conf_h * nv blocks.
struct DecompositionPlan {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t threads = 0;
  std::size_t conf_h = 0;
  std::size_t conf_v = 0;
  std::size_t nh = 0;
  std::size_t nv = 0;
  std::size_t k = 0;
  std::size_t br = 0;
  std::size_t bc = 0;
  std::size_t l = 0;

  friend bool operator==(const DecompositionPlan&, const DecompositionPlan&) = default;
};

struct RowColRange {
  std::size_t begin;
  std::size_t end;
  std::size_t size() const { return end - begin; }
};

struct BlockExtent {
  std::size_t subpop_id;
  std::size_t owner_tid;
  RowColRange rows;
  RowColRange cols;
};

// Storage shapes a worker needs for its l blocks.
struct LocalLayout {
  std::size_t tid;
  std::size_t first_row;  // global row of the slab's first row
  std::size_t slab_rows;  // conf_h * br
  std::size_t slab_cols;  // m
  std::size_t fitness_rows;  // nv
  std::size_t fitness_cols;  // conf_h * br
  std::size_t best_rows;  // conf_h
  std::size_t best_cols;  // m (nv segments of bc)
};

/// Throws PlanError on zero inputs or when nh does not divide n or nv does
/// not divide m, and ArityError when bc < spec.min_arity.
DecompositionPlan plan(std::size_t n, std::size_t m, std::size_t threads,
                       std::size_t conf_h, std::size_t conf_v, const ObjectiveSpec& spec);

/// Blocks are numbered row-major over the nh x nv stripe grid.
BlockExtent block_extent(const DecompositionPlan& p, std::size_t subpop_id);

std::vector<LocalLayout> local_layout(const DecompositionPlan& p);

/// Table with the columns cores, nh, nv, k, br, bc (one row per plan).
std::string format_plan_table(const std::vector<DecompositionPlan>& plans);

}  // namespace hyperjaya
