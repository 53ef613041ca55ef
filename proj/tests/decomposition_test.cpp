#include "hyperjaya/decomposition.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "hyperjaya/errors.hpp"

namespace hyperjaya {
namespace {

const ObjectiveSpec& sphere() { return objective(FunctionId::sphere); }

struct ReferenceRow {
  std::size_t m, cores, nh, nv, k, br, bc;
};

// Reference subpopulation counts and sizes for n = 64, conf(1,1).
const std::vector<ReferenceRow> kReferenceRows = {
    {512, 1, 1, 1, 1, 64, 512},     {512, 2, 2, 2, 4, 32, 256},
    {512, 4, 4, 4, 16, 16, 128},    {512, 8, 8, 8, 64, 8, 64},
    {512, 16, 16, 16, 256, 4, 32},  {1024, 1, 1, 1, 1, 64, 1024},
    {1024, 2, 2, 2, 4, 32, 512},    {1024, 4, 4, 4, 16, 16, 256},
    {1024, 8, 8, 8, 64, 8, 128},    {1024, 16, 16, 16, 256, 4, 64},
    {2048, 1, 1, 1, 1, 64, 2048},   {2048, 2, 2, 2, 4, 32, 1024},
    {2048, 4, 4, 4, 16, 16, 512},   {2048, 8, 8, 8, 64, 8, 256},
    {2048, 16, 16, 16, 256, 4, 128},
};

TEST(Plan, ReproducesReferenceTable) {
  for (const auto& row : kReferenceRows) {
    const auto p = plan(64, row.m, row.cores, 1, 1, sphere());
    EXPECT_EQ(p.nh, row.nh) << "m=" << row.m << " cores=" << row.cores;
    EXPECT_EQ(p.nv, row.nv);
    EXPECT_EQ(p.k, row.k);
    EXPECT_EQ(p.br, row.br);
    EXPECT_EQ(p.bc, row.bc);
  }
}

TEST(Plan, RefinedBlocksAtFourCores) {
  const auto p = plan(64, 512, 4, 2, 2, sphere());
  EXPECT_EQ(p.k, 64u);
  EXPECT_EQ(p.br, 8u);
  EXPECT_EQ(p.bc, 64u);
}

TEST(Plan, EightByEightTwoWorkers) {
  const auto p = plan(8, 8, 2, 2, 2, sphere());
  EXPECT_EQ(p.nh, 4u);
  EXPECT_EQ(p.nv, 4u);
  EXPECT_EQ(p.k, 16u);
  EXPECT_EQ(p.br, 2u);
  EXPECT_EQ(p.bc, 2u);
  EXPECT_EQ(p.l, 8u);
}

TEST(Plan, DivisibilityError) {
  try {
    plan(64, 512, 3, 2, 1, sphere());
    FAIL() << "expected PlanError";
  } catch (const PlanError& e) {
    EXPECT_NE(std::string(e.what()).find("nh"), std::string::npos);
  }
  EXPECT_THROW(plan(64, 500, 8, 1, 1, sphere()), PlanError);
}

TEST(Plan, ZeroInputsRejected) {
  EXPECT_THROW(plan(0, 8, 1, 1, 1, sphere()), PlanError);
  EXPECT_THROW(plan(8, 8, 0, 1, 1, sphere()), PlanError);
  EXPECT_THROW(plan(8, 8, 1, 0, 1, sphere()), PlanError);
  EXPECT_THROW(plan(8, 8, 1, 1, 0, sphere()), PlanError);
}

TEST(Plan, RosenbrockNeedsTwoColumnsPerBlock) {
  const auto& rosen = objective(FunctionId::rosenbrock);
  EXPECT_THROW(plan(64, 512, 16, 1, 32, rosen), ArityError);
  EXPECT_NO_THROW(plan(64, 512, 16, 1, 16, rosen));
  EXPECT_NO_THROW(plan(64, 512, 16, 1, 32, sphere()));
}

TEST(Plan, RefinementScalesReference) {
  for (std::size_t threads : {1u, 2u, 4u}) {
    const auto base = plan(64, 512, threads, 1, 1, sphere());
    for (std::size_t ch : {1u, 2u}) {
      for (std::size_t cv : {1u, 2u, 4u}) {
        const auto p = plan(64, 512, threads, ch, cv, sphere());
        EXPECT_EQ(p.k, base.k * ch * cv);
        EXPECT_EQ(p.br * ch, base.br);
        EXPECT_EQ(p.bc * cv, base.bc);
      }
    }
  }
}

TEST(BlockExtent, FirstAndLastBlock) {
  const auto p = plan(8, 8, 2, 2, 2, sphere());
  const auto first = block_extent(p, 0);
  EXPECT_EQ(first.rows.begin, 0u);
  EXPECT_EQ(first.rows.end, 2u);
  EXPECT_EQ(first.cols.begin, 0u);
  EXPECT_EQ(first.cols.end, 2u);
  EXPECT_EQ(first.owner_tid, 0u);
  const auto last = block_extent(p, 15);
  EXPECT_EQ(last.rows.begin, 6u);
  EXPECT_EQ(last.rows.end, 8u);
  EXPECT_EQ(last.cols.begin, 6u);
  EXPECT_EQ(last.cols.end, 8u);
  EXPECT_EQ(last.owner_tid, 1u);
  EXPECT_THROW(block_extent(p, 16), UsageError);
}

TEST(BlockExtent, RowMajorNumbering) {
  const auto p = plan(8, 8, 2, 2, 2, sphere());
  const auto b5 = block_extent(p, 5);  // stripe 1, column 1
  EXPECT_EQ(b5.rows.begin, 2u);
  EXPECT_EQ(b5.cols.begin, 2u);
  EXPECT_EQ(b5.owner_tid, 0u);
  const auto b8 = block_extent(p, 8);  // stripe 2, column 0
  EXPECT_EQ(b8.rows.begin, 4u);
  EXPECT_EQ(b8.cols.begin, 0u);
  EXPECT_EQ(b8.owner_tid, 1u);
}

TEST(BlockExtent, ExactTilingByCellCount) {
  struct Case {
    std::size_t n, m, threads, ch, cv;
  };
  for (const auto& c : std::vector<Case>{{8, 8, 2, 2, 2},
                                         {64, 512, 4, 2, 2},
                                         {12, 18, 3, 1, 2},
                                         {64, 64, 1, 1, 1},
                                         {16, 48, 4, 1, 3}}) {
    const auto p = plan(c.n, c.m, c.threads, c.ch, c.cv, sphere());
    std::vector<int> hits(c.n * c.m, 0);
    for (std::size_t id = 0; id < p.k; ++id) {
      const auto e = block_extent(p, id);
      EXPECT_EQ(e.rows.size(), p.br);
      EXPECT_EQ(e.cols.size(), p.bc);
      for (std::size_t i = e.rows.begin; i < e.rows.end; ++i) {
        for (std::size_t j = e.cols.begin; j < e.cols.end; ++j) ++hits[i * c.m + j];
      }
    }
    for (int h : hits) ASSERT_EQ(h, 1);
  }
}

TEST(BlockExtent, OwnershipIsBalanced) {
  const auto p = plan(64, 512, 4, 2, 4, sphere());
  std::vector<std::size_t> owned(p.threads, 0);
  for (std::size_t id = 0; id < p.k; ++id) {
    const auto e = block_extent(p, id);
    ++owned[e.owner_tid];
    // The owner's slab covers the block's rows.
    EXPECT_GE(e.rows.begin, e.owner_tid * p.conf_h * p.br);
    EXPECT_LE(e.rows.end, (e.owner_tid + 1) * p.conf_h * p.br);
  }
  for (auto count : owned) EXPECT_EQ(count, p.l);
}

TEST(LocalLayout, EightByEightShapes) {
  const auto layouts = local_layout(plan(8, 8, 2, 2, 2, sphere()));
  ASSERT_EQ(layouts.size(), 2u);
  for (const auto& l : layouts) {
    EXPECT_EQ(l.slab_rows, 4u);
    EXPECT_EQ(l.slab_cols, 8u);
    EXPECT_EQ(l.fitness_rows, 4u);
    EXPECT_EQ(l.fitness_cols, 4u);
    EXPECT_EQ(l.best_rows, 2u);
    EXPECT_EQ(l.best_cols, 8u);
  }
  EXPECT_EQ(layouts[0].first_row, 0u);
  EXPECT_EQ(layouts[1].first_row, 4u);
}

TEST(LocalLayout, SingleBlockIsWholePopulation) {
  const auto layouts = local_layout(plan(20, 6, 1, 1, 1, sphere()));
  ASSERT_EQ(layouts.size(), 1u);
  EXPECT_EQ(layouts[0].slab_rows, 20u);
  EXPECT_EQ(layouts[0].slab_cols, 6u);
  EXPECT_EQ(layouts[0].fitness_rows, 1u);
  EXPECT_EQ(layouts[0].fitness_cols, 20u);
}

TEST(PlanTable, HasHeaderAndOneLinePerPlan) {
  const std::vector<DecompositionPlan> plans{plan(64, 512, 1, 1, 1, sphere()),
                                             plan(64, 512, 16, 1, 1, sphere())};
  const auto text = format_plan_table(plans);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 3);
  EXPECT_NE(text.find("cores"), std::string::npos);
  EXPECT_NE(text.find("256"), std::string::npos);
}

}  // namespace
}  // namespace hyperjaya
