#include "hyperjaya/objective.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "hyperjaya/errors.hpp"
#include "oracles.hpp"

namespace hyperjaya {
namespace {

TEST(Objective, SphereOptimumAndArithmetic) {
  const auto& s = objective(FunctionId::sphere);
  EXPECT_EQ(evaluate(s, std::vector<double>(7, 0.0)), 0.0);
  EXPECT_EQ(evaluate(s, std::vector<double>{1.0, 2.0}), 5.0);
}

TEST(Objective, RosenbrockOptimum) {
  const auto& r = objective(FunctionId::rosenbrock);
  EXPECT_EQ(evaluate(r, std::vector<double>{1.0, 1.0}), 0.0);
}

TEST(Objective, AckleyAndGriewankOptimum) {
  EXPECT_NEAR(evaluate(objective(FunctionId::ackley), std::vector<double>(4, 0.0)), 0.0, 1e-12);
  EXPECT_NEAR(evaluate(objective(FunctionId::griewank), std::vector<double>(9, 0.0)), 0.0, 1e-12);
}

// Oracle: 10*2 + 2*(0.25 - 10*cos(pi)) = 40.5, confirmed with mpmath at 50
// digits.
TEST(Objective, RastriginCorrectedConstant) {
  const auto& r = objective(FunctionId::rastrigin);
  EXPECT_NEAR(evaluate(r, std::vector<double>{0.5, 0.5}), 40.5, 1e-12);
  EXPECT_NEAR(evaluate(r, std::vector<double>(8, 0.0)), 0.0, 1e-12);
}

TEST(Objective, BoundsMatchIntervals) {
  auto b = bounds(objective(FunctionId::sphere));
  EXPECT_EQ(b.lower, -100.0);
  EXPECT_EQ(b.upper, 100.0);
  b = bounds(objective(FunctionId::rastrigin));
  EXPECT_EQ(b.lower, -5.0);
  EXPECT_EQ(b.upper, 5.0);
  b = bounds(objective(FunctionId::ackley));
  EXPECT_EQ(b.lower, -32.0);
  EXPECT_EQ(b.upper, 32.0);
  b = bounds(objective(FunctionId::griewank));
  EXPECT_EQ(b.lower, -600.0);
  EXPECT_EQ(b.upper, 600.0);
  b = bounds(objective(FunctionId::rosenbrock));
  EXPECT_EQ(b.lower, -100.0);
  EXPECT_EQ(b.upper, 100.0);
}

TEST(Objective, MinArity) {
  EXPECT_EQ(min_arity(objective(FunctionId::rosenbrock)), 2u);
  EXPECT_EQ(min_arity(objective(FunctionId::sphere)), 1u);
  EXPECT_EQ(min_arity(objective(FunctionId::ackley)), 1u);
}

TEST(Objective, ArityAndInputErrors) {
  EXPECT_THROW(evaluate(objective(FunctionId::rosenbrock), std::vector<double>{1.0}), ArityError);
  EXPECT_THROW(evaluate(objective(FunctionId::sphere), std::vector<double>{}), ArityError);
  EXPECT_THROW(evaluate(objective(FunctionId::sphere),
                        std::vector<double>{std::numeric_limits<double>::quiet_NaN()}),
               InputError);
  EXPECT_THROW(evaluate(objective(FunctionId::ackley),
                        std::vector<double>{1.0, std::numeric_limits<double>::infinity()}),
               InputError);
}

TEST(Objective, ParseNames) {
  for (const auto& spec : all_objectives()) {
    ASSERT_TRUE(parse_function(spec.name).has_value());
    EXPECT_EQ(*parse_function(spec.name), spec.id);
  }
  EXPECT_FALSE(parse_function("Sphere").has_value());
  EXPECT_FALSE(parse_function("schwefel").has_value());
}

TEST(Objective, GriewankIndexIsLocalToSlice) {
  // The product term uses sqrt(i) with i restarting at 1 for each slice.
  const auto& g = objective(FunctionId::griewank);
  const std::vector<double> full{0.0, 0.0, 3.0};
  const std::vector<double> slice{3.0};
  const double expect_slice = 1.0 + 9.0 / 4000.0 - std::cos(3.0);
  EXPECT_NEAR(evaluate(g, slice), expect_slice, 1e-15);
  const double expect_full = 1.0 + 9.0 / 4000.0 - std::cos(3.0 / std::sqrt(3.0));
  EXPECT_NEAR(evaluate(g, full), expect_full, 1e-15);
}

// Properties over random inputs.

TEST(ObjectiveProperty, OptimumIsZeroInEveryDimension) {
  for (const auto& spec : all_objectives()) {
    for (std::size_t d = spec.min_arity; d <= 64; ++d) {
      EXPECT_NEAR(evaluate(spec, std::vector<double>(d, spec.optimum_coordinate)), 0.0, 1e-12)
          << spec.name << " d=" << d;
    }
  }
}

TEST(ObjectiveProperty, Nonnegativity) {
  std::mt19937_64 gen(7);
  for (std::size_t d : {1u, 2u, 5u, 32u}) {
    for (int k = 0; k < 1000; ++k) {
      const auto& s = objective(FunctionId::sphere);
      const auto& r = objective(FunctionId::rastrigin);
      const auto& g = objective(FunctionId::griewank);
      EXPECT_GE(evaluate(s, testing::random_vector(gen, d, s.lower_bound, s.upper_bound)), 0.0);
      EXPECT_GE(evaluate(r, testing::random_vector(gen, d, r.lower_bound, r.upper_bound)), -1e-9);
      EXPECT_GE(evaluate(g, testing::random_vector(gen, d, g.lower_bound, g.upper_bound)), -1e-12);
    }
  }
}

TEST(ObjectiveProperty, PermutationSymmetryExceptRosenbrock) {
  std::mt19937_64 gen(11);
  for (auto id : {FunctionId::sphere, FunctionId::rastrigin, FunctionId::ackley}) {
    const auto& spec = objective(id);
    for (int k = 0; k < 200; ++k) {
      auto x = testing::random_vector(gen, 12, spec.lower_bound, spec.upper_bound);
      const double before = evaluate(spec, x);
      std::shuffle(x.begin(), x.end(), gen);
      EXPECT_NEAR(evaluate(spec, x), before, 1e-12 * std::max(1.0, std::abs(before)))
          << spec.name;
    }
  }
}

TEST(ObjectiveProperty, DeterministicBitIdentical) {
  std::mt19937_64 gen(3);
  for (const auto& spec : all_objectives()) {
    const auto x = testing::random_vector(gen, 17, spec.lower_bound, spec.upper_bound);
    const double a = evaluate(spec, x);
    const double b = evaluate(spec, x);
    EXPECT_EQ(std::bit_cast<std::uint64_t>(a), std::bit_cast<std::uint64_t>(b));
  }
}

}  // namespace
}  // namespace hyperjaya
