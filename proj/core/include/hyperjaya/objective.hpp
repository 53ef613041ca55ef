#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

namespace hyperjaya {

enum class FunctionId { sphere, rastrigin, ackley, griewank, rosenbrock };

struct Bounds {
  double lower;
  double upper;
};

// Static description of a benchmark function. The optimum is the point with
// every coordinate equal to `optimum_coordinate`.
struct ObjectiveSpec {
  FunctionId id;
  std::string_view name;
  double lower_bound;
  double upper_bound;
  std::size_t min_arity;
  double optimum_coordinate;
  double optimum_value;
};

const ObjectiveSpec& objective(FunctionId id);

/// All five functions in declaration order.
std::span<const ObjectiveSpec> all_objectives();

/// Lookup by the lowercase CLI name ("sphere", "rastrigin", ...).
std::optional<FunctionId> parse_function(std::string_view name);

/// Evaluates the function on `x`. Index-dependent terms (Griewank's sqrt(i),
/// Rosenbrock's adjacency) are local to `x`, so a block slice evaluates as an
/// independent problem of dimension x.size().
///
/// Throws ArityError when x.size() < spec.min_arity and InputError on a
/// non-finite component.
double evaluate(const ObjectiveSpec& spec, std::span<const double> x);

inline Bounds bounds(const ObjectiveSpec& spec) {
  return {spec.lower_bound, spec.upper_bound};
}

inline std::size_t min_arity(const ObjectiveSpec& spec) {
  return spec.min_arity;
}

}  // namespace hyperjaya
