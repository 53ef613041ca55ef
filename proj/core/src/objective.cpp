#include "hyperjaya/objective.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <fmt/format.h>

#include "hyperjaya/errors.hpp"

namespace hyperjaya {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

constexpr std::array<ObjectiveSpec, 5> kObjectives{{
    {FunctionId::sphere, "sphere", -100.0, 100.0, 1, 0.0, 0.0},
    {FunctionId::rastrigin, "rastrigin", -5.0, 5.0, 1, 0.0, 0.0},
    {FunctionId::ackley, "ackley", -32.0, 32.0, 1, 0.0, 0.0},
    {FunctionId::griewank, "griewank", -600.0, 600.0, 1, 0.0, 0.0},
    {FunctionId::rosenbrock, "rosenbrock", -100.0, 100.0, 2, 1.0, 0.0},
}};

double sphere(std::span<const double> x) {
  double sum = 0.0;
  for (double v : x) sum += v * v;
  return sum;
}

// Standard form with the 10*d constant so that f(0,...,0) = 0.
double rastrigin(std::span<const double> x) {
  double sum = 10.0 * static_cast<double>(x.size());
  for (double v : x) sum += v * v - 10.0 * std::cos(kTwoPi * v);
  return sum;
}

double ackley(std::span<const double> x) {
  const auto d = static_cast<double>(x.size());
  double squares = 0.0;
  double cosines = 0.0;
  for (double v : x) {
    squares += v * v;
    cosines += std::cos(kTwoPi * v);
  }
  return -20.0 * std::exp(-0.2 * std::sqrt(squares / d)) -
         std::exp(cosines / d) + 20.0 + std::numbers::e;
}

double griewank(std::span<const double> x) {
  double sum = 0.0;
  double product = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum += x[i] * x[i];
    product *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return 1.0 + sum / 4000.0 - product;
}

double rosenbrock(std::span<const double> x) {
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double a = x[i] * x[i] - x[i + 1];
    const double b = 1.0 - x[i];
    sum += 100.0 * a * a + b * b;
  }
  return sum;
}

}  // namespace

const ObjectiveSpec& objective(FunctionId id) {
  return kObjectives[static_cast<std::size_t>(id)];
}

std::span<const ObjectiveSpec> all_objectives() { return kObjectives; }

std::optional<FunctionId> parse_function(std::string_view name) {
  for (const auto& spec : kObjectives) {
    if (spec.name == name) return spec.id;
  }
  return std::nullopt;
}

double evaluate(const ObjectiveSpec& spec, std::span<const double> x) {
  if (x.size() < spec.min_arity) {
    throw ArityError(fmt::format("{} requires at least {} variables, got {}",
                                 spec.name, spec.min_arity, x.size()));
  }
  for (double v : x) {
    if (!std::isfinite(v)) {
      throw InputError(fmt::format("{}: non-finite input component", spec.name));
    }
  }
  switch (spec.id) {
    case FunctionId::sphere:
      return sphere(x);
    case FunctionId::rastrigin:
      return rastrigin(x);
    case FunctionId::ackley:
      return ackley(x);
    case FunctionId::griewank:
      return griewank(x);
    case FunctionId::rosenbrock:
      return rosenbrock(x);
  }
  throw UsageError("unknown objective id");
}

}  // namespace hyperjaya
