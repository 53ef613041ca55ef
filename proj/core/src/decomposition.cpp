#include "hyperjaya/decomposition.hpp"

#include <fmt/format.h>

#include "hyperjaya/errors.hpp"

namespace hyperjaya {

DecompositionPlan plan(std::size_t n, std::size_t m, std::size_t threads,
                       std::size_t conf_h, std::size_t conf_v, const ObjectiveSpec& spec) {
  if (n == 0 || m == 0 || threads == 0 || conf_h == 0 || conf_v == 0) {
    throw PlanError(fmt::format(
        "plan inputs must be >= 1 (n={}, m={}, threads={}, conf_h={}, conf_v={})", n, m,
        threads, conf_h, conf_v));
  }
  DecompositionPlan p;
  p.n = n;
  p.m = m;
  p.threads = threads;
  p.conf_h = conf_h;
  p.conf_v = conf_v;
  p.nh = conf_h * threads;
  p.nv = conf_v * threads;
  if (n % p.nh != 0) {
    throw PlanError(fmt::format("nh = conf_h * threads = {} does not divide n = {}", p.nh, n));
  }
  if (m % p.nv != 0) {
    throw PlanError(fmt::format("nv = conf_v * threads = {} does not divide m = {}", p.nv, m));
  }
  p.k = p.nh * p.nv;
  p.br = n / p.nh;
  p.bc = m / p.nv;
  p.l = conf_h * p.nv;
  if (p.bc < spec.min_arity) {
    throw ArityError(fmt::format("{} requires at least {} variables per block, got bc = {}",
                                 spec.name, spec.min_arity, p.bc));
  }
  return p;
}

BlockExtent block_extent(const DecompositionPlan& p, std::size_t subpop_id) {
  if (subpop_id >= p.k) {
    throw UsageError(fmt::format("subpopulation id {} out of range [0, {})", subpop_id, p.k));
  }
  const std::size_t h = subpop_id / p.nv;
  const std::size_t v = subpop_id % p.nv;
  return {subpop_id, h / p.conf_h, {h * p.br, (h + 1) * p.br}, {v * p.bc, (v + 1) * p.bc}};
}

std::vector<LocalLayout> local_layout(const DecompositionPlan& p) {
  std::vector<LocalLayout> layouts;
  layouts.reserve(p.threads);
  const std::size_t slab_rows = p.conf_h * p.br;
  for (std::size_t t = 0; t < p.threads; ++t) {
    layouts.push_back({t, t * slab_rows, slab_rows, p.m, p.nv, slab_rows, p.conf_h, p.m});
  }
  return layouts;
}

std::string format_plan_table(const std::vector<DecompositionPlan>& plans) {
  std::string out = fmt::format("{:>6} {:>6} {:>6} {:>8} {:>6} {:>6}\n", "cores", "nh", "nv",
                                "k", "br", "bc");
  for (const auto& p : plans) {
    out += fmt::format("{:>6} {:>6} {:>6} {:>8} {:>6} {:>6}\n", p.threads, p.nh, p.nv, p.k,
                       p.br, p.bc);
  }
  return out;
}

}  // namespace hyperjaya
