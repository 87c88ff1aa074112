#include "solver_internal.hpp"

#include <stdexcept>

namespace valsat {

std::string_view to_string(Algorithm algo) {
  switch (algo) {
  case Algorithm::classic:
    return "classic";
  case Algorithm::valuation:
    return "valuation";
  case Algorithm::hill_climb:
    return "hillclimb";
  case Algorithm::sparrow:
    return "sparrow";
  }
  return "?";
}

std::string_view to_string(InitMode mode) {
  switch (mode) {
  case InitMode::half:
    return "half";
  case InitMode::s0:
    return "s0";
  case InitMode::boolean:
    return "boolean";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::classic, Algorithm::valuation, Algorithm::hill_climb,
                      Algorithm::sparrow})
    if (name == to_string(a))
      return a;
  throw SolverError("unknown algorithm '" + std::string(name) + "'");
}

InitMode parse_init_mode(std::string_view name) {
  for (InitMode m : {InitMode::half, InitMode::s0, InitMode::boolean})
    if (name == to_string(m))
      return m;
  throw SolverError("unknown init mode '" + std::string(name) + "'");
}

void validate(const SolverConfig &cfg, Algorithm algo) {
  if (cfg.resolution < 1)
    throw SolverError("M must be at least 1");
  if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0))
    throw SolverError("alpha must lie in (0, 1)");
  if (cfg.max_steps && *cfg.max_steps < 1)
    throw SolverError("step budget must be at least 1");
  if (cfg.restarts < 1)
    throw SolverError("restarts must be at least 1");
  if (algo == Algorithm::valuation && cfg.init == InitMode::half && cfg.resolution % 2 != 0)
    throw SolverError("init 'half' needs an even M (level M/2 must exist)");
}

namespace {

std::uint64_t saturating_product(std::initializer_list<std::uint64_t> factors) {
  std::uint64_t product = 1;
  for (std::uint64_t f : factors)
    if (__builtin_mul_overflow(product, f, &product))
      return std::numeric_limits<std::uint64_t>::max();
  return product;
}

} // namespace

std::uint64_t default_step_budget(Algorithm algo, int num_vars, std::size_t num_clauses,
                                  int resolution) {
  const auto n = static_cast<std::uint64_t>(std::max(num_vars, 1));
  const auto m = static_cast<std::uint64_t>(std::max<std::size_t>(num_clauses, 1));
  const auto M = static_cast<std::uint64_t>(std::max(resolution, 1));
  switch (algo) {
  case Algorithm::classic:
    return saturating_product({3, n});
  case Algorithm::valuation:
    return saturating_product({4, n, n, M, M});
  case Algorithm::hill_climb:
    return saturating_product({100, n});
  case Algorithm::sparrow:
    return saturating_product({2, m, m});
  }
  return 1;
}

SolverResult solve(Algorithm algo, const CnfFormula &formula, const SolverConfig &cfg,
                   const Assignment *reference) {
  switch (algo) {
  case Algorithm::classic:
    return schoening_classic(formula, cfg, reference);
  case Algorithm::valuation:
    return valuation_walk(formula, cfg, reference);
  case Algorithm::hill_climb:
    return hill_climb(cluster_expression(formula), cfg, reference);
  case Algorithm::sparrow:
    return clustered_sparrow(cluster_expression(formula), cfg, reference);
  }
  throw SolverError("unknown algorithm");
}

namespace detail {

std::vector<std::vector<std::size_t>> occurrence_lists(const CnfFormula &formula) {
  std::vector<std::vector<std::size_t>> occurs(static_cast<std::size_t>(formula.num_vars()));
  for (std::size_t i = 0; i < formula.num_clauses(); ++i)
    for (Literal lit : formula.clause(i)) {
      auto &list = occurs[static_cast<std::size_t>(lit.var - 1)];
      if (list.empty() || list.back() != i)
        list.push_back(i);
    }
  return occurs;
}

UnsatTracker::UnsatTracker(const CnfFormula &formula)
    : formula_(formula), assignment_(formula.num_vars()), occurs_(occurrence_lists(formula)),
      true_count_(formula.num_clauses(), 0), position_(formula.num_clauses(), kNoClause) {}

void UnsatTracker::reset(const Assignment &a) {
  assignment_ = a;
  unsat_.clear();
  for (std::size_t i = 0; i < formula_.num_clauses(); ++i) {
    int count = 0;
    for (Literal lit : formula_.clause(i))
      count += a.satisfies(lit) ? 1 : 0;
    true_count_[i] = count;
    position_[i] = kNoClause;
    if (count == 0)
      mark_unsat(i);
  }
}

void UnsatTracker::mark_unsat(std::size_t clause) {
  position_[clause] = unsat_.size();
  unsat_.push_back(clause);
}

void UnsatTracker::mark_sat(std::size_t clause) {
  const std::size_t pos = position_[clause];
  const std::size_t last = unsat_.back();
  unsat_[pos] = last;
  position_[last] = pos;
  unsat_.pop_back();
  position_[clause] = kNoClause;
}

void UnsatTracker::flip(int var) {
  assignment_.flip(var);
  const bool value = assignment_[var];
  for (std::size_t clause : clauses_of(var)) {
    for (Literal lit : formula_.clause(clause)) {
      if (lit.var != var)
        continue;
      if (lit.value_under(value)) {
        if (true_count_[clause]++ == 0)
          mark_sat(clause);
      } else {
        if (--true_count_[clause] == 0)
          mark_unsat(clause);
      }
    }
  }
}

int UnsatTracker::delta(int var) const {
  const bool value = assignment_[var];
  int make = 0, brk = 0;
  for (std::size_t clause : clauses_of(var)) {
    int gained = 0, lost = 0;
    for (Literal lit : formula_.clause(clause)) {
      if (lit.var != var)
        continue;
      if (lit.value_under(value))
        ++lost;
      else
        ++gained;
    }
    const int before = true_count_[clause];
    const int after = before - lost + gained;
    make += (before == 0 && after > 0) ? 1 : 0;
    brk += (before > 0 && after == 0) ? 1 : 0;
  }
  return make - brk;
}

void record_move(ReflectionStats &stats, int level, int resolution, bool reference_value) {
  if (level == 0)
    ++(reference_value ? stats.positive : stats.negative);
  else if (level == resolution)
    ++(reference_value ? stats.negative : stats.positive);
  else
    ++stats.interior;
}

void verify_model(const CnfFormula &formula, const Assignment &model) {
  if (!satisfies(formula, model))
    throw std::logic_error("solver returned an assignment that does not satisfy the formula");
}

std::uint64_t budget_for(const SolverConfig &cfg, Algorithm algo, int num_vars,
                         std::size_t num_clauses) {
  return cfg.max_steps.value_or(
      default_step_budget(algo, num_vars, num_clauses, cfg.resolution));
}

} // namespace detail
} // namespace valsat
