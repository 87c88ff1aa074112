#include "solver_internal.hpp"
#include "valsat/rng.hpp"
#include "valsat/valuation.hpp"

#include <cmath>
#include <stdexcept>

namespace valsat {

namespace {

// Zero clauses first, then the log of the nonzero part of the product.
// The plain product underflows toward 0 on formulas with a few hundred
// clauses, so progress is measured in log space.
struct Score {
  std::size_t zero_clauses = 0;
  double log_valuation = 0.0;
};

Score score(const CnfFormula &formula, std::span<const double> values) {
  Score s;
  for (const Clause &clause : formula.clauses()) {
    const double v = clause_valuation(clause, values);
    if (v <= 0.0)
      ++s.zero_clauses;
    else
      s.log_valuation += std::log(v);
  }
  return s;
}

bool improved(const Score &before, const Score &after, double threshold) {
  if (after.zero_clauses != before.zero_clauses)
    return after.zero_clauses < before.zero_clauses;
  return after.log_valuation - before.log_valuation >= threshold;
}

bool all_clauses_at_one(const CnfFormula &formula, std::span<const double> values) {
  for (const Clause &clause : formula.clauses())
    if (clause_valuation(clause, values) != 1.0)
      return false;
  return true;
}

Assignment round_values(std::span<const double> values) {
  Assignment a(static_cast<int>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i)
    a.set(static_cast<int>(i) + 1, values[i] >= 0.5);
  return a;
}

// Coefficients (ascending powers of v(var)) of the product of the
// valuations of the clauses containing var. Each clause valuation is affine
// in v(var): 1 - (1 - l(var)) R, with R the product of (1 - v) over the
// other literals.
std::array<double, 4> local_polynomial(const ClusteredFormula &cf, int var,
                                       std::span<const double> values) {
  std::array<double, 4> poly{1.0, 0.0, 0.0, 0.0};
  int degree = 0;
  for (const ClusterMember &member : cf.cluster(var)) {
    double rest = 1.0;
    for (Literal lit : cf.formula().clause(member.clause)) {
      if (lit.var == var)
        continue;
      const double v = values[static_cast<std::size_t>(lit.var - 1)];
      rest *= lit.negated ? v : 1.0 - v;
    }
    // positive literal: (1 - R) + R x, negated literal: 1 - R x
    const double constant = member.negated ? 1.0 : 1.0 - rest;
    const double slope = member.negated ? -rest : rest;
    std::array<double, 4> next{};
    for (int i = 0; i <= degree; ++i) {
      next[static_cast<std::size_t>(i)] += constant * poly[static_cast<std::size_t>(i)];
      next[static_cast<std::size_t>(i + 1)] += slope * poly[static_cast<std::size_t>(i)];
    }
    poly = next;
    ++degree;
  }
  return poly;
}

} // namespace

inline constexpr double kStallThreshold = 1e-9;
inline constexpr double kMonotoneSlack = 1e-12;

SolverResult hill_climb(const ClusteredFormula &cf, const SolverConfig &cfg,
                        const Assignment *reference, const HillClimbObserver &observer) {
  validate(cfg, Algorithm::hill_climb);
  const CnfFormula &formula = cf.formula();
  const int n = formula.num_vars();
  for (int v = 1; v <= n; ++v)
    if (cf.cluster(v).size() > 3)
      throw SolverError("variable " + std::to_string(v) + " occurs in more than three clauses");
  if (reference && reference->size() != cf.num_original_vars())
    throw SolverError("reference solution has wrong length");

  SolverResult result;
  const std::uint64_t budget =
      detail::budget_for(cfg, Algorithm::hill_climb, n, formula.num_clauses());
  Rng rng(cfg.seed);
  std::vector<double> values(static_cast<std::size_t>(n), 0.0);

  auto try_accept = [&]() {
    const bool at_one = all_clauses_at_one(formula, values);
    if (!at_one && !cfg.accept_rounded)
      return false;
    Assignment rounded = round_values(values);
    if (!satisfies(formula, rounded))
      return false;
    Assignment model = project_assignment(cf, rounded);
    detail::verify_model(cf.original(), model);
    result.outcome = Outcome::sat;
    result.model = std::move(model);
    return true;
  };

  for (int attempt = 0; attempt < cfg.restarts && !result.solved(); ++attempt) {
    ++result.restarts_used;
    for (double &v : values)
      v = rng.unit();
    if (try_accept())
      break;

    std::uint64_t updates = 0;
    while (updates < budget) {
      const Score before = score(formula, values);
      for (int var = 1; var <= n && updates < budget; ++var, ++updates) {
        ++result.steps_used;
        const auto c = local_polynomial(cf, var, values);
        double &x = values[static_cast<std::size_t>(var - 1)];
        const double current = c[0] + x * (c[1] + x * (c[2] + x * c[3]));
        const CubicMaximum best = maximize_cubic_on_unit_interval(c[0], c[1], c[2], c[3]);
        if (best.value > current) {
          const double prior = cfg.check_invariants ? expression_valuation(formula, values) : 0.0;
          if (cfg.record_trace)
            result.trace.push_back({kNoClause, var, best.x > x ? 1 : -1});
          x = best.x;
          if (cfg.check_invariants &&
              expression_valuation(formula, values) < prior - kMonotoneSlack)
            throw std::logic_error("hill climbing decreased the expression valuation");
        }
        if (observer)
          observer(var, values);
      }
      if (try_accept())
        break;
      if (!improved(before, score(formula, values), kStallThreshold))
        break; // stuck in a local maximum: restart
    }
  }

  if (reference) {
    const Assignment lifted = lift_assignment(cf, *reference);
    double distance = 0.0;
    for (int v = 1; v <= n; ++v)
      distance += std::abs(values[static_cast<std::size_t>(v - 1)] - (lifted[v] ? 1.0 : 0.0));
    result.final_hamming = distance;
  }
  return result;
}

} // namespace valsat
