#include "solver_internal.hpp"
#include "valsat/rng.hpp"

namespace valsat {

SolverResult schoening_classic(const CnfFormula &formula, const SolverConfig &cfg,
                               const Assignment *reference) {
  validate(cfg, Algorithm::classic);
  if (reference && reference->size() != formula.num_vars())
    throw SolverError("reference solution has wrong length");

  SolverResult result;
  if (formula.has_empty_clause())
    return result;

  const int n = formula.num_vars();
  const std::uint64_t budget = detail::budget_for(cfg, Algorithm::classic, n, formula.num_clauses());
  Rng rng(cfg.seed);
  detail::UnsatTracker tracker(formula);

  for (int attempt = 0; attempt < cfg.restarts; ++attempt) {
    ++result.restarts_used;
    Assignment start(n);
    for (int v = 1; v <= n; ++v)
      start.set(v, rng.coin());
    tracker.reset(start);

    for (std::uint64_t step = 0;; ++step) {
      if (tracker.unsatisfied().empty()) {
        const Assignment &model = tracker.assignment();
        detail::verify_model(formula, model);
        result.outcome = Outcome::sat;
        result.model = model;
        break;
      }
      if (step == budget)
        break;
      const auto &unsat = tracker.unsatisfied();
      const std::size_t clause = unsat[rng.below(unsat.size())];
      const Clause &lits = formula.clause(clause);
      const int var = lits[rng.below(lits.size())].var;
      const bool old_value = tracker.assignment()[var];
      if (reference)
        detail::record_move(result.reflections, old_value ? 1 : 0, 1, (*reference)[var]);
      if (cfg.record_trace)
        result.trace.push_back({clause, var, old_value ? -1 : 1});
      tracker.flip(var);
      ++result.steps_used;
    }
    if (result.solved())
      break;
  }

  if (reference) {
    int differing = 0;
    for (int v = 1; v <= n; ++v)
      differing += tracker.assignment()[v] != (*reference)[v] ? 1 : 0;
    result.final_hamming = differing;
  }
  return result;
}

} // namespace valsat
