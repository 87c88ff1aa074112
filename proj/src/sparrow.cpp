#include "solver_internal.hpp"
#include "valsat/rng.hpp"

#include <stdexcept>

namespace valsat {

FlipKind classify_flip(int delta) {
  if (delta > 0)
    return FlipKind::positive;
  if (delta < 0)
    return FlipKind::negative;
  return FlipKind::null;
}

std::array<double, 3> flip_class_masses(std::size_t negative, std::size_t null,
                                        std::size_t positive, double alpha) {
  const bool has_neg = negative > 0, has_null = null > 0, has_pos = positive > 0;
  const int present = int{has_neg} + int{has_null} + int{has_pos};
  if (present == 0)
    return {0.0, 0.0, 0.0};
  if (present == 1)
    return {has_neg ? 1.0 : 0.0, has_null ? 1.0 : 0.0, has_pos ? 1.0 : 0.0};
  if (!has_neg)
    return {0.0, 0.5, 0.5};
  if (!has_pos)
    return {alpha, 1.0 - alpha, 0.0};
  if (!has_null)
    return {alpha, 0.0, 1.0 - alpha};
  return {alpha, 0.5 * (1.0 - alpha), 0.5 * (1.0 - alpha)};
}

int make_minus_break(const CnfFormula &formula, std::span<const std::size_t> clauses_of_var,
                     const Assignment &a, int var) {
  Assignment flipped = a;
  flipped.flip(var);
  int delta = 0;
  for (std::size_t clause : clauses_of_var) {
    const bool before = clause_satisfied(formula.clause(clause), a);
    const bool after = clause_satisfied(formula.clause(clause), flipped);
    delta += int{after} - int{before};
  }
  return delta;
}

std::vector<ClusterFlipRow> enumerate_cluster_flips(bool primary_negated) {
  // x = 1, a = 2, b = 3, g = 4, t = 5
  const CnfFormula cluster(5, {{{1, primary_negated}, {2, false}, {3, false}},
                               {{1, false}, {4, true}},
                               {{1, true}, {5, false}}});
  const std::vector<std::size_t> all{0, 1, 2};
  std::vector<ClusterFlipRow> rows;
  for (unsigned bits = 0; bits < 32; ++bits) {
    Assignment a(5);
    for (int v = 1; v <= 5; ++v)
      a.set(v, (bits >> (v - 1)) & 1u);
    ClusterFlipRow row;
    row.bits = bits;
    row.cluster_satisfied = satisfies(cluster, a);
    row.primary_satisfied = clause_satisfied(cluster.clause(0), a);
    row.delta = make_minus_break(cluster, all, a, 1);
    rows.push_back(row);
  }
  return rows;
}

SolverResult clustered_sparrow(const ClusteredFormula &cf, const SolverConfig &cfg,
                               const Assignment *reference) {
  validate(cfg, Algorithm::sparrow);
  if (reference && reference->size() != cf.num_original_vars())
    throw SolverError("reference solution has wrong length");

  const CnfFormula &formula = cf.formula();
  const int n = formula.num_vars();
  std::optional<Assignment> lifted;
  if (reference)
    lifted = lift_assignment(cf, *reference);

  SolverResult result;
  if (formula.has_empty_clause())
    return result;

  const std::uint64_t budget =
      detail::budget_for(cfg, Algorithm::sparrow, n, formula.num_clauses());
  Rng rng(cfg.seed);
  detail::UnsatTracker tracker(formula);
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  std::array<std::vector<int>, 3> by_kind; // negative, null, positive

  for (int attempt = 0; attempt < cfg.restarts && !result.solved(); ++attempt) {
    ++result.restarts_used;
    Assignment start(n);
    for (int v = 1; v <= n; ++v)
      start.set(v, rng.coin());
    tracker.reset(start);

    for (std::uint64_t step = 0;; ++step) {
      if (tracker.unsatisfied().empty()) {
        Assignment model = project_assignment(cf, tracker.assignment());
        detail::verify_model(formula, tracker.assignment());
        detail::verify_model(cf.original(), model);
        result.outcome = Outcome::sat;
        result.model = std::move(model);
        break;
      }
      if (step == budget)
        break;

      // Candidates: every variable of an unsatisfied clause.
      for (auto &bucket : by_kind)
        bucket.clear();
      for (std::size_t clause : tracker.unsatisfied())
        for (Literal lit : formula.clause(clause)) {
          if (seen[static_cast<std::size_t>(lit.var)])
            continue;
          seen[static_cast<std::size_t>(lit.var)] = 1;
          by_kind[static_cast<std::size_t>(classify_flip(tracker.delta(lit.var)))].push_back(
              lit.var);
        }
      for (const auto &bucket : by_kind)
        for (int var : bucket)
          seen[static_cast<std::size_t>(var)] = 0;
      if (by_kind[0].empty() && by_kind[1].empty() && by_kind[2].empty())
        throw std::logic_error("no candidate flips while the formula is unsatisfied");

      const auto masses =
          flip_class_masses(by_kind[0].size(), by_kind[1].size(), by_kind[2].size(), cfg.alpha);
      const double u = rng.unit();
      std::size_t kind = 3;
      double cumulative = 0.0;
      for (std::size_t k = 0; k < 3; ++k) {
        if (masses[k] <= 0.0)
          continue;
        kind = k; // the last eligible class absorbs rounding at the top end
        cumulative += masses[k];
        if (u < cumulative)
          break;
      }
      const auto &bucket = by_kind[kind];
      const int var = bucket[rng.below(bucket.size())];

      const bool old_value = tracker.assignment()[var];
      if (lifted)
        detail::record_move(result.reflections, old_value ? 1 : 0, 1, (*lifted)[var]);
      if (cfg.record_trace)
        result.trace.push_back({kNoClause, var, old_value ? -1 : 1});
      tracker.flip(var);
      ++result.steps_used;
    }
  }

  if (lifted) {
    int differing = 0;
    for (int v = 1; v <= n; ++v)
      differing += tracker.assignment()[v] != (*lifted)[v] ? 1 : 0;
    result.final_hamming = differing;
  }
  return result;
}

} // namespace valsat
