#pragma once

#include "valsat/cnf.hpp"
#include "valsat/solvers.hpp"

#include <cstdint>
#include <vector>

namespace valsat::detail {

// Occurrence lists, per-clause true-literal counts and the set of
// unsatisfied clauses, kept in sync across flips.
class UnsatTracker {
public:
  explicit UnsatTracker(const CnfFormula &formula);

  void reset(const Assignment &a);
  void flip(int var);

  const Assignment &assignment() const { return assignment_; }
  const std::vector<std::size_t> &unsatisfied() const { return unsat_; }
  const std::vector<std::size_t> &clauses_of(int var) const {
    return occurs_[static_cast<std::size_t>(var - 1)];
  }
  // make - break of flipping var, from the cached counts.
  int delta(int var) const;

private:
  void mark_unsat(std::size_t clause);
  void mark_sat(std::size_t clause);

  const CnfFormula &formula_;
  Assignment assignment_;
  std::vector<std::vector<std::size_t>> occurs_; // each clause listed once per variable
  std::vector<int> true_count_;
  std::vector<std::size_t> unsat_;
  std::vector<std::size_t> position_;
};

std::vector<std::vector<std::size_t>> occurrence_lists(const CnfFormula &formula);

// Labels a barrier move of a variable currently at `level` on a grid of
// size `resolution` against the reference value of that variable.
void record_move(ReflectionStats &stats, int level, int resolution, bool reference_value);

// Throws std::logic_error unless the model satisfies the formula.
void verify_model(const CnfFormula &formula, const Assignment &model);

std::uint64_t budget_for(const SolverConfig &cfg, Algorithm algo, int num_vars,
                         std::size_t num_clauses);

} // namespace valsat::detail
