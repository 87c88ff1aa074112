#include "solver_internal.hpp"
#include "valsat/rng.hpp"
#include "valsat/valuation.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace valsat {

namespace {

// Mutable walk state. Each clause keeps its deficit 1 - v(C): exactly, as
// an integer over M^3 held in a double (at most 2^48, so representable),
// when the grid allows it, otherwise as a real product.
class WalkState {
public:
  WalkState(const CnfFormula &formula, int resolution)
      : formula_(formula), resolution_(resolution),
        exact_(supports_exact_comparison(formula, resolution)),
        occurs_(detail::occurrence_lists(formula)),
        levels_(static_cast<std::size_t>(formula.num_vars()), 0),
        deficit_(formula.num_clauses(), 0.0) {}

  int level(int var) const { return levels_[static_cast<std::size_t>(var - 1)]; }

  // A uniformly drawn clause of minimal valuation (maximal deficit). The
  // draw indexes the candidates in increasing clause order.
  std::size_t pick_minimal_clause(Rng &rng) {
    if (exact_)
      return kth_worst(rng.below(count_[1]));
    double worst = deficit_.front();
    for (double d : deficit_)
      worst = std::max(worst, d);
    scratch_.clear();
    for (std::size_t i = 0; i < deficit_.size(); ++i)
      if (deficit_[i] >= worst - kValuationTolerance)
        scratch_.push_back(i);
    return scratch_[rng.below(scratch_.size())];
  }

  void reset(std::vector<int> levels) {
    levels_ = std::move(levels);
    interior_ = 0;
    for (int k : levels_)
      interior_ += (k != 0 && k != resolution_) ? 1 : 0;
    positive_deficits_ = 0;
    for (std::size_t i = 0; i < deficit_.size(); ++i) {
      deficit_[i] = compute_deficit(i);
      positive_deficits_ += deficit_[i] > 0.0 ? 1 : 0;
    }
    if (exact_)
      build_tree();
  }

  void move(int var, int step) {
    auto &k = levels_[static_cast<std::size_t>(var - 1)];
    const bool was_interior = k != 0 && k != resolution_;
    k += step;
    const bool is_interior = k != 0 && k != resolution_;
    interior_ += (is_interior ? 1 : 0) - (was_interior ? 1 : 0);
    for (std::size_t clause : occurs_[static_cast<std::size_t>(var - 1)]) {
      const double before = deficit_[clause];
      const double after = compute_deficit(clause);
      if (after == before)
        continue;
      deficit_[clause] = after;
      if (exact_)
        update_tree(clause);
      positive_deficits_ += (after > 0.0 ? 1 : 0) - (before > 0.0 ? 1 : 0);
    }
  }

  // All levels at barriers and every clause at valuation 1.
  bool boolean_and_satisfied() const { return interior_ == 0 && positive_deficits_ == 0; }

  Assignment rounded() const {
    Assignment a(static_cast<int>(levels_.size()));
    for (std::size_t i = 0; i < levels_.size(); ++i)
      a.set(static_cast<int>(i) + 1, 2 * levels_[i] >= resolution_);
    return a;
  }

  ValuationVector valuation() const { return ValuationVector(resolution_, levels_); }

private:
  // Segment tree over clause indices holding the maximal deficit of each
  // range and how many clauses attain it. Leaves past the last clause hold -1.
  void build_tree() {
    leaves_ = 1;
    while (leaves_ < deficit_.size())
      leaves_ *= 2;
    max_.assign(2 * leaves_, -1.0);
    count_.assign(2 * leaves_, 0);
    for (std::size_t i = 0; i < deficit_.size(); ++i) {
      max_[leaves_ + i] = deficit_[i];
      count_[leaves_ + i] = 1;
    }
    for (std::size_t node = leaves_ - 1; node >= 1; --node)
      combine(node);
  }

  void update_tree(std::size_t clause) {
    std::size_t node = leaves_ + clause;
    max_[node] = deficit_[clause];
    for (node /= 2; node >= 1; node /= 2) {
      const double old_max = max_[node];
      const std::uint64_t old_count = count_[node];
      combine(node);
      if (max_[node] == old_max && count_[node] == old_count)
        break;
    }
  }

  void combine(std::size_t node) {
    const double left = max_[2 * node], right = max_[2 * node + 1];
    max_[node] = std::max(left, right);
    count_[node] = (left == max_[node] ? count_[2 * node] : 0) +
                   (right == max_[node] ? count_[2 * node + 1] : 0);
  }

  std::size_t kth_worst(std::uint64_t k) const {
    const double worst = max_[1];
    std::size_t node = 1;
    while (node < leaves_) {
      const std::size_t left = 2 * node;
      const std::uint64_t in_left = max_[left] == worst ? count_[left] : 0;
      if (k < in_left) {
        node = left;
      } else {
        k -= in_left;
        node = left + 1;
      }
    }
    return node - leaves_;
  }

  double compute_deficit(std::size_t clause) const {
    const Clause &lits = formula_.clause(clause);
    if (exact_) {
      const std::int64_t m = resolution_;
      std::int64_t product = 1;
      for (Literal lit : lits) {
        const std::int64_t k = levels_[static_cast<std::size_t>(lit.var - 1)];
        product *= lit.negated ? k : m - k;
      }
      for (std::size_t i = lits.size(); i < 3; ++i)
        product *= m;
      return static_cast<double>(product);
    }
    double product = 1.0;
    for (Literal lit : lits) {
      const double v = static_cast<double>(levels_[static_cast<std::size_t>(lit.var - 1)]) / resolution_;
      product *= lit.negated ? v : 1.0 - v;
    }
    return product;
  }

  const CnfFormula &formula_;
  int resolution_;
  bool exact_;
  std::vector<std::vector<std::size_t>> occurs_;
  std::vector<int> levels_;
  std::vector<double> deficit_;
  std::size_t leaves_ = 1;
  std::vector<double> max_;
  std::vector<std::uint64_t> count_;
  std::vector<std::size_t> scratch_;
  int interior_ = 0;
  std::size_t positive_deficits_ = 0;
};

std::vector<int> initial_levels(int n, int resolution, InitMode mode, Rng &rng) {
  std::vector<int> levels(static_cast<std::size_t>(n));
  for (int &k : levels) {
    switch (mode) {
    case InitMode::half:
      k = resolution / 2;
      break;
    case InitMode::s0:
      k = 2 * static_cast<int>(rng.below(static_cast<std::uint64_t>(resolution / 2 + 1)));
      break;
    case InitMode::boolean:
      k = rng.coin() ? resolution : 0;
      break;
    }
  }
  return levels;
}

} // namespace

SolverResult valuation_walk(const CnfFormula &formula, const SolverConfig &cfg,
                            const Assignment *reference) {
  validate(cfg, Algorithm::valuation);
  if (reference && reference->size() != formula.num_vars())
    throw SolverError("reference solution has wrong length");

  SolverResult result;
  if (formula.has_empty_clause())
    return result;

  const int n = formula.num_vars();
  const int M = cfg.resolution;
  const std::uint64_t budget =
      detail::budget_for(cfg, Algorithm::valuation, n, formula.num_clauses());
  Rng rng(cfg.seed);
  WalkState state(formula, M);

  auto accept = [&](Assignment model) {
    detail::verify_model(formula, model);
    result.outcome = Outcome::sat;
    result.model = std::move(model);
  };

  for (int attempt = 0; attempt < cfg.restarts && !result.solved(); ++attempt) {
    ++result.restarts_used;
    state.reset(initial_levels(n, M, cfg.init, rng));

    for (std::uint64_t step = 0;; ++step) {
      if (state.boolean_and_satisfied()) {
        accept(*as_boolean_assignment(state.valuation()));
        break;
      }
      if (cfg.accept_rounded) {
        Assignment rounded = state.rounded();
        if (satisfies(formula, rounded)) {
          accept(std::move(rounded));
          break;
        }
      }
      if (step == budget || formula.num_clauses() == 0)
        break;

      const std::size_t clause = state.pick_minimal_clause(rng);
      const Clause &lits = formula.clause(clause);
      const int var = lits[rng.below(lits.size())].var;
      const int level = state.level(var);
      int direction;
      if (level == 0)
        direction = 1;
      else if (level == M)
        direction = -1;
      else
        direction = rng.coin() ? 1 : -1;

      if (reference) {
        detail::record_move(result.reflections, level, M, (*reference)[var]);
        if (cfg.check_invariants) {
          const int target = (*reference)[var] ? M : 0;
          const int change = std::abs(level + direction - target) - std::abs(level - target);
          const bool barrier = level == 0 || level == M;
          const bool toward = change < 0;
          if (std::abs(change) != 1)
            throw std::logic_error("distance to reference changed by more than one grid step");
          if (barrier && toward != (level == 0 ? (*reference)[var] : !(*reference)[var]))
            throw std::logic_error("reflection label disagrees with distance change");
        }
      }
      if (cfg.record_trace)
        result.trace.push_back({clause, var, direction});
      state.move(var, direction);
      ++result.steps_used;
      if (cfg.check_invariants && (state.level(var) < 0 || state.level(var) > M))
        throw std::logic_error("level left the grid");
    }
  }

  if (reference)
    result.final_hamming =
        hamming_distance(state.valuation(), ValuationVector::from_assignment(*reference, M));
  return result;
}

} // namespace valsat
