#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace valsat {

class CnfError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A variable (1-based, DIMACS numbering) with a polarity.
struct Literal {
  int var = 0;
  bool negated = false;

  static Literal from_dimacs(int value) { return {value < 0 ? -value : value, value < 0}; }
  int to_dimacs() const { return negated ? -var : var; }
  Literal operator~() const { return {var, !negated}; }
  bool value_under(bool var_value) const { return var_value != negated; }

  friend bool operator==(const Literal &, const Literal &) = default;
  friend auto operator<=>(const Literal &, const Literal &) = default;
};

using Clause = std::vector<Literal>;

// Boolean truth assignment, indexed by 1-based variable.
class Assignment {
public:
  Assignment() = default;
  explicit Assignment(int num_vars, bool initial = false)
      : values_(static_cast<std::size_t>(num_vars), initial) {}
  explicit Assignment(std::vector<bool> values) : values_(std::move(values)) {}

  int size() const { return static_cast<int>(values_.size()); }
  bool operator[](int var) const { return values_[static_cast<std::size_t>(var - 1)]; }
  void set(int var, bool value) { values_[static_cast<std::size_t>(var - 1)] = value; }
  void flip(int var) { values_[static_cast<std::size_t>(var - 1)].flip(); }
  bool satisfies(Literal lit) const { return lit.value_under((*this)[lit.var]); }
  const std::vector<bool> &values() const { return values_; }

  friend bool operator==(const Assignment &, const Assignment &) = default;

private:
  std::vector<bool> values_;
};

// Immutable CNF instance. Every literal refers to a variable in
// [1, num_vars] and no clause repeats a (var, polarity) pair. Clauses of
// any width are representable; most algorithms here expect width 3 (or 2
// and 3 after clustering).
class CnfFormula {
public:
  CnfFormula() = default;
  CnfFormula(int num_vars, std::vector<Clause> clauses);

  int num_vars() const { return num_vars_; }
  std::size_t num_clauses() const { return clauses_.size(); }
  const std::vector<Clause> &clauses() const { return clauses_; }
  const Clause &clause(std::size_t i) const { return clauses_[i]; }
  bool has_empty_clause() const;

  friend bool operator==(const CnfFormula &, const CnfFormula &) = default;

private:
  int num_vars_ = 0;
  std::vector<Clause> clauses_;
};

struct Evaluation {
  bool satisfied = true;
  std::vector<std::size_t> unsatisfied;
};

bool clause_satisfied(const Clause &clause, const Assignment &a);

// Throws CnfError when the assignment length differs from num_vars.
Evaluation evaluate(const CnfFormula &formula, const Assignment &a);
bool satisfies(const CnfFormula &formula, const Assignment &a);

inline constexpr int kBruteForceVarLimit = 24;

// Exhaustive search. Candidates are tried in increasing binary order with
// variable 1 as the least significant bit, so the first model found is
// deterministic. Throws CnfError above kBruteForceVarLimit variables.
std::optional<Assignment> brute_force_sat(const CnfFormula &formula);

struct PlantedInstance {
  CnfFormula formula;
  Assignment solution;
};

// Uniform random 3SAT: each clause draws three distinct variables and
// independent uniform polarities. Throws CnfError when n < 3.
CnfFormula generate_random_3sat(int n, std::size_t m, std::uint64_t seed);

// Random 3SAT conditioned on a hidden uniform assignment: clauses not
// satisfied by it are resampled.
PlantedInstance generate_planted_3sat(int n, std::size_t m, std::uint64_t seed);

} // namespace valsat
