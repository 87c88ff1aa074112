#include "valsat/cnf.hpp"

#include <algorithm>

namespace valsat {

CnfFormula::CnfFormula(int num_vars, std::vector<Clause> clauses)
    : num_vars_(num_vars), clauses_(std::move(clauses)) {
  if (num_vars_ < 0)
    throw CnfError("negative variable count");
  for (std::size_t i = 0; i < clauses_.size(); ++i) {
    const Clause &clause = clauses_[i];
    for (std::size_t j = 0; j < clause.size(); ++j) {
      const Literal lit = clause[j];
      if (lit.var < 1 || lit.var > num_vars_)
        throw CnfError("literal out of range in clause " + std::to_string(i));
      for (std::size_t k = 0; k < j; ++k)
        if (clause[k] == lit)
          throw CnfError("duplicate literal in clause " + std::to_string(i));
    }
  }
}

bool CnfFormula::has_empty_clause() const {
  return std::any_of(clauses_.begin(), clauses_.end(),
                     [](const Clause &c) { return c.empty(); });
}

bool clause_satisfied(const Clause &clause, const Assignment &a) {
  return std::any_of(clause.begin(), clause.end(),
                     [&](Literal lit) { return a.satisfies(lit); });
}

Evaluation evaluate(const CnfFormula &formula, const Assignment &a) {
  if (a.size() != formula.num_vars())
    throw CnfError("assignment length " + std::to_string(a.size()) +
                   " does not match " + std::to_string(formula.num_vars()) + " variables");
  Evaluation result;
  for (std::size_t i = 0; i < formula.num_clauses(); ++i)
    if (!clause_satisfied(formula.clause(i), a))
      result.unsatisfied.push_back(i);
  result.satisfied = result.unsatisfied.empty();
  return result;
}

bool satisfies(const CnfFormula &formula, const Assignment &a) {
  return evaluate(formula, a).satisfied;
}

std::optional<Assignment> brute_force_sat(const CnfFormula &formula) {
  const int n = formula.num_vars();
  if (n > kBruteForceVarLimit)
    throw CnfError("brute force limited to " + std::to_string(kBruteForceVarLimit) +
                   " variables, got " + std::to_string(n));

  // Clause as (positive mask, negative mask); satisfied iff some bit hits.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> masks;
  masks.reserve(formula.num_clauses());
  for (const Clause &clause : formula.clauses()) {
    std::uint32_t pos = 0, neg = 0;
    for (Literal lit : clause)
      (lit.negated ? neg : pos) |= 1u << (lit.var - 1);
    masks.emplace_back(pos, neg);
  }

  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    const auto word = static_cast<std::uint32_t>(bits);
    const bool ok = std::all_of(masks.begin(), masks.end(), [&](const auto &m) {
      return ((word & m.first) | (~word & m.second)) != 0;
    });
    if (ok) {
      Assignment a(n);
      for (int v = 1; v <= n; ++v)
        a.set(v, (word >> (v - 1)) & 1u);
      return a;
    }
  }
  return std::nullopt;
}

} // namespace valsat
