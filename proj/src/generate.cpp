#include "valsat/cnf.hpp"
#include "valsat/rng.hpp"

namespace valsat {

namespace {

Clause random_3_clause(int n, Rng &rng) {
  Clause clause;
  clause.reserve(3);
  while (clause.size() < 3) {
    const int var = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    bool fresh = true;
    for (Literal lit : clause)
      fresh = fresh && lit.var != var;
    if (fresh)
      clause.push_back({var, rng.coin()});
  }
  return clause;
}

void require_three_vars(int n) {
  if (n < 3)
    throw CnfError("3SAT generation needs at least 3 variables, got " + std::to_string(n));
}

} // namespace

CnfFormula generate_random_3sat(int n, std::size_t m, std::uint64_t seed) {
  require_three_vars(n);
  Rng rng(seed);
  std::vector<Clause> clauses;
  clauses.reserve(m);
  for (std::size_t i = 0; i < m; ++i)
    clauses.push_back(random_3_clause(n, rng));
  return CnfFormula(n, std::move(clauses));
}

PlantedInstance generate_planted_3sat(int n, std::size_t m, std::uint64_t seed) {
  require_three_vars(n);
  Rng rng(seed);
  Assignment hidden(n);
  for (int v = 1; v <= n; ++v)
    hidden.set(v, rng.coin());

  std::vector<Clause> clauses;
  clauses.reserve(m);
  while (clauses.size() < m) {
    Clause clause = random_3_clause(n, rng);
    if (clause_satisfied(clause, hidden))
      clauses.push_back(std::move(clause));
  }
  return {CnfFormula(n, std::move(clauses)), std::move(hidden)};
}

} // namespace valsat
