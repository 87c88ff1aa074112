#include "valsat/valuation.hpp"

#include <algorithm>
#include <cstdlib>

namespace valsat {

ValuationVector::ValuationVector(int resolution, int num_vars, int initial_level)
    : ValuationVector(resolution,
                      std::vector<int>(static_cast<std::size_t>(std::max(num_vars, 0)),
                                       initial_level)) {}

ValuationVector::ValuationVector(int resolution, std::vector<int> levels)
    : resolution_(resolution), levels_(std::move(levels)) {
  if (resolution_ < 1)
    throw ValuationError("grid resolution M must be at least 1");
  for (int k : levels_)
    if (k < 0 || k > resolution_)
      throw ValuationError("level " + std::to_string(k) + " outside [0, " +
                           std::to_string(resolution_) + "]");
}

ValuationVector ValuationVector::from_assignment(const Assignment &a, int resolution) {
  std::vector<int> levels(static_cast<std::size_t>(a.size()));
  for (int v = 1; v <= a.size(); ++v)
    levels[static_cast<std::size_t>(v - 1)] = a[v] ? resolution : 0;
  return ValuationVector(resolution, std::move(levels));
}

void ValuationVector::set_level(int var, int level) {
  if (level < 0 || level > resolution_)
    throw ValuationError("level " + std::to_string(level) + " outside grid");
  levels_[index(var)] = level;
}

double literal_valuation(Literal lit, const ValuationVector &vv) {
  const double v = vv.value(lit.var);
  return lit.negated ? 1.0 - v : v;
}

double clause_valuation(const Clause &clause, const ValuationVector &vv) {
  double miss = 1.0;
  for (Literal lit : clause)
    miss *= 1.0 - literal_valuation(lit, vv);
  return 1.0 - miss;
}

double clause_valuation(const Clause &clause, std::span<const double> values) {
  double miss = 1.0;
  for (Literal lit : clause) {
    const double v = values[static_cast<std::size_t>(lit.var - 1)];
    miss *= lit.negated ? v : 1.0 - v;
  }
  return 1.0 - miss;
}

namespace {

void require_matching(const CnfFormula &formula, int size) {
  if (formula.num_vars() != size)
    throw ValuationError("valuation covers " + std::to_string(size) + " variables, formula has " +
                         std::to_string(formula.num_vars()));
}

} // namespace

double expression_valuation(const CnfFormula &formula, const ValuationVector &vv) {
  require_matching(formula, vv.size());
  double product = 1.0;
  for (const Clause &clause : formula.clauses())
    product *= clause_valuation(clause, vv);
  return product;
}

double expression_valuation(const CnfFormula &formula, std::span<const double> values) {
  require_matching(formula, static_cast<int>(values.size()));
  double product = 1.0;
  for (const Clause &clause : formula.clauses())
    product *= clause_valuation(clause, values);
  return product;
}

std::int64_t normalized_hamming_distance(const ValuationVector &a, const ValuationVector &b) {
  if (a.resolution() != b.resolution())
    throw ValuationError("hamming distance between different grid resolutions");
  if (a.size() != b.size())
    throw ValuationError("hamming distance between vectors of different length");
  std::int64_t total = 0;
  for (std::size_t i = 0; i < a.levels().size(); ++i)
    total += std::abs(a.levels()[i] - b.levels()[i]);
  return total;
}

double hamming_distance(const ValuationVector &a, const ValuationVector &b) {
  return static_cast<double>(normalized_hamming_distance(a, b)) / a.resolution();
}

std::optional<Assignment> as_boolean_assignment(const ValuationVector &vv) {
  Assignment a(vv.size());
  for (int v = 1; v <= vv.size(); ++v) {
    const int k = vv.level(v);
    if (k != 0 && k != vv.resolution())
      return std::nullopt;
    a.set(v, k == vv.resolution());
  }
  return a;
}

bool supports_exact_comparison(const CnfFormula &formula, int resolution) {
  if (resolution > kExactResolutionLimit)
    return false;
  return std::all_of(formula.clauses().begin(), formula.clauses().end(),
                     [](const Clause &c) { return c.size() <= 3; });
}

std::int64_t clause_deficit(const Clause &clause, const ValuationVector &vv) {
  const std::int64_t m = vv.resolution();
  std::int64_t deficit = 1;
  for (Literal lit : clause) {
    const std::int64_t k = vv.level(lit.var);
    deficit *= lit.negated ? k : m - k;
  }
  for (std::size_t i = clause.size(); i < 3; ++i)
    deficit *= m;
  return deficit;
}

int compare_clause_valuations(const Clause &a, const Clause &b, const ValuationVector &vv) {
  if (vv.resolution() <= kExactResolutionLimit && a.size() <= 3 && b.size() <= 3) {
    const auto da = clause_deficit(a, vv), db = clause_deficit(b, vv);
    return da > db ? -1 : (da < db ? 1 : 0);
  }
  const double va = clause_valuation(a, vv), vb = clause_valuation(b, vv);
  if (va < vb - kValuationTolerance)
    return -1;
  if (va > vb + kValuationTolerance)
    return 1;
  return 0;
}

} // namespace valsat
