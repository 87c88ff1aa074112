#pragma once

#include "valsat/cnf.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace valsat {

class ValuationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Truth valuation on the grid {0, 1/M, ..., 1}. Each variable stores its
// integer level k in [0, M]; the valuation it stands for is exactly k/M.
class ValuationVector {
public:
  ValuationVector(int resolution, int num_vars, int initial_level = 0);
  ValuationVector(int resolution, std::vector<int> levels);

  static ValuationVector from_assignment(const Assignment &a, int resolution);

  int resolution() const { return resolution_; }
  int size() const { return static_cast<int>(levels_.size()); }
  const std::vector<int> &levels() const { return levels_; }

  int level(int var) const { return levels_[index(var)]; }
  void set_level(int var, int level);
  double value(int var) const { return static_cast<double>(level(var)) / resolution_; }
  bool at_barrier(int var) const {
    const int k = level(var);
    return k == 0 || k == resolution_;
  }

  friend bool operator==(const ValuationVector &, const ValuationVector &) = default;

private:
  std::size_t index(int var) const {
    if (var < 1 || var > size())
      throw ValuationError("variable " + std::to_string(var) + " out of range");
    return static_cast<std::size_t>(var - 1);
  }

  int resolution_;
  std::vector<int> levels_;
};

double literal_valuation(Literal lit, const ValuationVector &vv);

// 1 - prod(1 - v(l)) over the clause literals; an empty clause is 0.
double clause_valuation(const Clause &clause, const ValuationVector &vv);

// Same rule over real per-variable valuations (values[var - 1] in [0, 1]).
double clause_valuation(const Clause &clause, std::span<const double> values);

// Product of clause valuations; 1 for a formula without clauses.
double expression_valuation(const CnfFormula &formula, const ValuationVector &vv);
double expression_valuation(const CnfFormula &formula, std::span<const double> values);

// Sum of |k1 - k2| / M.
double hamming_distance(const ValuationVector &a, const ValuationVector &b);
// Sum of |k1 - k2|: the distance measured in grid steps.
std::int64_t normalized_hamming_distance(const ValuationVector &a, const ValuationVector &b);

// The boolean assignment when every level is 0 or M, nothing otherwise.
std::optional<Assignment> as_boolean_assignment(const ValuationVector &vv);

// Exact clause comparison. For M <= kExactResolutionLimit and clauses of at
// most three literals, (1 - v(C)) * M^3 is an integer: the product of the
// literals' distances from 1, scaled to the common denominator M^3.
inline constexpr int kExactResolutionLimit = 1 << 16;
inline constexpr double kValuationTolerance = 1e-12;

bool supports_exact_comparison(const CnfFormula &formula, int resolution);
std::int64_t clause_deficit(const Clause &clause, const ValuationVector &vv);

// -1, 0 or 1 as v(a) is below, equal to, or above v(b). Exact when
// supported, otherwise real comparison with kValuationTolerance.
int compare_clause_valuations(const Clause &a, const Clause &b, const ValuationVector &vv);

} // namespace valsat
