#pragma once

#include "valsat/cnf.hpp"

#include <iosfwd>
#include <stdexcept>
#include <vector>

namespace valsat {

class TransformError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// One clause an occurrence variable belongs to. The primary clause is the
// rewritten 3-literal clause of the input; the others are 2-literal
// equality-chain clauses.
struct ClusterMember {
  std::size_t clause = 0;
  bool primary = false;
  bool negated = false; // polarity of the occurrence variable in that clause
};

// The clustered expression: every occurrence of an input variable becomes a
// fresh variable, and the occurrences of one input variable are tied
// together by the cyclic chain (x1 | -x2) & (x2 | -x3) & ... & (xm | -x1).
// Each variable then lies in at most three clauses. Clauses
// [0, num_primary_clauses()) are the rewritten input clauses, in input
// order; the chain clauses follow, grouped by input variable.
class ClusteredFormula {
public:
  const CnfFormula &formula() const { return formula_; }
  const CnfFormula &original() const { return original_; }
  int num_original_vars() const { return num_original_vars_; }
  std::size_t num_primary_clauses() const { return num_primary_clauses_; }
  bool is_chain_clause(std::size_t clause) const { return clause >= num_primary_clauses_; }

  // Input variable an occurrence variable stands for.
  int origin_var(int occ_var) const { return origin_[static_cast<std::size_t>(occ_var - 1)]; }
  // Occurrence variables of an input variable, in order of first appearance.
  const std::vector<int> &occurrences(int original_var) const {
    return occurrences_[static_cast<std::size_t>(original_var - 1)];
  }
  // The clauses containing an occurrence variable (its cluster).
  const std::vector<ClusterMember> &cluster(int occ_var) const {
    return clusters_[static_cast<std::size_t>(occ_var - 1)];
  }

private:
  friend ClusteredFormula cluster_expression(const CnfFormula &formula);

  CnfFormula formula_;
  CnfFormula original_;
  int num_original_vars_ = 0;
  std::size_t num_primary_clauses_ = 0;
  std::vector<int> origin_;
  std::vector<std::vector<int>> occurrences_;
  std::vector<std::vector<ClusterMember>> clusters_;
};

// Requires every input clause to have exactly three literals.
ClusteredFormula cluster_expression(const CnfFormula &formula);

// Reads each input variable from its occurrence variables. Throws
// TransformError when a chain clause is violated (occurrences disagree).
// Input variables that never occur are set to false.
Assignment project_assignment(const ClusteredFormula &cf, const Assignment &clustered);

// Copies each input value onto all of its occurrence variables.
Assignment lift_assignment(const ClusteredFormula &cf, const Assignment &original);

// Sidecar mapping: one `occ_var orig_var` line per occurrence variable.
void write_occurrence_map(std::ostream &out, const ClusteredFormula &cf);

} // namespace valsat
