#include "valsat/transform.hpp"

#include <ostream>

namespace valsat {

ClusteredFormula cluster_expression(const CnfFormula &formula) {
  ClusteredFormula cf;
  cf.original_ = formula;
  cf.num_original_vars_ = formula.num_vars();
  cf.occurrences_.resize(static_cast<std::size_t>(formula.num_vars()));

  std::vector<Clause> clauses;
  clauses.reserve(formula.num_clauses() * 2);
  for (std::size_t i = 0; i < formula.num_clauses(); ++i) {
    const Clause &input = formula.clause(i);
    if (input.size() != 3)
      throw TransformError("clause " + std::to_string(i) + " has " +
                           std::to_string(input.size()) + " literals, clustering needs 3");
    Clause rewritten;
    for (Literal lit : input) {
      const int occ = static_cast<int>(cf.origin_.size()) + 1;
      cf.origin_.push_back(lit.var);
      cf.occurrences_[static_cast<std::size_t>(lit.var - 1)].push_back(occ);
      cf.clusters_.push_back({{i, true, lit.negated}});
      rewritten.push_back({occ, lit.negated});
    }
    clauses.push_back(std::move(rewritten));
  }
  cf.num_primary_clauses_ = clauses.size();

  for (const std::vector<int> &occ : cf.occurrences_) {
    if (occ.size() < 2)
      continue;
    for (std::size_t j = 0; j < occ.size(); ++j) {
      const int here = occ[j];
      const int next = occ[(j + 1) % occ.size()];
      const std::size_t index = clauses.size();
      clauses.push_back({{here, false}, {next, true}});
      cf.clusters_[static_cast<std::size_t>(here - 1)].push_back({index, false, false});
      cf.clusters_[static_cast<std::size_t>(next - 1)].push_back({index, false, true});
    }
  }

  cf.formula_ = CnfFormula(static_cast<int>(cf.origin_.size()), std::move(clauses));
  return cf;
}

Assignment project_assignment(const ClusteredFormula &cf, const Assignment &clustered) {
  if (clustered.size() != cf.formula().num_vars())
    throw TransformError("clustered assignment has wrong length");
  for (std::size_t i = cf.num_primary_clauses(); i < cf.formula().num_clauses(); ++i)
    if (!clause_satisfied(cf.formula().clause(i), clustered))
      throw TransformError("occurrence variables disagree (chain clause " + std::to_string(i) +
                           " unsatisfied)");
  Assignment original(cf.num_original_vars());
  for (int v = 1; v <= cf.num_original_vars(); ++v) {
    const auto &occ = cf.occurrences(v);
    if (!occ.empty())
      original.set(v, clustered[occ.front()]);
  }
  return original;
}

Assignment lift_assignment(const ClusteredFormula &cf, const Assignment &original) {
  if (original.size() != cf.num_original_vars())
    throw TransformError("assignment has wrong length for the input formula");
  Assignment clustered(cf.formula().num_vars());
  for (int occ = 1; occ <= clustered.size(); ++occ)
    clustered.set(occ, original[cf.origin_var(occ)]);
  return clustered;
}

void write_occurrence_map(std::ostream &out, const ClusteredFormula &cf) {
  for (int occ = 1; occ <= cf.formula().num_vars(); ++occ)
    out << occ << ' ' << cf.origin_var(occ) << '\n';
}

} // namespace valsat
