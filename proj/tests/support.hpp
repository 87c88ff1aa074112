#pragma once

#include "oracles.hpp"
#include "valsat/cnf.hpp"

#include <cstdint>

namespace support {

inline valsat::CnfFormula to_formula(int n, const oracle::Clauses &clauses) {
  std::vector<valsat::Clause> out;
  for (const auto &c : clauses) {
    valsat::Clause clause;
    for (int lit : c)
      clause.push_back(valsat::Literal::from_dimacs(lit));
    out.push_back(clause);
  }
  return valsat::CnfFormula(n, std::move(out));
}

inline oracle::Clauses to_clauses(const valsat::CnfFormula &f) {
  oracle::Clauses out;
  for (const auto &clause : f.clauses()) {
    std::vector<int> c;
    for (auto lit : clause)
      c.push_back(lit.to_dimacs());
    out.push_back(c);
  }
  return out;
}

inline std::uint32_t to_bits(const valsat::Assignment &a) {
  std::uint32_t bits = 0;
  for (int v = 1; v <= a.size(); ++v)
    if (a[v])
      bits |= 1u << (v - 1);
  return bits;
}

} // namespace support
