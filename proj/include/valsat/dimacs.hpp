#pragma once

#include "valsat/cnf.hpp"

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace valsat {

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string &what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

struct DimacsFile {
  CnfFormula formula;
  std::size_t declared_clauses = 0;
  // Set when the header's clause count differs from what was read.
  bool clause_count_mismatch = false;
};

// Reads `c` comments, one `p cnf <n> <m>` header and 0-terminated clauses
// (which may span lines). Repeated literals inside a clause are merged.
// A `%` line ends the clause section, as in the SATLIB corpora.
DimacsFile parse_dimacs(std::istream &in);
DimacsFile parse_dimacs(std::string_view text);
DimacsFile read_dimacs_file(const std::string &path);

void write_dimacs(std::ostream &out, const CnfFormula &formula);
std::string to_dimacs(const CnfFormula &formula);

// `v 1 -2 3 ... 0`, wrapped at roughly 78 columns like SAT competition output.
void write_model(std::ostream &out, const Assignment &a);

} // namespace valsat
