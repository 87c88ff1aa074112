#include "valsat/dimacs.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace valsat {

namespace {

bool parse_int(std::string_view token, long long &out) {
  if (!token.empty() && token.front() == '+')
    token.remove_prefix(1);
  const auto *end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (j > i)
      tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

} // namespace

DimacsFile parse_dimacs(std::istream &in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  long long num_vars = 0, declared = 0;
  std::vector<Clause> clauses;
  Clause current;
  std::size_t clause_start_line = 0;

  while (std::getline(in, line)) {
    ++lineno;
    const auto tokens = split_ws(line);
    if (tokens.empty())
      continue;
    if (tokens.front().front() == 'c')
      continue;
    if (tokens.front() == "%")
      break;
    if (tokens.front() == "p") {
      if (have_header)
        throw ParseError(lineno, "duplicate header");
      if (tokens.size() != 4 || tokens[1] != "cnf" || !parse_int(tokens[2], num_vars) ||
          !parse_int(tokens[3], declared) || num_vars < 0 || declared < 0)
        throw ParseError(lineno, "malformed header, expected 'p cnf <vars> <clauses>'");
      if (num_vars > 100'000'000)
        throw ParseError(lineno, "variable count too large");
      have_header = true;
      continue;
    }
    if (!have_header)
      throw ParseError(lineno, "clause data before 'p cnf' header");

    for (std::string_view token : tokens) {
      long long value = 0;
      if (!parse_int(token, value))
        throw ParseError(lineno, "invalid token '" + std::string(token) + "'");
      if (value == 0) {
        clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (value > num_vars || -value > num_vars)
        throw ParseError(lineno, "literal out of range: " + std::string(token));
      if (current.empty())
        clause_start_line = lineno;
      const Literal lit = Literal::from_dimacs(static_cast<int>(value));
      if (std::find(current.begin(), current.end(), lit) == current.end())
        current.push_back(lit);
    }
  }

  if (!have_header)
    throw ParseError(lineno, "missing 'p cnf' header");
  if (!current.empty())
    throw ParseError(clause_start_line, "unterminated final clause");

  DimacsFile file;
  file.declared_clauses = static_cast<std::size_t>(declared);
  file.clause_count_mismatch = clauses.size() != file.declared_clauses;
  file.formula = CnfFormula(static_cast<int>(num_vars), std::move(clauses));
  return file;
}

DimacsFile parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

DimacsFile read_dimacs_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open '" + path + "'");
  return parse_dimacs(in);
}

void write_dimacs(std::ostream &out, const CnfFormula &formula) {
  out << "p cnf " << formula.num_vars() << ' ' << formula.num_clauses() << '\n';
  for (const Clause &clause : formula.clauses()) {
    for (Literal lit : clause)
      out << lit.to_dimacs() << ' ';
    out << "0\n";
  }
}

std::string to_dimacs(const CnfFormula &formula) {
  std::ostringstream out;
  write_dimacs(out, formula);
  return out.str();
}

void write_model(std::ostream &out, const Assignment &a) {
  std::string line = "v";
  auto push = [&](int value) {
    std::string token = std::to_string(value);
    if (line.size() + 1 + token.size() > 78) {
      out << line << '\n';
      line = "v";
    }
    line += ' ';
    line += token;
  };
  for (int v = 1; v <= a.size(); ++v)
    push(a[v] ? v : -v);
  push(0);
  out << line << '\n';
}

} // namespace valsat
