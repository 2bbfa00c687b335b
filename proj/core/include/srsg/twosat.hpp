#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace srsg {

// Clause list over variables 1..num_vars; literals are nonzero signed ints.
struct CnfFormula {
  std::int32_t num_vars = 0;
  std::vector<std::vector<std::int32_t>> clauses;
};

// Violations of well-formedness (nonzero literals in range, 1..3 per clause).
std::vector<std::string> check_cnf(const CnfFormula& phi);

// Additional restriction: at most 3 literals per clause and every variable in
// at most 4 clauses. Empty result means the restriction holds.
std::vector<std::string> check_three_four(const CnfFormula& phi);

// DIMACS CNF ("p cnf <vars> <clauses>", 0-terminated clauses, 'c' comments).
// Rejects malformed input with a line-numbered ParseError.
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs_text(const std::string& text);
std::string serialize_dimacs(const CnfFormula& phi);

// Satisfying assignment (index 1..num_vars) or nullopt. Clauses must have one
// or two literals; anything else throws std::invalid_argument. Implication
// graph plus Tarjan components, linear time, deterministic.
std::optional<std::vector<bool>> solve_2sat(
    std::int32_t num_vars, const std::vector<std::vector<std::int32_t>>& clauses);

}  // namespace srsg
