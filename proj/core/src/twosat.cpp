#include "srsg/twosat.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "srsg/text_format.hpp"

namespace srsg {

std::vector<std::string> check_cnf(const CnfFormula& phi) {
  std::vector<std::string> violations;
  if (phi.num_vars <= 0) violations.push_back("formula must have at least one variable");
  for (std::size_t i = 0; i < phi.clauses.size(); ++i) {
    const auto& clause = phi.clauses[i];
    if (clause.empty() || clause.size() > 3)
      violations.push_back("clause " + std::to_string(i + 1) +
                           " must have between 1 and 3 literals");
    for (std::int32_t lit : clause) {
      if (lit == 0)
        violations.push_back("clause " + std::to_string(i + 1) + " contains literal 0");
      else if (std::abs(lit) > phi.num_vars)
        violations.push_back("clause " + std::to_string(i + 1) + " references variable " +
                             std::to_string(std::abs(lit)) + " beyond num_vars");
    }
  }
  return violations;
}

std::vector<std::string> check_three_four(const CnfFormula& phi) {
  std::vector<std::string> violations = check_cnf(phi);
  std::vector<std::int32_t> occurrences(phi.num_vars + 1, 0);
  for (const auto& clause : phi.clauses)
    for (std::int32_t lit : clause) {
      std::int32_t var = std::abs(lit);
      if (var >= 1 && var <= phi.num_vars) ++occurrences[var];
    }
  for (std::int32_t v = 1; v <= phi.num_vars; ++v)
    if (occurrences[v] > 4)
      violations.push_back("variable " + std::to_string(v) + " occurs in " +
                           std::to_string(occurrences[v]) + " clauses (max 4)");
  return violations;
}

CnfFormula parse_dimacs(std::istream& in) {
  CnfFormula phi;
  std::int64_t declared_clauses = -1;
  bool have_header = false;
  std::vector<std::int32_t> current;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c" || tok[0] == 'c') continue;
    if (tok == "p") {
      if (have_header) throw ParseError(line_no, "duplicate DIMACS header");
      std::string fmt;
      std::int64_t vars = 0, clauses = 0;
      if (!(ls >> fmt >> vars >> clauses) || fmt != "cnf" || vars <= 0 || clauses < 0)
        throw ParseError(line_no, "expected 'p cnf <vars> <clauses>'");
      phi.num_vars = static_cast<std::int32_t>(vars);
      declared_clauses = clauses;
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(line_no, "clause before DIMACS header");
    std::istringstream again(line);
    std::int64_t lit;
    while (again >> lit) {
      if (lit == 0) {
        phi.clauses.push_back(current);
        current.clear();
      } else {
        if (std::abs(lit) > phi.num_vars)
          throw ParseError(line_no, "literal " + std::to_string(lit) +
                                        " references a variable beyond the header");
        current.push_back(static_cast<std::int32_t>(lit));
      }
    }
    if (!again.eof())
      throw ParseError(line_no, "unexpected token in clause line");
  }
  if (!have_header) throw ParseError(line_no, "missing DIMACS header");
  if (!current.empty())
    throw ParseError(line_no, "last clause is not terminated by 0");
  if (declared_clauses >= 0 &&
      declared_clauses != static_cast<std::int64_t>(phi.clauses.size()))
    throw ParseError(line_no, "header declares " + std::to_string(declared_clauses) +
                                  " clauses but " + std::to_string(phi.clauses.size()) +
                                  " were given");
  return phi;
}

CnfFormula parse_dimacs_text(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

std::string serialize_dimacs(const CnfFormula& phi) {
  std::ostringstream out;
  out << "p cnf " << phi.num_vars << ' ' << phi.clauses.size() << "\n";
  for (const auto& clause : phi.clauses) {
    for (std::int32_t lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

namespace {

// Iterative Tarjan over the implication graph. Node 2v is variable v+1
// positive, 2v+1 negative.
class TwoSatSolver {
 public:
  explicit TwoSatSolver(std::int32_t num_vars)
      : n_(num_vars), adj_(2 * static_cast<std::size_t>(num_vars)) {}

  static std::int32_t node(std::int32_t lit) {
    std::int32_t v = std::abs(lit) - 1;
    return 2 * v + (lit < 0 ? 1 : 0);
  }
  static std::int32_t negation(std::int32_t node) { return node ^ 1; }

  void add_clause(std::int32_t a, std::int32_t b) {
    adj_[negation(node(a))].push_back(node(b));
    adj_[negation(node(b))].push_back(node(a));
  }

  std::optional<std::vector<bool>> solve() {
    const std::int32_t nodes = 2 * n_;
    index_.assign(nodes, -1);
    low_.assign(nodes, 0);
    comp_.assign(nodes, -1);
    on_stack_.assign(nodes, false);
    for (std::int32_t v = 0; v < nodes; ++v)
      if (index_[v] == -1) strong_connect(v);

    std::vector<bool> assignment(static_cast<std::size_t>(n_) + 1, false);
    for (std::int32_t v = 0; v < n_; ++v) {
      if (comp_[2 * v] == comp_[2 * v + 1]) return std::nullopt;
      // Components are numbered in reverse topological order; the literal
      // closer to a sink is the one to satisfy.
      assignment[static_cast<std::size_t>(v) + 1] = comp_[2 * v] < comp_[2 * v + 1];
    }
    return assignment;
  }

 private:
  void strong_connect(std::int32_t root) {
    struct Frame {
      std::int32_t node;
      std::size_t edge;
    };
    std::vector<Frame> call_stack{{root, 0}};
    while (!call_stack.empty()) {
      auto& [v, edge] = call_stack.back();
      if (edge == 0) {
        index_[v] = low_[v] = counter_++;
        stack_.push_back(v);
        on_stack_[v] = true;
      }
      bool descended = false;
      while (edge < adj_[v].size()) {
        std::int32_t w = adj_[v][edge++];
        if (index_[w] == -1) {
          call_stack.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack_[w]) low_[v] = std::min(low_[v], index_[w]);
      }
      if (descended) continue;
      if (low_[v] == index_[v]) {
        while (true) {
          std::int32_t w = stack_.back();
          stack_.pop_back();
          on_stack_[w] = false;
          comp_[w] = component_count_;
          if (w == v) break;
        }
        ++component_count_;
      }
      std::int32_t finished = v;
      call_stack.pop_back();
      if (!call_stack.empty()) {
        std::int32_t parent = call_stack.back().node;
        low_[parent] = std::min(low_[parent], low_[finished]);
      }
    }
  }

  std::int32_t n_;
  std::vector<std::vector<std::int32_t>> adj_;
  std::vector<std::int32_t> index_, low_, comp_;
  std::vector<bool> on_stack_;
  std::vector<std::int32_t> stack_;
  std::int32_t counter_ = 0;
  std::int32_t component_count_ = 0;
};

}  // namespace

std::optional<std::vector<bool>> solve_2sat(
    std::int32_t num_vars, const std::vector<std::vector<std::int32_t>>& clauses) {
  if (num_vars <= 0) throw std::invalid_argument("2SAT needs at least one variable");
  TwoSatSolver solver(num_vars);
  for (const auto& clause : clauses) {
    if (clause.empty() || clause.size() > 2)
      throw std::invalid_argument("2SAT clauses must have one or two literals");
    for (std::int32_t lit : clause)
      if (lit == 0 || std::abs(lit) > num_vars)
        throw std::invalid_argument("2SAT literal out of range");
    if (clause.size() == 1)
      solver.add_clause(clause[0], clause[0]);
    else
      solver.add_clause(clause[0], clause[1]);
  }
  return solver.solve();
}

}  // namespace srsg
