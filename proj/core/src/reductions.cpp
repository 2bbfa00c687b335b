#include "srsg/reductions.hpp"

#include <algorithm>
#include <stdexcept>

namespace srsg {

std::int64_t variable_agents_per_variable(const Rational& tau) {
  if (tau <= Rational(0)) throw std::invalid_argument("tau must be positive");
  Rational four_over_tau = Rational(4) / tau;
  return 2 * four_over_tau.ceil_int();
}

Instance sat_to_srsg(const CnfFormula& phi, const Rational& tau,
                     bool enforce_three_four) {
  if (tau <= Rational(0) || tau > Rational(1))
    throw std::invalid_argument("tau must lie in (0,1]");
  auto violations = enforce_three_four ? check_three_four(phi) : check_cnf(phi);
  if (!violations.empty()) {
    std::string msg = "malformed formula:";
    for (const auto& v : violations) msg += "\n  " + v;
    throw std::invalid_argument(msg);
  }
  if (phi.clauses.empty())
    throw std::invalid_argument(
        "formula has no clauses: the gadget would have no blue agents and "
        "instances need both colors (0 < r < n)");

  const std::int64_t v = variable_agents_per_variable(tau);
  Instance g;
  g.tau = tau;
  g.resource_count = 2 * phi.num_vars;
  const std::size_t agents = static_cast<std::size_t>(v) * phi.num_vars + phi.clauses.size();
  g.colors.reserve(agents);
  g.access.reserve(agents);

  for (std::int32_t var = 1; var <= phi.num_vars; ++var) {
    std::vector<ResourceId> pair{reduction_positive_resource(var),
                                 reduction_negative_resource(var)};
    for (std::int64_t i = 0; i < v; ++i) {
      g.colors.push_back(Color::Red);
      g.access.push_back(pair);
    }
  }
  for (const auto& clause : phi.clauses) {
    std::vector<ResourceId> xs;
    for (std::int32_t lit : clause)
      xs.push_back(lit > 0 ? reduction_positive_resource(lit)
                           : reduction_negative_resource(-lit));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    g.colors.push_back(Color::Blue);
    g.access.push_back(std::move(xs));
  }
  return g;
}

namespace {

// Both colors on a resource must sit at a same-type fraction of at least tau
// for every agent on it to hit the utility cap.
bool resource_all_max(std::int64_t red, std::int64_t blue, const Rational& tau) {
  std::int64_t total = red + blue;
  if (total == 0) return true;
  if (red > 0 && Rational(red, total) < tau) return false;
  if (blue > 0 && Rational(blue, total) < tau) return false;
  return true;
}

}  // namespace

std::optional<StrategyProfile> find_all_max_profile(const CnfFormula& phi,
                                                    const Rational& tau,
                                                    const EnumerationBudget& budget) {
  Instance g = sat_to_srsg(phi, tau, /*enforce_three_four=*/false);
  const std::int64_t v = variable_agents_per_variable(tau);
  const std::int32_t vars = phi.num_vars;
  const std::size_t clauses = phi.clauses.size();

  // Clause agent a (0-based) sits after all variable agents.
  const AgentId first_clause_agent = static_cast<AgentId>(vars * v);

  std::vector<const std::vector<ResourceId>*> options(clauses);
  unsigned __int128 placements = 1;
  const auto cap = static_cast<unsigned __int128>(budget.max_profiles);
  for (std::size_t j = 0; j < clauses; ++j) {
    options[j] = &g.access[first_clause_agent + static_cast<AgentId>(j)];
    placements *= options[j]->size();
    if (placements > cap)
      throw BudgetExceeded("clause placement space exceeds the enumeration budget");
  }
  // configurations = placements * vars * (v + 1), checked without wrapping
  unsigned __int128 configurations = placements;
  for (unsigned __int128 factor :
       {static_cast<unsigned __int128>(vars), static_cast<unsigned __int128>(v + 1)}) {
    if (configurations > cap / factor)
      throw BudgetExceeded(
          "reduction search space exceeds the enumeration budget of " +
          std::to_string(budget.max_profiles) + " configurations");
    configurations *= factor;
  }

  std::vector<std::size_t> digit(clauses, 0);
  std::vector<std::int64_t> blue_on(g.resource_count, 0);

  while (true) {
    std::fill(blue_on.begin(), blue_on.end(), 0);
    for (std::size_t j = 0; j < clauses; ++j) ++blue_on[(*options[j])[digit[j]]];

    // Same-variable red agents are interchangeable: only the split between the
    // two literal resources matters, and variables are independent given the
    // clause placement.
    std::vector<std::int64_t> split(vars, -1);
    bool feasible = true;
    for (std::int32_t var = 1; var <= vars && feasible; ++var) {
      ResourceId pos = reduction_positive_resource(var);
      ResourceId neg = reduction_negative_resource(var);
      feasible = false;
      for (std::int64_t on_pos = 0; on_pos <= v; ++on_pos) {
        if (resource_all_max(on_pos, blue_on[pos], tau) &&
            resource_all_max(v - on_pos, blue_on[neg], tau)) {
          split[var - 1] = on_pos;
          feasible = true;
          break;
        }
      }
    }

    if (feasible) {
      StrategyProfile s;
      s.choice.resize(g.agent_count());
      AgentId a = 0;
      for (std::int32_t var = 1; var <= vars; ++var) {
        for (std::int64_t i = 0; i < v; ++i, ++a)
          s.choice[a] = i < split[var - 1] ? reduction_positive_resource(var)
                                           : reduction_negative_resource(var);
      }
      for (std::size_t j = 0; j < clauses; ++j)
        s.choice[first_clause_agent + static_cast<AgentId>(j)] = (*options[j])[digit[j]];
      return s;
    }

    std::size_t pos = clauses;
    while (pos > 0) {
      --pos;
      if (++digit[pos] < options[pos]->size()) break;
      digit[pos] = 0;
      if (pos == 0) return std::nullopt;
    }
    if (clauses == 0) return std::nullopt;
  }
}

bool cnf_satisfiable_exhaustive(const CnfFormula& phi, const EnumerationBudget& budget) {
  auto violations = check_cnf(phi);
  if (!violations.empty())
    throw std::invalid_argument("malformed formula: " + violations.front());
  if (phi.num_vars >= 62 || (std::int64_t(1) << phi.num_vars) > budget.max_profiles)
    throw BudgetExceeded("assignment space exceeds the enumeration budget");

  const std::int64_t assignments = std::int64_t(1) << phi.num_vars;
  for (std::int64_t bits = 0; bits < assignments; ++bits) {
    bool all = true;
    for (const auto& clause : phi.clauses) {
      bool satisfied = false;
      for (std::int32_t lit : clause) {
        bool value = (bits >> (std::abs(lit) - 1)) & 1;
        if ((lit > 0) == value) {
          satisfied = true;
          break;
        }
      }
      if (!satisfied) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

bool verify_reduction(const CnfFormula& phi, const Rational& tau,
                      const EnumerationBudget& budget) {
  bool satisfiable = cnf_satisfiable_exhaustive(phi, budget);
  bool all_max = find_all_max_profile(phi, tau, budget).has_value();
  return satisfiable == all_max;
}

}  // namespace srsg
