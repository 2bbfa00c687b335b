#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "srsg/dynamics.hpp"
#include "srsg/game.hpp"

namespace srsg {

struct EnumerationBudget {
  std::int64_t max_profiles = 10'000'000;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Welfare-maximizing profile by exhaustive enumeration over the mixed-radix
// space of accessible choices (agents in id order, resources ascending), ties
// broken by the lexicographically smallest assignment vector. Throws
// BudgetExceeded when the profile space is larger than the budget.
StrategyProfile brute_force_optimum(const Instance& g,
                                    const EnumerationBudget& budget = {});

// All feasible profiles that are equilibria for the mode, in enumeration order.
std::vector<StrategyProfile> enumerate_equilibria(const Instance& g, MoveMode mode,
                                                  const EnumerationBudget& budget = {});

// tau = 1 and every agent with degree <= 2: decides whether a profile exists
// in which every agent reaches utility 1 (every used resource monochromatic),
// via the 2SAT encoding x_q = "q hosts only red agents". Returns such a
// profile or nullopt.
std::optional<StrategyProfile> decide_all_satisfied_agent_deg2(const Instance& g);

// Every resource with degree <= 2, any tau: social-optimum profile. Peels
// resources accessible by a single agent or one color only, then maximum
// matching on the residual graph (one red + one blue accessor per resource);
// unmatched agents go to their lowest-id accessible resource.
StrategyProfile optimum_resource_deg2(const Instance& g);

// 2-approximate impact-aware equilibrium for the instance's tau: welfare
// ascent at tau = 1 semantics from the greedy equilibrium, applying the
// single-agent deviation with the largest exact welfare gain (ties by agent
// then resource id) until none improves.
StrategyProfile approx_iae_2(const Instance& g);

// Maximum-cardinality matching, Hopcroft-Karp. adjacency[l] lists right
// nodes of left node l; returns per-left matched right node or -1.
// Deterministic given the input order.
std::vector<std::int32_t> max_bipartite_matching(
    std::int32_t left_count, std::int32_t right_count,
    const std::vector<std::vector<std::int32_t>>& adjacency);

}  // namespace srsg
