#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "srsg/game.hpp"

namespace srsg {

// Priority of a resource in the greedy construction: assignable red agents
// over already-assigned blue agents. den == 0 encodes +infinity (red agents,
// no blue yet); red == 0 normalizes to 0/1 so that 0/0 and 0/b compare as 0.
struct FractionKey {
  std::int64_t num = 0;
  std::int64_t den = 1;

  bool operator==(const FractionKey&) const = default;
};

FractionKey fraction_key(std::int32_t assignable_red, std::int32_t assigned_blue);

// Value order only; callers break ties by ascending resource id.
std::strong_ordering compare_keys(const FractionKey& a, const FractionKey& b);

struct RemovalRecord {
  ResourceId resource;
  Rational red_fraction;  // realized in the output profile; 0/1 for an empty resource
};

struct GreedyResult {
  StrategyProfile profile;
  std::vector<RemovalRecord> removal_log;  // removal order, fractions non-increasing
};

// Direct greedy construction of an impact-blind equilibrium. Repeatedly pins
// blue agents that have a single remaining resource, picks the resource with
// the highest assignable-red over assigned-blue ratio (ties by id), assigns
// every remaining red agent with access to it, and removes it. The output is
// an impact-blind equilibrium for every tau; tau is never consulted.
GreedyResult compute_ibe_greedy(const Instance& g);

// CSV with header: order,resource,red_num,red_den
std::string removal_log_to_csv(const std::vector<RemovalRecord>& log);

}  // namespace srsg
