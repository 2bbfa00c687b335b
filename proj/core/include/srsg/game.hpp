#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "srsg/rational.hpp"

namespace srsg {

enum class Color : std::uint8_t { Red, Blue };

inline Color other(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }
inline char color_letter(Color c) { return c == Color::Red ? 'R' : 'B'; }

using AgentId = std::int32_t;
using ResourceId = std::int32_t;

// A game instance: k identical resources, n colored agents, and a bipartite
// accessibility relation. Agents and resources carry dense ids (0-based).
// Instances are immutable after construction and safe to share across threads.
struct Instance {
  Rational tau;                                 // tolerance threshold in [0,1]
  std::int32_t resource_count = 0;
  std::vector<Color> colors;                    // per agent
  std::vector<std::vector<ResourceId>> access;  // X(a), sorted ascending

  std::int32_t agent_count() const { return static_cast<std::int32_t>(colors.size()); }
  std::int32_t red_count() const;
  std::int32_t blue_count() const { return agent_count() - red_count(); }
  std::int64_t edge_count() const;

  // Y(q) for every resource, ascending agent ids. O(m), computed on demand.
  std::vector<std::vector<AgentId>> accessor_lists() const;
};

// Every invariant violation as a human-readable description; empty means valid.
std::vector<std::string> validate(const Instance& g);

// Throws std::invalid_argument listing all violations unless g is valid.
void require_valid(const Instance& g);

// Assignment of every agent to one accessible resource; choice[a] = s(a).
struct StrategyProfile {
  std::vector<ResourceId> choice;

  bool operator==(const StrategyProfile&) const = default;
};

bool is_feasible(const Instance& g, const StrategyProfile& s);
void require_feasible(const Instance& g, const StrategyProfile& s);

struct ResourceCounts {
  std::int32_t red = 0;
  std::int32_t blue = 0;

  std::int32_t total() const { return red + blue; }
  std::int32_t of(Color c) const { return c == Color::Red ? red : blue; }
  bool operator==(const ResourceCounts&) const = default;
};

// Per-resource occupancy of s, indexed by resource id. O(n).
std::vector<ResourceCounts> tally(const Instance& g, const StrategyProfile& s);

// Occupancy of one resource. Throws std::invalid_argument on unknown id.
ResourceCounts counts(const Instance& g, ResourceId q, const StrategyProfile& s);

// Fraction of c-colored users of q, or nullopt when q is empty under s.
std::optional<Rational> fraction(const Instance& g, ResourceId q, Color c,
                                 const StrategyProfile& s);

// min(own-color fraction on the chosen resource, tau). Never undefined: the
// agent itself uses its chosen resource.
Rational utility(const Instance& g, AgentId a, const StrategyProfile& s);

// Utility of a c-colored agent standing on a resource with occupancy `at`
// (which already includes the agent). at.total() >= 1.
Rational utility_from_counts(const ResourceCounts& at, Color c, const Rational& tau);

// Sum of all agents' utilities, exact.
Rational social_welfare(const Instance& g, const StrategyProfile& s);

Rational welfare_from_tallies(const std::vector<ResourceCounts>& tallies,
                              const Rational& tau);

}  // namespace srsg
