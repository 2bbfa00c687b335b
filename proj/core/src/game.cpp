#include "srsg/game.hpp"

#include <algorithm>
#include <stdexcept>

namespace srsg {

std::int32_t Instance::red_count() const {
  return static_cast<std::int32_t>(
      std::count(colors.begin(), colors.end(), Color::Red));
}

std::int64_t Instance::edge_count() const {
  std::int64_t m = 0;
  for (const auto& xs : access) m += static_cast<std::int64_t>(xs.size());
  return m;
}

std::vector<std::vector<AgentId>> Instance::accessor_lists() const {
  std::vector<std::vector<AgentId>> ys(resource_count);
  for (AgentId a = 0; a < agent_count(); ++a)
    for (ResourceId q : access[a])
      if (q >= 0 && q < resource_count) ys[q].push_back(a);
  return ys;
}

std::vector<std::string> validate(const Instance& g) {
  std::vector<std::string> violations;
  if (g.tau < Rational(0) || g.tau > Rational(1))
    violations.push_back("tau must lie in [0,1], got " + g.tau.to_string());
  if (g.resource_count <= 0)
    violations.push_back("instance must have at least one resource");
  if (g.access.size() != g.colors.size())
    violations.push_back("access lists and colors disagree on the agent count");

  const std::int32_t n = g.agent_count();
  std::int32_t red = 0;
  for (AgentId a = 0; a < n; ++a) {
    if (g.colors[a] == Color::Red) ++red;
    if (a >= static_cast<AgentId>(g.access.size())) break;
    const auto& xs = g.access[a];
    if (xs.empty())
      violations.push_back("agent " + std::to_string(a) +
                           " has no accessible resource");
    for (ResourceId q : xs)
      if (q < 0 || q >= g.resource_count)
        violations.push_back("agent " + std::to_string(a) +
                             " references unknown resource " + std::to_string(q));
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      if (xs[i] == xs[i + 1])
        violations.push_back("agent " + std::to_string(a) +
                             " has a duplicate edge to resource " +
                             std::to_string(xs[i]));
      else if (xs[i] > xs[i + 1])
        violations.push_back("agent " + std::to_string(a) +
                             " access list is not sorted ascending");
    }
  }
  if (red == 0 || red == n)
    violations.push_back(
        "both colors required: instance needs 0 < r < n red agents");
  return violations;
}

void require_valid(const Instance& g) {
  auto violations = validate(g);
  if (violations.empty()) return;
  std::string msg = "invalid instance:";
  for (const auto& v : violations) msg += "\n  " + v;
  throw std::invalid_argument(msg);
}

bool is_feasible(const Instance& g, const StrategyProfile& s) {
  if (static_cast<std::int32_t>(s.choice.size()) != g.agent_count()) return false;
  for (AgentId a = 0; a < g.agent_count(); ++a) {
    const auto& xs = g.access[a];
    if (!std::binary_search(xs.begin(), xs.end(), s.choice[a])) return false;
  }
  return true;
}

void require_feasible(const Instance& g, const StrategyProfile& s) {
  if (!is_feasible(g, s))
    throw std::invalid_argument(
        "infeasible strategy profile: every agent must select exactly one "
        "accessible resource");
}

std::vector<ResourceCounts> tally(const Instance& g, const StrategyProfile& s) {
  std::vector<ResourceCounts> t(g.resource_count);
  for (AgentId a = 0; a < g.agent_count(); ++a) {
    ResourceCounts& rc = t[s.choice[a]];
    if (g.colors[a] == Color::Red)
      ++rc.red;
    else
      ++rc.blue;
  }
  return t;
}

ResourceCounts counts(const Instance& g, ResourceId q, const StrategyProfile& s) {
  if (q < 0 || q >= g.resource_count)
    throw std::invalid_argument("unknown resource id " + std::to_string(q));
  ResourceCounts rc;
  for (AgentId a = 0; a < g.agent_count(); ++a) {
    if (s.choice[a] != q) continue;
    if (g.colors[a] == Color::Red)
      ++rc.red;
    else
      ++rc.blue;
  }
  return rc;
}

std::optional<Rational> fraction(const Instance& g, ResourceId q, Color c,
                                 const StrategyProfile& s) {
  ResourceCounts rc = counts(g, q, s);
  if (rc.total() == 0) return std::nullopt;
  return Rational(rc.of(c), rc.total());
}

Rational utility_from_counts(const ResourceCounts& at, Color c, const Rational& tau) {
  Rational own(at.of(c), at.total());
  return own < tau ? own : tau;
}

Rational utility(const Instance& g, AgentId a, const StrategyProfile& s) {
  if (a < 0 || a >= g.agent_count())
    throw std::invalid_argument("unknown agent id " + std::to_string(a));
  ResourceCounts rc = counts(g, s.choice[a], s);
  return utility_from_counts(rc, g.colors[a], g.tau);
}

Rational welfare_from_tallies(const std::vector<ResourceCounts>& tallies,
                              const Rational& tau) {
  Rational w(0);
  for (const ResourceCounts& rc : tallies) {
    if (rc.total() == 0) continue;
    if (rc.red > 0)
      w += Rational(rc.red) * utility_from_counts(rc, Color::Red, tau);
    if (rc.blue > 0)
      w += Rational(rc.blue) * utility_from_counts(rc, Color::Blue, tau);
  }
  return w;
}

Rational social_welfare(const Instance& g, const StrategyProfile& s) {
  return welfare_from_tallies(tally(g, s), g.tau);
}

}  // namespace srsg
