#include "srsg/exact.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>

#include "srsg/greedy.hpp"
#include "srsg/twosat.hpp"

namespace srsg {
namespace {

bool exceeds_budget(const Instance& g, std::int64_t cap) {
  unsigned __int128 size = 1;
  for (const auto& xs : g.access) {
    size *= xs.size();
    if (size > static_cast<unsigned __int128>(cap)) return true;
  }
  return false;
}

// Visits every feasible profile in lexicographic order of the assignment
// vector; fn may return false to stop early.
template <typename Fn>
void for_each_profile(const Instance& g, Fn&& fn) {
  const std::int32_t n = g.agent_count();
  std::vector<std::size_t> digit(n, 0);
  StrategyProfile s;
  s.choice.resize(n);
  for (AgentId a = 0; a < n; ++a) s.choice[a] = g.access[a][0];

  while (true) {
    if (!fn(const_cast<const StrategyProfile&>(s))) return;
    std::int32_t pos = n - 1;
    while (pos >= 0) {
      if (++digit[pos] < g.access[pos].size()) {
        s.choice[pos] = g.access[pos][digit[pos]];
        break;
      }
      digit[pos] = 0;
      s.choice[pos] = g.access[pos][0];
      --pos;
    }
    if (pos < 0) return;
  }
}

void require_budget(const Instance& g, const EnumerationBudget& budget) {
  if (exceeds_budget(g, budget.max_profiles))
    throw BudgetExceeded("profile space exceeds the enumeration budget of " +
                         std::to_string(budget.max_profiles) + " profiles");
}

}  // namespace

StrategyProfile brute_force_optimum(const Instance& g, const EnumerationBudget& budget) {
  require_valid(g);
  require_budget(g, budget);

  std::optional<StrategyProfile> best;
  Rational best_welfare(0);
  for_each_profile(g, [&](const StrategyProfile& s) {
    Rational w = social_welfare(g, s);
    if (!best || w > best_welfare) {
      best = s;
      best_welfare = w;
    }
    return true;
  });
  return *best;
}

std::vector<StrategyProfile> enumerate_equilibria(const Instance& g, MoveMode mode,
                                                  const EnumerationBudget& budget) {
  require_valid(g);
  require_budget(g, budget);

  std::vector<StrategyProfile> equilibria;
  for_each_profile(g, [&](const StrategyProfile& s) {
    if (is_equilibrium(g, s, mode)) equilibria.push_back(s);
    return true;
  });
  return equilibria;
}

std::optional<StrategyProfile> decide_all_satisfied_agent_deg2(const Instance& g) {
  require_valid(g);
  if (g.tau != Rational(1))
    throw std::invalid_argument("decide_all_satisfied_agent_deg2 requires tau = 1");
  for (AgentId a = 0; a < g.agent_count(); ++a)
    if (g.access[a].size() > 2)
      throw std::invalid_argument("agent " + std::to_string(a) +
                                  " has degree > 2");

  // Variable q+1 true: resource q hosts only red agents; false: only blue.
  std::vector<std::vector<std::int32_t>> clauses;
  clauses.reserve(g.agent_count());
  for (AgentId a = 0; a < g.agent_count(); ++a) {
    const auto& xs = g.access[a];
    const bool red = g.colors[a] == Color::Red;
    if (xs.size() == 1) {
      std::int32_t v = xs[0] + 1;
      clauses.push_back({red ? v : -v});
    } else {
      std::int32_t v1 = xs[0] + 1, v2 = xs[1] + 1;
      clauses.push_back(red ? std::vector<std::int32_t>{v1, v2}
                            : std::vector<std::int32_t>{-v1, -v2});
    }
  }

  auto assignment = solve_2sat(g.resource_count, clauses);
  if (!assignment) return std::nullopt;

  StrategyProfile s;
  s.choice.resize(g.agent_count());
  for (AgentId a = 0; a < g.agent_count(); ++a) {
    const bool want = g.colors[a] == Color::Red;
    ResourceId target = -1;
    for (ResourceId q : g.access[a])
      if ((*assignment)[q + 1] == want) {
        target = q;
        break;
      }
    if (target == -1)
      throw std::logic_error("2SAT assignment violates an agent clause");
    s.choice[a] = target;
  }
  return s;
}

StrategyProfile optimum_resource_deg2(const Instance& g) {
  require_valid(g);
  auto accessors = g.accessor_lists();
  for (ResourceId q = 0; q < g.resource_count; ++q)
    if (accessors[q].size() > 2)
      throw std::invalid_argument("resource " + std::to_string(q) +
                                  " has degree > 2");

  const std::int32_t n = g.agent_count();
  const std::int32_t k = g.resource_count;
  std::vector<ResourceId> choice(n, -1);
  std::vector<bool> resource_alive(k, true);
  // Current accessor sets shrink as agents get assigned.
  std::vector<std::vector<AgentId>> current = accessors;

  // Step 1: peel resources whose remaining accessors are one color (or one
  // agent, or none); those agents reach the utility cap on that resource.
  bool changed = true;
  while (changed) {
    changed = false;
    for (ResourceId q = 0; q < k; ++q) {
      if (!resource_alive[q]) continue;
      auto& acc = current[q];
      acc.erase(std::remove_if(acc.begin(), acc.end(),
                               [&](AgentId a) { return choice[a] != -1; }),
                acc.end());
      bool monochrome = true;
      for (std::size_t i = 1; i < acc.size(); ++i)
        if (g.colors[acc[i]] != g.colors[acc[0]]) {
          monochrome = false;
          break;
        }
      if (!monochrome) continue;
      for (AgentId a : acc) choice[a] = q;
      resource_alive[q] = false;
      changed = true;
    }
  }

  // Residual: every live resource has exactly one red and one blue accessor.
  std::vector<AgentId> agents;
  std::vector<ResourceId> resources;
  std::vector<std::int32_t> agent_index(n, -1), resource_index(k, -1);
  for (AgentId a = 0; a < n; ++a)
    if (choice[a] == -1) {
      agent_index[a] = static_cast<std::int32_t>(agents.size());
      agents.push_back(a);
    }
  for (ResourceId q = 0; q < k; ++q)
    if (resource_alive[q]) {
      resource_index[q] = static_cast<std::int32_t>(resources.size());
      resources.push_back(q);
    }

  if (!agents.empty()) {
    std::vector<std::vector<std::int32_t>> adjacency(agents.size());
    for (std::size_t i = 0; i < agents.size(); ++i)
      for (ResourceId q : g.access[agents[i]])
        if (resource_alive[q]) adjacency[i].push_back(resource_index[q]);

    auto matching = max_bipartite_matching(static_cast<std::int32_t>(agents.size()),
                                           static_cast<std::int32_t>(resources.size()),
                                           adjacency);
    for (std::size_t i = 0; i < agents.size(); ++i) {
      if (matching[i] != -1) {
        choice[agents[i]] = resources[matching[i]];
      } else {
        for (ResourceId q : g.access[agents[i]])
          if (resource_alive[q]) {
            choice[agents[i]] = q;
            break;
          }
      }
    }
  }

  StrategyProfile s{std::move(choice)};
  require_feasible(g, s);
  return s;
}

StrategyProfile approx_iae_2(const Instance& g) {
  require_valid(g);

  StrategyProfile s = compute_ibe_greedy(g).profile;
  auto t = tally(g, s);
  // Each welfare-improving step gains more than 1/n^4 at tau = 1 and the
  // welfare is bounded by n, so n^5 steps suffice (plus the terminating scan).
  std::int64_t remaining = step_bound_pow5(g.agent_count());
  if (remaining < INT64_MAX) ++remaining;

  while (remaining-- > 0) {
    std::optional<Move> best;
    Rational best_gain(0);
    for (AgentId a = 0; a < g.agent_count(); ++a) {
      ResourceId from = s.choice[a];
      const Color c = g.colors[a];
      ResourceCounts from_before = t[from];
      ResourceCounts from_after = from_before;
      (c == Color::Red ? from_after.red : from_after.blue) -= 1;
      for (ResourceId to : g.access[a]) {
        if (to == from) continue;
        ResourceCounts to_before = t[to];
        ResourceCounts to_after = to_before;
        (c == Color::Red ? to_after.red : to_after.blue) += 1;
        std::vector<ResourceCounts> local{from_before, to_before};
        std::vector<ResourceCounts> local_after{from_after, to_after};
        Rational gain = welfare_at_tau1_from_tallies(local_after) -
                        welfare_at_tau1_from_tallies(local);
        if (gain > Rational(0) && (!best || gain > best_gain)) {
          best = Move{a, from, to};
          best_gain = gain;
        }
      }
    }
    if (!best) return s;
    Color c = g.colors[best->agent];
    (c == Color::Red ? t[best->from].red : t[best->from].blue) -= 1;
    (c == Color::Red ? t[best->to].red : t[best->to].blue) += 1;
    s.choice[best->agent] = best->to;
  }
  throw std::logic_error("welfare ascent exceeded its step bound");
}

std::vector<std::int32_t> max_bipartite_matching(
    std::int32_t left_count, std::int32_t right_count,
    const std::vector<std::vector<std::int32_t>>& adjacency) {
  constexpr std::int32_t kInf = std::numeric_limits<std::int32_t>::max();
  std::vector<std::int32_t> match_left(left_count, -1);
  std::vector<std::int32_t> match_right(right_count, -1);
  std::vector<std::int32_t> dist(left_count, kInf);

  auto bfs = [&]() {
    std::queue<std::int32_t> queue;
    for (std::int32_t l = 0; l < left_count; ++l) {
      if (match_left[l] == -1) {
        dist[l] = 0;
        queue.push(l);
      } else {
        dist[l] = kInf;
      }
    }
    bool found = false;
    while (!queue.empty()) {
      std::int32_t l = queue.front();
      queue.pop();
      for (std::int32_t r : adjacency[l]) {
        std::int32_t next = match_right[r];
        if (next == -1) {
          found = true;
        } else if (dist[next] == kInf) {
          dist[next] = dist[l] + 1;
          queue.push(next);
        }
      }
    }
    return found;
  };

  std::function<bool(std::int32_t)> dfs = [&](std::int32_t l) {
    for (std::int32_t r : adjacency[l]) {
      std::int32_t next = match_right[r];
      if (next == -1 || (dist[next] == dist[l] + 1 && dfs(next))) {
        match_left[l] = r;
        match_right[r] = l;
        return true;
      }
    }
    dist[l] = kInf;
    return false;
  };

  while (bfs())
    for (std::int32_t l = 0; l < left_count; ++l)
      if (match_left[l] == -1) dfs(l);

  return match_left;
}

}  // namespace srsg
