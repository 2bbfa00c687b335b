#include "srsg/dynamics.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "srsg/prng.hpp"

namespace srsg {
namespace {

Rational contribution(const ResourceCounts& rc, const Rational& tau) {
  Rational w(0);
  if (rc.total() == 0) return w;
  if (rc.red > 0) w += Rational(rc.red) * utility_from_counts(rc, Color::Red, tau);
  if (rc.blue > 0) w += Rational(rc.blue) * utility_from_counts(rc, Color::Blue, tau);
  return w;
}

ResourceCounts without(ResourceCounts rc, Color c) {
  (c == Color::Red ? rc.red : rc.blue) -= 1;
  return rc;
}

ResourceCounts with_added(ResourceCounts rc, Color c) {
  (c == Color::Red ? rc.red : rc.blue) += 1;
  return rc;
}

// Post-move utility of a c-colored agent joining a resource currently at rc.
Rational post_move_utility(const ResourceCounts& rc, Color c, const Rational& tau) {
  return utility_from_counts(with_added(rc, c), c, tau);
}

// What an impact-blind agent believes the target is worth: the pre-move
// own-color fraction capped at tau, or tau for an empty target.
Rational perceived_target_utility(const ResourceCounts& rc, Color c,
                                  const Rational& tau) {
  if (rc.total() == 0) return tau;
  Rational own(rc.of(c), rc.total());
  return own < tau ? own : tau;
}

bool improving_from_tallies(const std::vector<ResourceCounts>& t, Color c,
                            const Rational& tau, ResourceId from, ResourceId to,
                            MoveMode mode) {
  Rational current = utility_from_counts(t[from], c, tau);
  if (mode == MoveMode::ImpactAware)
    return post_move_utility(t[to], c, tau) > current;
  if (t[to].total() == 0) return current < tau;
  return perceived_target_utility(t[to], c, tau) > current;
}

Rational gain_from_tallies(const std::vector<ResourceCounts>& t, Color c,
                           const Rational& tau, ResourceId from, ResourceId to,
                           MoveMode mode) {
  Rational current = utility_from_counts(t[from], c, tau);
  Rational target = mode == MoveMode::ImpactAware
                        ? post_move_utility(t[to], c, tau)
                        : perceived_target_utility(t[to], c, tau);
  return target - current;
}

std::optional<Move> find_move_impl(const Instance& g,
                                   const std::vector<ResourceCounts>& t,
                                   const StrategyProfile& s, MoveMode mode,
                                   const Scheduler& sched, SplitMix64* rng,
                                   std::int32_t start_agent) {
  const std::int32_t n = g.agent_count();

  switch (sched.kind) {
    case Scheduler::Kind::RoundRobin: {
      for (std::int32_t i = 0; i < n; ++i) {
        AgentId a = (start_agent + i) % n;
        ResourceId from = s.choice[a];
        for (ResourceId to : g.access[a]) {
          if (to == from) continue;
          if (improving_from_tallies(t, g.colors[a], g.tau, from, to, mode))
            return Move{a, from, to};
        }
      }
      return std::nullopt;
    }
    case Scheduler::Kind::BestGain: {
      std::optional<Move> best;
      Rational best_gain(0);
      for (AgentId a = 0; a < n; ++a) {
        ResourceId from = s.choice[a];
        for (ResourceId to : g.access[a]) {
          if (to == from) continue;
          if (!improving_from_tallies(t, g.colors[a], g.tau, from, to, mode))
            continue;
          Rational gain = gain_from_tallies(t, g.colors[a], g.tau, from, to, mode);
          if (!best || gain > best_gain) {
            best = Move{a, from, to};
            best_gain = gain;
          }
        }
      }
      return best;
    }
    case Scheduler::Kind::RandomSeeded: {
      std::vector<Move> improving;
      for (AgentId a = 0; a < n; ++a) {
        ResourceId from = s.choice[a];
        for (ResourceId to : g.access[a]) {
          if (to == from) continue;
          if (improving_from_tallies(t, g.colors[a], g.tau, from, to, mode))
            improving.push_back(Move{a, from, to});
        }
      }
      if (improving.empty()) return std::nullopt;
      SplitMix64 local(sched.seed);
      SplitMix64& r = rng ? *rng : local;
      return improving[r.next_below(improving.size())];
    }
  }
  return std::nullopt;
}

std::int64_t majority(const ResourceCounts& rc) {
  return std::max(rc.red, rc.blue);
}

}  // namespace

std::int64_t step_bound_pow5(std::int64_t n) {
  if (n <= 1) return 1;
  unsigned __int128 bound = 1;
  for (int i = 0; i < 5; ++i) {
    bound *= static_cast<unsigned __int128>(n);
    if (bound > static_cast<unsigned __int128>(INT64_MAX)) return INT64_MAX;
  }
  return static_cast<std::int64_t>(bound);
}

bool is_improving(const Instance& g, const Move& m, const StrategyProfile& s,
                  MoveMode mode) {
  require_feasible(g, s);
  if (m.agent < 0 || m.agent >= g.agent_count())
    throw std::invalid_argument("unknown agent id " + std::to_string(m.agent));
  if (s.choice[m.agent] != m.from)
    throw std::invalid_argument("move.from does not match the agent's strategy");
  const auto& xs = g.access[m.agent];
  if (m.to == m.from || !std::binary_search(xs.begin(), xs.end(), m.to))
    throw std::invalid_argument("move target is not a distinct accessible resource");

  auto t = tally(g, s);
  return improving_from_tallies(t, g.colors[m.agent], g.tau, m.from, m.to, mode);
}

std::optional<Move> find_improving_move(const Instance& g, const StrategyProfile& s,
                                        MoveMode mode, const Scheduler& sched) {
  require_feasible(g, s);
  auto t = tally(g, s);
  return find_move_impl(g, t, s, mode, sched, nullptr, 0);
}

DynamicsTrace run_dynamics(const Instance& g, const StrategyProfile& init,
                           MoveMode mode, const Scheduler& sched,
                           std::int64_t max_steps) {
  if (max_steps <= 0)
    throw std::invalid_argument("max_steps must be a positive integer");
  require_feasible(g, init);

  DynamicsTrace trace;
  trace.initial = init;

  StrategyProfile s = init;
  auto t = tally(g, s);
  Rational welfare = welfare_from_tallies(t, g.tau);
  std::int64_t phi = 0;
  for (const auto& rc : t) phi += majority(rc);

  SplitMix64 rng(sched.seed);
  std::int32_t cursor = 0;

  while (static_cast<std::int64_t>(trace.steps.size()) < max_steps) {
    auto move = find_move_impl(g, t, s, mode, sched, &rng, cursor);
    if (!move) {
      trace.terminated = Termination::Converged;
      trace.final = std::move(s);
      return trace;
    }

    Color c = g.colors[move->agent];
    Rational before = contribution(t[move->from], g.tau) + contribution(t[move->to], g.tau);
    std::int64_t phi_before = majority(t[move->from]) + majority(t[move->to]);

    t[move->from] = without(t[move->from], c);
    t[move->to] = with_added(t[move->to], c);
    s.choice[move->agent] = move->to;

    welfare += contribution(t[move->from], g.tau) + contribution(t[move->to], g.tau) - before;
    phi += majority(t[move->from]) + majority(t[move->to]) - phi_before;

    trace.steps.push_back(TraceStep{*move, welfare, phi});
    cursor = (move->agent + 1) % g.agent_count();
  }

  trace.terminated = find_move_impl(g, t, s, mode, sched, &rng, cursor)
                         ? Termination::StepLimit
                         : Termination::Converged;
  trace.final = std::move(s);
  return trace;
}

DynamicsSummary run_dynamics_summary(const Instance& g, const StrategyProfile& init,
                                     MoveMode mode, const Scheduler& sched,
                                     std::int64_t max_steps) {
  if (max_steps <= 0)
    throw std::invalid_argument("max_steps must be a positive integer");
  require_feasible(g, init);

  DynamicsSummary summary;
  StrategyProfile s = init;
  auto t = tally(g, s);
  SplitMix64 rng(sched.seed);
  std::int32_t cursor = 0;

  while (summary.steps < max_steps) {
    auto move = find_move_impl(g, t, s, mode, sched, &rng, cursor);
    if (!move) {
      summary.terminated = Termination::Converged;
      summary.final = std::move(s);
      return summary;
    }
    Color c = g.colors[move->agent];
    t[move->from] = without(t[move->from], c);
    t[move->to] = with_added(t[move->to], c);
    s.choice[move->agent] = move->to;
    ++summary.steps;
    cursor = (move->agent + 1) % g.agent_count();
  }
  summary.terminated = find_move_impl(g, t, s, mode, sched, &rng, cursor)
                           ? Termination::StepLimit
                           : Termination::Converged;
  summary.final = std::move(s);
  return summary;
}

bool is_equilibrium(const Instance& g, const StrategyProfile& s, MoveMode mode) {
  return !find_improving_move(g, s, mode, Scheduler::round_robin()).has_value();
}

bool is_beta_approx_iae(const Instance& g, const StrategyProfile& s,
                        const Rational& beta) {
  if (beta < Rational(1))
    throw std::invalid_argument("beta must be at least 1");
  require_feasible(g, s);

  auto t = tally(g, s);
  for (AgentId a = 0; a < g.agent_count(); ++a) {
    ResourceId from = s.choice[a];
    Rational current = utility_from_counts(t[from], g.colors[a], g.tau);
    for (ResourceId to : g.access[a]) {
      if (to == from) continue;
      Rational post = post_move_utility(t[to], g.colors[a], g.tau);
      // A violation is an improving move that reaches beta times the current
      // utility; for agents at utility 0 any improving move violates.
      if (post > current && post >= beta * current) return false;
    }
  }
  return true;
}

std::int64_t potential_phi(const Instance& g, const StrategyProfile& s) {
  require_feasible(g, s);
  std::int64_t phi = 0;
  for (const auto& rc : tally(g, s)) phi += majority(rc);
  return phi;
}

std::vector<Rational> utility_vector_z(const Instance& g, const StrategyProfile& s) {
  require_feasible(g, s);
  auto t = tally(g, s);
  std::vector<Rational> z;
  z.reserve(g.agent_count());
  for (AgentId a = 0; a < g.agent_count(); ++a)
    z.push_back(utility_from_counts(t[s.choice[a]], g.colors[a], g.tau));
  std::sort(z.begin(), z.end(), [](const Rational& a, const Rational& b) { return b < a; });
  return z;
}

Rational welfare_at_tau1_from_tallies(const std::vector<ResourceCounts>& tallies) {
  Rational w(0);
  for (const ResourceCounts& rc : tallies) {
    if (rc.total() == 0) continue;
    std::int64_t r = rc.red, b = rc.blue;
    w += Rational(r * r + b * b, r + b);
  }
  return w;
}

Rational welfare_at_tau1(const Instance& g, const StrategyProfile& s) {
  require_feasible(g, s);
  return welfare_at_tau1_from_tallies(tally(g, s));
}

std::string trace_to_csv(const DynamicsTrace& trace) {
  std::ostringstream out;
  out << "step,agent,from,to,welfare_num,welfare_den,phi\n";
  std::int64_t step = 0;
  for (const TraceStep& ts : trace.steps) {
    out << ++step << ',' << ts.move.agent << ',' << ts.move.from << ','
        << ts.move.to << ',' << ts.welfare_after.num() << ','
        << ts.welfare_after.den() << ',' << ts.phi_after << "\n";
  }
  return out.str();
}

}  // namespace srsg
