#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "srsg/game.hpp"

namespace srsg {

// Impact-aware agents evaluate a deviation on the post-move fraction at the
// target (they count themselves in); impact-blind agents only see the target's
// pre-move fraction. An empty target counts as improving for an impact-blind
// agent iff her current utility is below tau.
enum class MoveMode : std::uint8_t { ImpactAware, ImpactBlind };

inline const char* to_string(MoveMode m) {
  return m == MoveMode::ImpactAware ? "aware" : "blind";
}

struct Move {
  AgentId agent;
  ResourceId from;
  ResourceId to;

  bool operator==(const Move&) const = default;
};

// Activation policy for better-response dynamics. The model itself leaves the
// order open; all three policies are deterministic (RandomSeeded given its seed).
struct Scheduler {
  enum class Kind : std::uint8_t { RoundRobin, RandomSeeded, BestGain };
  Kind kind = Kind::RoundRobin;
  std::uint64_t seed = 0;

  static Scheduler round_robin() { return {Kind::RoundRobin, 0}; }
  static Scheduler random_seeded(std::uint64_t seed) { return {Kind::RandomSeeded, seed}; }
  static Scheduler best_gain() { return {Kind::BestGain, 0}; }
};

enum class Termination : std::uint8_t { Converged, StepLimit };

struct TraceStep {
  Move move;
  Rational welfare_after;
  std::int64_t phi_after;
};

struct DynamicsTrace {
  StrategyProfile initial;
  std::vector<TraceStep> steps;
  Termination terminated = Termination::Converged;
  StrategyProfile final;  // equals initial with all steps applied
};

// n^5 clamped to the int64 range: the step bound that always suffices for
// impact-blind dynamics and the welfare ascent.
std::int64_t step_bound_pow5(std::int64_t n);

// True iff m improves the mover's utility under the given rationality model.
// Requires m.from == s(m.agent), m.to accessible and distinct from m.from.
bool is_improving(const Instance& g, const Move& m, const StrategyProfile& s,
                  MoveMode mode);

// Some improving move per the scheduler policy, or nullopt iff s is an
// equilibrium for the mode. RoundRobin: lowest agent id with an improving
// move, lowest target id. BestGain: maximum gain, ties by agent then resource.
std::optional<Move> find_improving_move(const Instance& g, const StrategyProfile& s,
                                        MoveMode mode, const Scheduler& sched);

// Better-response dynamics until convergence or max_steps moves (max_steps >= 1).
DynamicsTrace run_dynamics(const Instance& g, const StrategyProfile& init,
                           MoveMode mode, const Scheduler& sched,
                           std::int64_t max_steps);

// Same move sequence without the per-step welfare and potential bookkeeping.
// Exact welfare sums over many resources can exceed the 64-bit rational
// range, so this is the variant for timing runs and large instances.
struct DynamicsSummary {
  std::int64_t steps = 0;
  Termination terminated = Termination::Converged;
  StrategyProfile final;
};
DynamicsSummary run_dynamics_summary(const Instance& g, const StrategyProfile& init,
                                     MoveMode mode, const Scheduler& sched,
                                     std::int64_t max_steps);

bool is_equilibrium(const Instance& g, const StrategyProfile& s, MoveMode mode);

// No agent has an impact-aware improving move reaching beta times her current
// utility. beta >= 1; a 1-approximate equilibrium is exactly an equilibrium.
bool is_beta_approx_iae(const Instance& g, const StrategyProfile& s,
                        const Rational& beta);

// Phi(s) = sum over resources of the majority color count. Never decreases
// under impact-aware improving moves, for every tau.
std::int64_t potential_phi(const Instance& g, const StrategyProfile& s);

// All n utilities sorted non-increasing.
std::vector<Rational> utility_vector_z(const Instance& g, const StrategyProfile& s);

// Social welfare recomputed as if tau were 1: sum over nonempty resources of
// (red^2 + blue^2) / total. Strictly increases under impact-blind improving
// moves regardless of the instance tau.
Rational welfare_at_tau1(const Instance& g, const StrategyProfile& s);
Rational welfare_at_tau1_from_tallies(const std::vector<ResourceCounts>& tallies);

// CSV with header: step,agent,from,to,welfare_num,welfare_den,phi
std::string trace_to_csv(const DynamicsTrace& trace);

}  // namespace srsg
