#pragma once

#include <cstdint>

#include "srsg/game.hpp"
#include "srsg/rational.hpp"

namespace srsg {

// The two-resource, four-red, four-blue showcase instance with its three
// canonical profiles. At the default tau = 3/5: opt has welfare 62/15 and is
// no equilibrium at all, iae is an impact-aware equilibrium with welfare
// 41/10, ibe is impact-blind-stable with welfare 4 but admits impact-aware
// deviations.
struct Figure1 {
  Instance instance;
  StrategyProfile opt;
  StrategyProfile iae;
  StrategyProfile ibe;
};
Figure1 figure1(const Rational& tau = Rational(3, 5));

// Three-resource family realizing the worst-case equilibrium quality: the
// ratio opt/worst approaches 4/(4-tau) for tau below 2-sqrt(2) and 2*tau
// above, as alpha grows. worst_iae is verified impact-aware stable; too small
// an alpha throws.
struct PoaFamily {
  Instance instance;
  StrategyProfile worst_iae;
  StrategyProfile opt;
};
PoaFamily poa_family(const Rational& tau, std::int64_t alpha);

// Two-profile instance (x >= 6, x/y <= 1/2, tau = x/y) whose unique
// impact-blind equilibrium is strictly worse than the optimum: only one blue
// agent has a choice, between a crowded mixed resource and a lone blue peer.
struct PosGapFamily {
  Instance instance;
  Rational tau;
  StrategyProfile opt;  // the pivot agent on q1; not an IBE
  StrategyProfile ibe;  // the pivot agent on q2; the unique IBE
};
PosGapFamily pos_gap_family(std::int64_t x, std::int64_t y);

// Six-agent instance on which the greedy construction yields an impact-blind
// equilibrium that is not impact-aware stable (tau = 1).
Instance greedy_iae_counterexample();

struct RandomParams {
  std::int32_t n_resources = 1;
  std::int32_t n_red = 1;
  std::int32_t n_blue = 1;
  double edge_prob = 0.5;  // in (0,1]
  Rational tau = Rational(1, 2);
  std::uint64_t seed = 0;
};

// Seed-reproducible instance: edges drawn independently with edge_prob
// (splitmix64 stream), agents left with no edge patched with one uniform
// random resource. Red agents take ids 0..n_red-1, blue agents follow.
Instance random_instance(const RandomParams& params);

// Seed-reproducible feasible profile: uniform accessible resource per agent.
StrategyProfile random_profile(const Instance& g, std::uint64_t seed);

}  // namespace srsg
