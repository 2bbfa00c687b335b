#include "srsg/generators.hpp"

#include <stdexcept>

#include "srsg/dynamics.hpp"
#include "srsg/prng.hpp"

namespace srsg {

Figure1 figure1(const Rational& tau) {
  // Resources q1 = 0, q2 = 1. Reds 0..3, blues 4..7. Agents 3, 5, 7 can pick
  // either resource; everyone else is pinned, which caps the optimum at 62/15.
  Instance g;
  g.tau = tau;
  g.resource_count = 2;
  g.colors = {Color::Red, Color::Red, Color::Red, Color::Red,
              Color::Blue, Color::Blue, Color::Blue, Color::Blue};
  g.access = {{0}, {1}, {1}, {0, 1}, {0}, {0, 1}, {1}, {0, 1}};

  Figure1 fig;
  fig.instance = std::move(g);
  fig.opt = StrategyProfile{{0, 1, 1, 1, 0, 0, 1, 1}};  // q1: 1R2B, q2: 3R2B
  fig.iae = StrategyProfile{{0, 1, 1, 1, 0, 0, 1, 0}};  // q1: 1R3B, q2: 3R1B
  fig.ibe = StrategyProfile{{0, 1, 1, 0, 0, 0, 1, 1}};  // 2R2B on each
  return fig;
}

PoaFamily poa_family(const Rational& tau, std::int64_t alpha) {
  if (tau <= Rational(0) || tau > Rational(1))
    throw std::invalid_argument("tau must lie in (0,1]");
  if (alpha < 2) throw std::invalid_argument("alpha must be at least 2");

  // Exact branch test for tau vs 2 - sqrt(2): sign of tau^2 - 4*tau + 2.
  const bool low_tau = tau * tau - Rational(4) * tau + Rational(2) > Rational(0);
  std::int64_t n_rx, n_bx;
  if (low_tau) {
    // Worst mixed resource sits at a blue fraction of tau/2.
    n_rx = (Rational(alpha) * (Rational(2) - tau) / Rational(2)).round_int();
    n_bx = (Rational(alpha) * tau / Rational(2)).round_int();
  } else {
    // Worst mixed resource is an even split.
    n_rx = n_bx = (Rational(alpha) / Rational(2)).round_int();
  }
  const std::int64_t z = (Rational(2) / tau).ceil_int();
  if (n_rx < 1 || n_bx < 1)
    throw std::invalid_argument("alpha too small: a color class would be empty");

  // Resources: q1 = 0 (mixed), q2 = 1, q3 = 2.
  Instance g;
  g.tau = tau;
  g.resource_count = 3;
  StrategyProfile worst, opt;
  auto add = [&](Color c, std::vector<ResourceId> access, ResourceId worst_at,
                 ResourceId opt_at) {
    g.colors.push_back(c);
    g.access.push_back(std::move(access));
    worst.choice.push_back(worst_at);
    opt.choice.push_back(opt_at);
  };
  for (std::int64_t i = 0; i < n_rx; ++i) add(Color::Red, {0, 2}, 0, 2);
  for (std::int64_t i = 0; i < z; ++i) add(Color::Red, {1, 2}, 1, 2);
  for (std::int64_t i = 0; i < n_bx; ++i) add(Color::Blue, {0, 1}, 0, 1);
  for (std::int64_t i = 0; i < z; ++i) add(Color::Blue, {1, 2}, 2, 1);

  PoaFamily family{std::move(g), std::move(worst), std::move(opt)};
  require_valid(family.instance);
  if (!is_equilibrium(family.instance, family.worst_iae, MoveMode::ImpactAware))
    throw std::invalid_argument(
        "alpha too small for the worst-case profile to be impact-aware stable");
  return family;
}

PosGapFamily pos_gap_family(std::int64_t x, std::int64_t y) {
  if (x < 6) throw std::invalid_argument("x must be at least 6");
  Rational tau(x, y);
  if (tau > Rational(1, 2))
    throw std::invalid_argument("x/y must be at most 1/2");

  // q1 = 0 hosts (y-x)+1 reds and x-1 blues, q2 = 1 hosts one blue. The pivot
  // blue agent (first blue id) is the only one with both edges.
  Instance g;
  g.tau = tau;
  g.resource_count = 2;
  const std::int64_t reds = (y - x) + 1;
  for (std::int64_t i = 0; i < reds; ++i) {
    g.colors.push_back(Color::Red);
    g.access.push_back({0});
  }
  const AgentId pivot = static_cast<AgentId>(reds);
  g.colors.push_back(Color::Blue);
  g.access.push_back({0, 1});
  for (std::int64_t i = 0; i < x - 2; ++i) {
    g.colors.push_back(Color::Blue);
    g.access.push_back({0});
  }
  g.colors.push_back(Color::Blue);
  g.access.push_back({1});

  PosGapFamily family;
  family.tau = tau;
  family.opt.choice.assign(g.agent_count(), 0);
  family.opt.choice.back() = 1;
  family.ibe = family.opt;
  family.ibe.choice[pivot] = 1;
  family.instance = std::move(g);
  require_valid(family.instance);
  return family;
}

Instance greedy_iae_counterexample() {
  // tau = 1; the greedy pick order strands one blue agent on the crowded
  // resource although joining the lone red agent would be better.
  Instance g;
  g.tau = Rational(1);
  g.resource_count = 2;
  g.colors = {Color::Red, Color::Red, Color::Red, Color::Red,
              Color::Blue, Color::Blue};
  g.access = {{0}, {1}, {1}, {1}, {0, 1}, {1}};
  return g;
}

Instance random_instance(const RandomParams& params) {
  if (params.n_resources < 1)
    throw std::invalid_argument("n_resources must be positive");
  if (params.n_red < 1 || params.n_blue < 1)
    throw std::invalid_argument("both colors required: n_red and n_blue must be positive");
  if (!(params.edge_prob > 0.0) || params.edge_prob > 1.0)
    throw std::invalid_argument("edge_prob must lie in (0,1]");
  if (params.tau < Rational(0) || params.tau > Rational(1))
    throw std::invalid_argument("tau must lie in [0,1]");

  SplitMix64 rng(params.seed);
  Instance g;
  g.tau = params.tau;
  g.resource_count = params.n_resources;
  const std::int32_t n = params.n_red + params.n_blue;
  g.colors.reserve(n);
  g.access.reserve(n);
  for (std::int32_t a = 0; a < n; ++a) {
    g.colors.push_back(a < params.n_red ? Color::Red : Color::Blue);
    std::vector<ResourceId> xs;
    for (ResourceId q = 0; q < params.n_resources; ++q)
      if (rng.next_unit() < params.edge_prob) xs.push_back(q);
    if (xs.empty())
      xs.push_back(static_cast<ResourceId>(rng.next_below(params.n_resources)));
    g.access.push_back(std::move(xs));
  }
  return g;
}

StrategyProfile random_profile(const Instance& g, std::uint64_t seed) {
  SplitMix64 rng(seed);
  StrategyProfile s;
  s.choice.reserve(g.agent_count());
  for (AgentId a = 0; a < g.agent_count(); ++a) {
    const auto& xs = g.access[a];
    s.choice.push_back(xs[rng.next_below(xs.size())]);
  }
  return s;
}

}  // namespace srsg
