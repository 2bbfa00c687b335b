// Acceptance suite: runs every release criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exit code is the failure count.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "srsg/srsg.hpp"

using namespace srsg;

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
  double time_limit_seconds = 0.0;  // 0 = untimed
};

const Rational kTauGrid[] = {Rational(1, 4), Rational(1, 2), Rational(3, 5),
                             Rational(1)};

bool lex_strictly_greater(const std::vector<Rational>& after,
                          const std::vector<Rational>& before) {
  for (std::size_t i = 0; i < after.size(); ++i) {
    if (after[i] > before[i]) return true;
    if (after[i] < before[i]) return false;
  }
  return false;
}

// ---- 1. Showcase reproduction -------------------------------------------

bool criterion_figure1(std::string& detail) {
  Figure1 fig = figure1();
  bool ok = true;
  ok &= social_welfare(fig.instance, fig.opt) == Rational(62, 15);
  ok &= social_welfare(fig.instance, fig.iae) == Rational(41, 10);
  ok &= social_welfare(fig.instance, fig.ibe) == Rational(4);
  ok &= !is_equilibrium(fig.instance, fig.opt, MoveMode::ImpactAware);
  ok &= !is_equilibrium(fig.instance, fig.opt, MoveMode::ImpactBlind);
  ok &= is_equilibrium(fig.instance, fig.iae, MoveMode::ImpactAware);
  ok &= is_equilibrium(fig.instance, fig.ibe, MoveMode::ImpactBlind);
  ok &= !is_equilibrium(fig.instance, fig.ibe, MoveMode::ImpactAware);
  if (!ok) detail = "fixture welfares or equilibrium statuses are off";
  return ok;
}

// ---- 2. Greedy correctness ----------------------------------------------

bool criterion_greedy(std::string& detail) {
  SplitMix64 rng(0x5eed0002);
  for (int trial = 0; trial < 1000; ++trial) {
    RandomParams p;
    p.n_resources = 1 + static_cast<std::int32_t>(rng.next_below(10));
    p.n_red = 1 + static_cast<std::int32_t>(rng.next_below(20));
    p.n_blue = 1 + static_cast<std::int32_t>(rng.next_below(20));
    p.edge_prob = 0.15 + 0.85 * (trial % 7) / 7.0;
    p.tau = kTauGrid[trial % 4];
    p.seed = rng.next();
    Instance g = random_instance(p);

    GreedyResult result = compute_ibe_greedy(g);
    if (!is_equilibrium(g, result.profile, MoveMode::ImpactBlind)) {
      detail = "greedy output not impact-blind stable at trial " + std::to_string(trial);
      return false;
    }
    for (std::size_t i = 1; i < result.removal_log.size(); ++i)
      if (result.removal_log[i - 1].red_fraction < result.removal_log[i].red_fraction) {
        detail = "removal log not non-increasing at trial " + std::to_string(trial);
        return false;
      }
  }
  return true;
}

// ---- 3. Impact-blind convergence and step gain ---------------------------

bool criterion_ib_fip(std::string& detail) {
  SplitMix64 rng(0x5eed0003);
  for (int trial = 0; trial < 200; ++trial) {
    RandomParams p;
    p.n_resources = 2 + static_cast<std::int32_t>(rng.next_below(4));
    p.n_red = 1 + static_cast<std::int32_t>(rng.next_below(6));
    p.n_blue = 1 + static_cast<std::int32_t>(rng.next_below(6));
    p.edge_prob = 0.5 + 0.5 * (trial % 5) / 5.0;
    p.tau = kTauGrid[trial % 4];
    p.seed = rng.next();
    Instance g = random_instance(p);
    const std::int64_t n = g.agent_count();
    const std::int64_t step_bound = n * n * n * n * n;
    const Rational min_gain(1, n * n * n * n);

    StrategyProfile init = random_profile(g, rng.next());
    DynamicsTrace trace = run_dynamics(g, init, MoveMode::ImpactBlind,
                                       Scheduler::round_robin(), step_bound);
    if (trace.terminated != Termination::Converged) {
      detail = "impact-blind dynamics hit the n^5 step limit at trial " +
               std::to_string(trial);
      return false;
    }
    Rational w = welfare_at_tau1(g, trace.initial);
    StrategyProfile replay = trace.initial;
    for (const TraceStep& step : trace.steps) {
      replay.choice[step.move.agent] = step.move.to;
      Rational w_next = welfare_at_tau1(g, replay);
      if (!(w_next - w > min_gain)) {
        detail = "a step gained at most 1/n^4 at trial " + std::to_string(trial);
        return false;
      }
      w = w_next;
    }
  }
  return true;
}

// ---- 4. Majority potential and lexicographic utility vector --------------

bool criterion_potential(std::string& detail) {
  SplitMix64 rng(0x5eed0004);
  std::int64_t total_moves = 0;
  for (const Rational& tau : kTauGrid) {
    std::int64_t moves_this_tau = 0;
    const bool check_z = tau <= Rational(1, 2);
    for (int trial = 0; moves_this_tau < 2500 && trial < 20000; ++trial) {
      RandomParams p;
      p.n_resources = 2 + static_cast<std::int32_t>(rng.next_below(6));
      p.n_red = 1 + static_cast<std::int32_t>(rng.next_below(25));
      p.n_blue = 1 + static_cast<std::int32_t>(rng.next_below(25));
      p.edge_prob = 0.6;
      p.tau = tau;
      p.seed = rng.next();
      Instance g = random_instance(p);
      // Alternate random starts with crowded ones (everyone on their
      // lowest-id resource) so enough improving moves get recorded.
      StrategyProfile init;
      if (trial % 2 == 0) {
        init = random_profile(g, rng.next());
      } else {
        for (AgentId a = 0; a < g.agent_count(); ++a)
          init.choice.push_back(g.access[a][0]);
      }
      DynamicsTrace trace =
          run_dynamics(g, init, MoveMode::ImpactAware, Scheduler::round_robin(), 400);

      StrategyProfile replay = trace.initial;
      std::int64_t phi = potential_phi(g, replay);
      auto z = utility_vector_z(g, replay);
      for (const TraceStep& step : trace.steps) {
        replay.choice[step.move.agent] = step.move.to;
        if (step.phi_after < phi) {
          detail = "majority potential decreased (tau " + tau.to_string() + ")";
          return false;
        }
        if (check_z) {
          auto z_next = utility_vector_z(g, replay);
          if (!(step.phi_after > phi || lex_strictly_greater(z_next, z))) {
            detail = "neither potential nor utility vector advanced (tau " +
                     tau.to_string() + ")";
            return false;
          }
          z = std::move(z_next);
        }
        phi = step.phi_after;
        ++moves_this_tau;
      }
    }
    if (moves_this_tau < 2500) {
      detail = "not enough recorded moves for tau " + tau.to_string();
      return false;
    }
    total_moves += moves_this_tau;
  }
  if (total_moves < 10000) {
    detail = "fewer than 10^4 recorded moves";
    return false;
  }
  return true;
}

// ---- Enumerable instance pool for criteria 5-7 ----------------------------

std::vector<Instance> enumerable_pool() {
  std::vector<Instance> pool;
  SplitMix64 rng(0x5eed0567);
  while (pool.size() < 100) {
    RandomParams p;
    p.n_resources = 2 + static_cast<std::int32_t>(rng.next_below(2));
    p.n_red = 1 + static_cast<std::int32_t>(rng.next_below(4));
    p.n_blue = 1 + static_cast<std::int32_t>(rng.next_below(4));
    if (p.n_red + p.n_blue > 8) continue;
    p.edge_prob = 0.4 + 0.6 * (pool.size() % 5) / 5.0;
    p.tau = Rational(1);
    p.seed = rng.next();
    pool.push_back(random_instance(p));
  }
  return pool;
}

// ---- 5. Equilibrium containment -------------------------------------------

bool criterion_containment(std::string& detail) {
  auto pool = enumerable_pool();
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (const Rational& tau : kTauGrid) {
      Instance g = pool[i];
      g.tau = tau;
      auto aware = enumerate_equilibria(g, MoveMode::ImpactAware);
      auto blind = enumerate_equilibria(g, MoveMode::ImpactBlind);
      if (blind.empty()) {
        detail = "empty impact-blind equilibrium set (instance " +
                 std::to_string(i) + ", tau " + tau.to_string() + ")";
        return false;
      }
      for (const StrategyProfile& s : aware)
        if (std::find(blind.begin(), blind.end(), s) == blind.end()) {
          detail = "an impact-aware equilibrium is not impact-blind stable";
          return false;
        }
    }
  }
  return true;
}

// ---- 6. Worst-equilibrium quality -----------------------------------------

bool criterion_poa(std::string& detail) {
  auto pool = enumerable_pool();
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (const Rational& tau : kTauGrid) {
      Instance g = pool[i];
      g.tau = tau;
      StrategyProfile opt = brute_force_optimum(g);
      Rational opt_welfare = social_welfare(g, opt);
      for (MoveMode mode : {MoveMode::ImpactAware, MoveMode::ImpactBlind}) {
        auto equilibria = enumerate_equilibria(g, mode);
        if (equilibria.empty()) continue;  // possible for impact-aware agents
        Rational worst = social_welfare(g, equilibria[0]);
        for (const StrategyProfile& s : equilibria) {
          Rational w = social_welfare(g, s);
          if (w < worst) worst = w;
        }
        if (worst.is_zero()) continue;  // ratio undefined
        if (opt_welfare / worst > poa_bound(tau)) {
          detail = "empirical ratio exceeds the bound (instance " +
                   std::to_string(i) + ", tau " + tau.to_string() + ")";
          return false;
        }
      }
    }
  }

  struct Target {
    Rational tau;
    Rational bound;
  };
  for (const Target& target : {Target{Rational(1), Rational(2)},
                               Target{Rational(1, 2), Rational(8, 7)}}) {
    PoaFamily family = poa_family(target.tau, 200);
    if (!is_equilibrium(family.instance, family.worst_iae, MoveMode::ImpactAware)) {
      detail = "family worst profile is not impact-aware stable";
      return false;
    }
    double ratio = (social_welfare(family.instance, family.opt) /
                    social_welfare(family.instance, family.worst_iae))
                       .to_double();
    double bound = target.bound.to_double();
    if (std::abs(ratio - bound) > 0.05 * bound) {
      detail = "family ratio " + std::to_string(ratio) + " misses " +
               std::to_string(bound) + " by more than 5%";
      return false;
    }
  }
  return true;
}

// ---- 7. Best-equilibrium quality ------------------------------------------

bool criterion_pos(std::string& detail) {
  auto pool = enumerable_pool();
  for (std::size_t i = 0; i < pool.size(); ++i) {
    Instance g = pool[i];
    g.tau = Rational(1);
    StrategyProfile opt = brute_force_optimum(g);
    if (!is_equilibrium(g, opt, MoveMode::ImpactBlind)) {
      detail = "an optimum at tau 1 is not impact-blind stable (instance " +
               std::to_string(i) + ")";
      return false;
    }
  }

  PosGapFamily family = pos_gap_family(6, 12);
  auto blind = enumerate_equilibria(family.instance, MoveMode::ImpactBlind);
  if (blind.size() != 1 || !(blind[0] == family.ibe)) {
    detail = "the (6,12) fixture does not have a unique impact-blind equilibrium";
    return false;
  }
  if (is_equilibrium(family.instance, family.opt, MoveMode::ImpactBlind)) {
    detail = "the fixture optimum is unexpectedly stable";
    return false;
  }
  Rational gap = social_welfare(family.instance, family.opt) -
                 social_welfare(family.instance, family.ibe);
  if (gap != Rational(17, 132) || gap < Rational(1, 22)) {
    detail = "welfare gap is " + gap.to_string() + ", expected 17/132";
    return false;
  }
  return true;
}

// ---- 8. Two-approximation --------------------------------------------------

bool criterion_approx(std::string& detail) {
  SplitMix64 rng(0x5eed0008);
  for (int trial = 0; trial < 500; ++trial) {
    RandomParams p;
    p.n_resources = 2 + static_cast<std::int32_t>(rng.next_below(4));
    p.n_red = 1 + static_cast<std::int32_t>(rng.next_below(6));
    p.n_blue = 1 + static_cast<std::int32_t>(rng.next_below(6));
    p.edge_prob = 0.3 + 0.7 * (trial % 6) / 6.0;
    p.tau = kTauGrid[trial % 4];
    p.seed = rng.next();
    Instance g = random_instance(p);
    StrategyProfile s = approx_iae_2(g);
    if (!is_beta_approx_iae(g, s, Rational(2))) {
      detail = "a 2-approximation violation at trial " + std::to_string(trial);
      return false;
    }
  }
  return true;
}

// ---- 9. Tractable cases against the exhaustive oracle ----------------------

Instance random_agent_deg2(SplitMix64& rng) {
  Instance g;
  g.tau = Rational(1);
  g.resource_count = 2 + static_cast<std::int32_t>(rng.next_below(3));
  std::int32_t n_red = 1 + static_cast<std::int32_t>(rng.next_below(5));
  std::int32_t n_blue = 1 + static_cast<std::int32_t>(rng.next_below(5));
  for (std::int32_t a = 0; a < n_red + n_blue; ++a) {
    g.colors.push_back(a < n_red ? Color::Red : Color::Blue);
    std::vector<ResourceId> xs;
    xs.push_back(static_cast<ResourceId>(rng.next_below(g.resource_count)));
    if (rng.next_below(2)) {
      ResourceId q = static_cast<ResourceId>(rng.next_below(g.resource_count));
      if (q != xs[0]) xs.push_back(q);
    }
    std::sort(xs.begin(), xs.end());
    g.access.push_back(std::move(xs));
  }
  return g;
}

Instance random_resource_deg2(SplitMix64& rng) {
  Instance g;
  std::int32_t n_red = 1 + static_cast<std::int32_t>(rng.next_below(4));
  std::int32_t n_blue = 1 + static_cast<std::int32_t>(rng.next_below(4));
  std::int32_t n = n_red + n_blue;
  g.resource_count = n + static_cast<std::int32_t>(rng.next_below(3));
  std::vector<std::int32_t> slots(g.resource_count, 2);
  for (std::int32_t a = 0; a < n; ++a) {
    g.colors.push_back(a < n_red ? Color::Red : Color::Blue);
    std::vector<ResourceId> xs;
    std::int32_t want = 1 + static_cast<std::int32_t>(rng.next_below(2));
    for (int attempts = 0; attempts < 40 && static_cast<std::int32_t>(xs.size()) < want;
         ++attempts) {
      ResourceId q = static_cast<ResourceId>(rng.next_below(g.resource_count));
      if (slots[q] > 0 && std::find(xs.begin(), xs.end(), q) == xs.end()) {
        xs.push_back(q);
        --slots[q];
      }
    }
    if (xs.empty()) {
      for (ResourceId q = 0; q < g.resource_count; ++q)
        if (slots[q] > 0) {
          xs.push_back(q);
          --slots[q];
          break;
        }
    }
    std::sort(xs.begin(), xs.end());
    g.access.push_back(std::move(xs));
  }
  return g;
}

bool criterion_tractable(std::string& detail) {
  SplitMix64 rng(0x5eed0009);
  for (int trial = 0; trial < 200; ++trial) {
    Instance g = random_agent_deg2(rng);
    auto decided = decide_all_satisfied_agent_deg2(g);
    // All agents reach utility 1 iff the optimum welfare is n at tau = 1.
    Rational best = social_welfare(g, brute_force_optimum(g));
    bool oracle = best == Rational(g.agent_count());
    if (decided.has_value() != oracle) {
      detail = "degree-2 decision disagrees with the oracle at trial " +
               std::to_string(trial);
      return false;
    }
    if (decided)
      for (AgentId a = 0; a < g.agent_count(); ++a)
        if (utility(g, a, *decided) != Rational(1)) {
          detail = "degree-2 profile leaves an agent short of the cap";
          return false;
        }
  }
  for (int trial = 0; trial < 200; ++trial) {
    Instance g = random_resource_deg2(rng);
    g.tau = kTauGrid[trial % 4];
    StrategyProfile s = optimum_resource_deg2(g);
    if (social_welfare(g, s) != social_welfare(g, brute_force_optimum(g))) {
      detail = "resource-degree-2 optimum misses the oracle welfare at trial " +
               std::to_string(trial);
      return false;
    }
  }
  return true;
}

// ---- 10. Hardness gadget ----------------------------------------------------

CnfFormula random_three_four(SplitMix64& rng) {
  CnfFormula phi;
  phi.num_vars = 1 + static_cast<std::int32_t>(rng.next_below(4));
  std::vector<std::int32_t> budget(phi.num_vars + 1, 4);
  std::int32_t n_clauses = 1 + static_cast<std::int32_t>(rng.next_below(5));
  for (std::int32_t i = 0; i < n_clauses; ++i) {
    std::vector<std::int32_t> available;
    for (std::int32_t v = 1; v <= phi.num_vars; ++v)
      if (budget[v] > 0) available.push_back(v);
    if (available.empty()) break;
    std::int32_t size = 1 + static_cast<std::int32_t>(rng.next_below(3));
    std::vector<std::int32_t> clause;
    for (std::int32_t j = 0; j < size && !available.empty(); ++j) {
      std::size_t pick = rng.next_below(available.size());
      std::int32_t var = available[pick];
      available.erase(available.begin() + static_cast<std::ptrdiff_t>(pick));
      --budget[var];
      clause.push_back(rng.next_below(2) ? var : -var);
    }
    phi.clauses.push_back(std::move(clause));
  }
  if (phi.clauses.empty()) phi.clauses.push_back({1});
  return phi;
}

bool criterion_reduction(std::string& detail) {
  SplitMix64 rng(0x5eed000a);
  const Rational taus[] = {Rational(1), Rational(3, 5), Rational(1, 2)};
  for (int trial = 0; trial < 30; ++trial) {
    CnfFormula phi = random_three_four(rng);
    for (const Rational& tau : taus) {
      Instance g = sat_to_srsg(phi, tau);
      std::int64_t v = variable_agents_per_variable(tau);
      if (g.red_count() != v * phi.num_vars ||
          g.blue_count() != static_cast<std::int64_t>(phi.clauses.size())) {
        detail = "gadget agent counts are off for tau " + tau.to_string();
        return false;
      }
      if (!verify_reduction(phi, tau)) {
        detail = "reduction equivalence failed at trial " + std::to_string(trial) +
                 ", tau " + tau.to_string();
        return false;
      }
    }
  }
  return true;
}

// ---- 11. Welfare-decreasing impact-aware move -------------------------------

Instance two_resource_counts(std::int32_t r1, std::int32_t b1, std::int32_t r2,
                             std::int32_t b2) {
  // Red agent 0 owns the only cross edge and starts on q0.
  Instance g;
  g.tau = Rational(1);
  g.resource_count = 2;
  g.colors.push_back(Color::Red);
  g.access.push_back({0, 1});
  for (std::int32_t i = 1; i < r1; ++i) {
    g.colors.push_back(Color::Red);
    g.access.push_back({0});
  }
  for (std::int32_t i = 0; i < b1; ++i) {
    g.colors.push_back(Color::Blue);
    g.access.push_back({0});
  }
  for (std::int32_t i = 0; i < r2; ++i) {
    g.colors.push_back(Color::Red);
    g.access.push_back({1});
  }
  for (std::int32_t i = 0; i < b2; ++i) {
    g.colors.push_back(Color::Blue);
    g.access.push_back({1});
  }
  return g;
}

bool criterion_welfare_decrease(std::string& detail) {
  // The documented 19/81 vs 1/9 configuration: the welfare arithmetic is
  // exactly -81/550, yet the move itself is not strictly improving.
  {
    Instance g = two_resource_counts(19, 81, 1, 9);
    StrategyProfile s;
    s.choice.assign(g.agent_count(), 0);
    for (AgentId a = 0; a < g.agent_count(); ++a)
      if (a >= 1 + 18 + 81) s.choice[a] = 1;
    StrategyProfile moved = s;
    moved.choice[0] = 1;
    if (social_welfare(g, moved) - social_welfare(g, s) != Rational(-81, 550)) {
      detail = "the 19/81 configuration does not lose exactly 81/550";
      return false;
    }
    if (utility(g, 0, moved) >= utility(g, 0, s)) {
      detail = "the 19/81 move unexpectedly improves";
      return false;
    }
    if (is_improving(g, Move{0, 0, 1}, s, MoveMode::ImpactAware)) {
      detail = "the 19/81 move unexpectedly counts as improving";
      return false;
    }
  }

  // A genuinely improving move that still destroys welfare, found by scanning
  // small two-resource occupancies.
  for (std::int32_t total = 3; total <= 9; ++total) {
    for (std::int32_t r1 = 1; r1 < total; ++r1)
      for (std::int32_t b1 = 0; r1 + b1 < total; ++b1)
        for (std::int32_t r2 = 0; r1 + b1 + r2 < total; ++r2) {
          std::int32_t b2 = total - r1 - b1 - r2;
          if (b1 + b2 == 0) continue;  // both colors required
          Instance g = two_resource_counts(r1, b1, r2, b2);
          StrategyProfile s;
          s.choice.assign(g.agent_count(), 0);
          for (AgentId a = r1 + b1; a < g.agent_count(); ++a) s.choice[a] = 1;
          Move m{0, 0, 1};
          if (!is_improving(g, m, s, MoveMode::ImpactAware)) continue;
          StrategyProfile moved = s;
          moved.choice[0] = 1;
          if (social_welfare(g, moved) < social_welfare(g, s)) return true;
        }
  }
  detail = "no improving welfare-decreasing move found in the search window";
  return false;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {"figure-1 reproduction (welfares 62/15, 41/10, 4; statuses)",
       criterion_figure1, 1.0},
      {"greedy equilibria on 1000 random instances, monotone removal logs",
       criterion_greedy, 30.0},
      {"impact-blind convergence within n^5 steps, gain > 1/n^4 each step",
       criterion_ib_fip, 60.0},
      {"majority potential never decreases over 10^4 impact-aware moves",
       criterion_potential, 0.0},
      {"impact-aware equilibria contained in impact-blind, blind nonempty",
       criterion_containment, 0.0},
      {"empirical quality ratios within the bound; family hits it within 5%",
       criterion_poa, 0.0},
      {"tau-1 optima are impact-blind stable; (6,12) gap exactly 17/132",
       criterion_pos, 0.0},
      {"2-approximate stability on 500 random instances", criterion_approx, 0.0},
      {"degree-2 solvers agree exactly with the exhaustive oracle",
       criterion_tractable, 0.0},
      {"hardness gadget verified on 30 formulas across the tau grid",
       criterion_reduction, 0.0},
      {"welfare arithmetic -81/550 and an improving welfare-decreasing move",
       criterion_welfare_decrease, 0.0},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (criteria[i].time_limit_seconds > 0 && seconds > criteria[i].time_limit_seconds) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + std::string("time limit ") +
                std::to_string(criteria[i].time_limit_seconds) + "s exceeded";
    }
    std::printf("%s  %2zu. %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].name.c_str(), seconds, detail.empty() ? "" : " -- ",
                detail.c_str());
    if (!ok) ++failures;
  }
  return failures;
}
