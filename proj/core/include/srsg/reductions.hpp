#pragma once

#include <cstdint>
#include <optional>

#include "srsg/exact.hpp"
#include "srsg/game.hpp"
#include "srsg/rational.hpp"
#include "srsg/twosat.hpp"

namespace srsg {

// Number of red variable agents per variable in the gadget: 2 * ceil(4/tau).
std::int64_t variable_agents_per_variable(const Rational& tau);

// Resource ids of the gadget: variable i (1-based) owns a positive and a
// negative literal resource.
inline ResourceId reduction_positive_resource(std::int32_t var) { return 2 * (var - 1); }
inline ResourceId reduction_negative_resource(std::int32_t var) { return 2 * (var - 1) + 1; }

// Gadget instance for a (3,4)-CNF formula and tau > 0: two literal resources
// per variable, v red variable agents per variable connected to both, and one
// blue clause agent per clause connected to its literals' resources. Red
// agents come first (variable order), then clause agents (clause order).
// The formula must satisfy the (3,4) restriction unless enforce_three_four is
// false; the construction itself is well-defined either way.
Instance sat_to_srsg(const CnfFormula& phi, const Rational& tau,
                     bool enforce_three_four = true);

// A profile of the gadget in which every agent reaches utility tau, or
// nullopt. Same-variable red agents are interchangeable, so the search runs
// over clause-agent placements crossed with per-variable split counts; the
// enumerated configuration count is charged against the budget.
std::optional<StrategyProfile> find_all_max_profile(const CnfFormula& phi,
                                                    const Rational& tau,
                                                    const EnumerationBudget& budget = {});

// Exhaustive satisfiability over all 2^num_vars assignments (budget-checked).
bool cnf_satisfiable_exhaustive(const CnfFormula& phi,
                                const EnumerationBudget& budget = {});

// True iff the formula's satisfiability coincides with the existence of an
// all-maximum-utility profile of the gadget.
bool verify_reduction(const CnfFormula& phi, const Rational& tau,
                      const EnumerationBudget& budget = {});

}  // namespace srsg
