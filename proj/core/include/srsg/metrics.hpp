#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "srsg/exact.hpp"
#include "srsg/game.hpp"

namespace srsg {

// Worst-case equilibrium quality bound, identical for both rationality
// models: 4/(4-tau) for tau up to 2-sqrt(2), 2*tau beyond. The branch is
// chosen by the exact sign of tau^2 - 4*tau + 2; no irrational arithmetic.
Rational poa_bound(const Rational& tau);

// Best-equilibrium quality bound for impact-blind agents: min(1/tau,
// poa_bound(tau)), with a flag telling which term is active.
struct PosBound {
  Rational value;
  bool poa_term_active;  // true when poa_bound(tau) is the binding term
};
PosBound pos_bound_ibe(const Rational& tau);

// Exact empirical quality of an enumerable instance: brute-force optimum
// against the full equilibrium set for the mode. An empty equilibrium set
// (possible for impact-aware agents at tau > 1/2) leaves the ratio fields
// unset rather than failing.
struct QualityReport {
  MoveMode mode;
  Rational opt_welfare;
  std::int64_t n_equilibria = 0;
  std::optional<Rational> min_eq_welfare;
  std::optional<Rational> max_eq_welfare;
  std::optional<Rational> empirical_poa;  // opt / min equilibrium welfare
  std::optional<Rational> empirical_pos;  // opt / max equilibrium welfare
  Rational bound_poa;
};

QualityReport quality_report(const Instance& g, MoveMode mode,
                             const EnumerationBudget& budget = {});

// CSV row format: instance,mode,tau,opt,min_eq,max_eq,poa_emp,poa_bound,pos_emp
// Rationals are written as num/den; missing ratios (no equilibrium) as "none".
std::string quality_report_csv_header();
std::string quality_report_csv_row(std::string_view instance_name, const Rational& tau,
                                   const QualityReport& report);

}  // namespace srsg
