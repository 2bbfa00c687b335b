#include "srsg/metrics.hpp"

#include <sstream>
#include <stdexcept>

namespace srsg {

Rational poa_bound(const Rational& tau) {
  if (tau <= Rational(0) || tau > Rational(1))
    throw std::invalid_argument("tau must lie in (0,1]");
  // tau^2 - 4*tau + 2 >= 0 iff tau <= 2 - sqrt(2); equality is impossible for
  // a rational tau.
  if (tau * tau - Rational(4) * tau + Rational(2) > Rational(0))
    return Rational(4) / (Rational(4) - tau);
  return Rational(2) * tau;
}

PosBound pos_bound_ibe(const Rational& tau) {
  if (tau <= Rational(0) || tau > Rational(1))
    throw std::invalid_argument("tau must lie in (0,1]");
  Rational reciprocal = tau.reciprocal();
  Rational poa = poa_bound(tau);
  if (poa < reciprocal) return {poa, true};
  return {reciprocal, false};
}

QualityReport quality_report(const Instance& g, MoveMode mode,
                             const EnumerationBudget& budget) {
  if (g.tau <= Rational(0))
    throw std::invalid_argument("quality reports need tau > 0");

  QualityReport report;
  report.mode = mode;
  report.bound_poa = poa_bound(g.tau);

  StrategyProfile opt = brute_force_optimum(g, budget);
  report.opt_welfare = social_welfare(g, opt);

  auto equilibria = enumerate_equilibria(g, mode, budget);
  report.n_equilibria = static_cast<std::int64_t>(equilibria.size());
  for (const StrategyProfile& s : equilibria) {
    Rational w = social_welfare(g, s);
    if (!report.min_eq_welfare || w < *report.min_eq_welfare) report.min_eq_welfare = w;
    if (!report.max_eq_welfare || w > *report.max_eq_welfare) report.max_eq_welfare = w;
  }
  if (report.min_eq_welfare && !report.min_eq_welfare->is_zero())
    report.empirical_poa = report.opt_welfare / *report.min_eq_welfare;
  if (report.max_eq_welfare && !report.max_eq_welfare->is_zero())
    report.empirical_pos = report.opt_welfare / *report.max_eq_welfare;
  return report;
}

std::string quality_report_csv_header() {
  return "instance,mode,tau,opt,min_eq,max_eq,poa_emp,poa_bound,pos_emp\n";
}

namespace {
std::string cell(const std::optional<Rational>& r) {
  return r ? r->to_string() : "none";
}
}  // namespace

std::string quality_report_csv_row(std::string_view instance_name, const Rational& tau,
                                   const QualityReport& report) {
  std::ostringstream out;
  out << instance_name << ',' << to_string(report.mode) << ',' << tau.to_string()
      << ',' << report.opt_welfare.to_string() << ',' << cell(report.min_eq_welfare)
      << ',' << cell(report.max_eq_welfare) << ',' << cell(report.empirical_poa)
      << ',' << report.bound_poa.to_string() << ',' << cell(report.empirical_pos)
      << "\n";
  return out.str();
}

}  // namespace srsg
