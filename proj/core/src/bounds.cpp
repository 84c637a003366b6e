#include "dioph/bounds.hpp"

#include <cmath>
#include <numbers>

#include "dioph/errors.hpp"
#include "mpfr_value.hpp"

namespace dioph::bounds {
namespace {

using detail::MpfrValue;

constexpr double kLn10 = std::numbers::ln10;

bool combined_holds_ln(double ln_c) {
  const auto& k = kConstants;
  const double lhs = std::exp(ln_c / 4.0);
  const double rhs = k.combined_coeff * ln_c * ln_c * (std::log(k.combined_log_arg) + ln_c / 4.0);
  return lhs < rhs;
}

}  // namespace

double lower_bound_m(double C) {
  if (!(C >= 1.0)) throw DomainError("lower_bound_m requires C >= 1");
  return kConstants.lower_coeff * std::sqrt(std::sqrt(C));
}

bool matveev_upper_holds(double m, double C) {
  const double arg = kConstants.log_arg_coeff * m;
  if (!(arg > 1.0)) throw DomainError("matveev bound: log(351 m) must be positive");
  if (!(C > 1.0)) throw DomainError("matveev bound requires C > 1");
  const double lc = std::log(C);
  return m / std::log(arg) < kConstants.matveev_coeff * lc * lc;
}

bool combined_inequality_holds(double C) {
  if (!(C > 1.0)) throw DomainError("combined inequality requires C > 1");
  return combined_holds_ln(std::log(C));
}

bool combined_inequality_holds_log10(double log10_c) {
  if (!(log10_c > 0.0)) throw DomainError("combined inequality requires C > 1");
  return combined_holds_ln(log10_c * kLn10);
}

double combined_relative_margin(double log10_c) {
  if (!(log10_c > 0.0)) throw DomainError("combined inequality requires C > 1");
  const auto& k = kConstants;
  const double ln_c = log10_c * kLn10;
  const double lhs = std::exp(ln_c / 4.0);
  const double rhs = k.combined_coeff * ln_c * ln_c * (std::log(k.combined_log_arg) + ln_c / 4.0);
  return rhs / lhs - 1.0;
}

bool combined_inequality_holds_precise(double log10_c, long bits) {
  if (!(log10_c > 0.0)) throw DomainError("combined inequality requires C > 1");
  const auto prec = static_cast<mpfr_prec_t>(bits);
  MpfrValue ln_c(prec, log10_c);
  {
    MpfrValue ten(prec, 10.0);
    mpfr_log(ten.get(), ten.get(), MPFR_RNDN);
    mpfr_mul(ln_c.get(), ln_c.get(), ten.get(), MPFR_RNDN);
  }
  MpfrValue quarter(prec);
  mpfr_div_2ui(quarter.get(), ln_c.get(), 2, MPFR_RNDN);

  MpfrValue lhs(prec);
  mpfr_exp(lhs.get(), quarter.get(), MPFR_RNDN);

  MpfrValue log_arg(prec, "238", MPFR_RNDN);
  mpfr_log(log_arg.get(), log_arg.get(), MPFR_RNDN);
  mpfr_add(log_arg.get(), log_arg.get(), quarter.get(), MPFR_RNDN);
  MpfrValue rhs(prec, "4.11e12", MPFR_RNDN);
  mpfr_mul(rhs.get(), rhs.get(), ln_c.get(), MPFR_RNDN);
  mpfr_mul(rhs.get(), rhs.get(), ln_c.get(), MPFR_RNDN);
  mpfr_mul(rhs.get(), rhs.get(), log_arg.get(), MPFR_RNDN);
  return mpfr_less_p(lhs.get(), rhs.get()) != 0;
}

BoundReport solve_crossover(double tolerance, double lo_log10, double hi_log10) {
  if (!(tolerance > 0.0 && tolerance <= 0.01)) {
    throw InputError("tolerance must lie in (0, 0.01]");
  }
  if (!(lo_log10 > 0.0 && lo_log10 < hi_log10)) {
    throw ConfigurationError("bisection bracket must satisfy 0 < lo < hi in log10 units");
  }
  if (!combined_inequality_holds_log10(lo_log10) || combined_inequality_holds_log10(hi_log10)) {
    throw ConfigurationError("combined inequality does not change sign on [1e" +
                             std::to_string(lo_log10) + ", 1e" + std::to_string(hi_log10) + "]");
  }

  // hi / lo <= 1 + tol  <=>  (hi_log10 - lo_log10) * ln 10 <= log1p(tol)
  const double width = std::log1p(tolerance) / kLn10;
  double lo = lo_log10;
  double hi = hi_log10;
  int iterations = 0;
  while (hi - lo > width) {
    const double mid = 0.5 * (lo + hi);
    if (combined_inequality_holds_log10(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++iterations;
  }

  BoundReport report;
  report.bracket_lo = std::pow(10.0, lo);
  report.bracket_hi = std::pow(10.0, hi);
  report.c_star = std::pow(10.0, 0.5 * (lo + hi));
  report.iterations = iterations;
  report.verdict_at_10_76 = combined_inequality_holds(1e76);
  return report;
}

bool bracket_confirmed_precise(const BoundReport& report, long bits) {
  return combined_inequality_holds_precise(std::log10(report.bracket_lo), bits) &&
         !combined_inequality_holds_precise(std::log10(report.bracket_hi), bits);
}

bool ConsistencyReport::passed() const noexcept {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return !checks.empty();
}

ConsistencyReport check_constant_consistency() {
  constexpr mpfr_prec_t prec = 200;
  ConsistencyReport report;

  auto record = [&](std::string name, std::string relation, const MpfrValue& small_up,
                    const MpfrValue& large_down) {
    MpfrValue margin(prec);
    mpfr_sub(margin.get(), large_down.get(), small_up.get(), MPFR_RNDD);
    ConstantCheck c;
    c.name = std::move(name);
    c.relation = std::move(relation);
    c.small = small_up.to_double(MPFR_RNDU);
    c.large = large_down.to_double(MPFR_RNDD);
    c.margin = margin.to_double(MPFR_RNDD);
    c.passed = mpfr_lessequal_p(small_up.get(), large_down.get()) != 0;
    report.checks.push_back(std::move(c));
  };

  {
    // Lower bound on m: 0.48 B^(-1/2) C^(1/2) with B < C^(1/2)/2 gives 0.48 sqrt(2) C^(1/4).
    MpfrValue small(prec, "0.678", MPFR_RNDU);
    MpfrValue large(prec, 2.0);
    mpfr_sqrt(large.get(), large.get(), MPFR_RNDD);
    MpfrValue gap(prec, "0.48", MPFR_RNDD);
    mpfr_mul(large.get(), large.get(), gap.get(), MPFR_RNDD);
    record("lower_coeff", "0.678 <= 0.48*sqrt(2)", small, large);
  }
  {
    MpfrValue small(prec, "2.786e12", MPFR_RNDU);
    MpfrValue lower(prec, "0.678", MPFR_RNDD);
    mpfr_div(small.get(), small.get(), lower.get(), MPFR_RNDU);
    MpfrValue large(prec, "4.11e12", MPFR_RNDD);
    record("combined_coeff", "2.786e12/0.678 <= 4.11e12", small, large);
  }
  {
    MpfrValue small(prec, "351", MPFR_RNDU);
    MpfrValue lower(prec, "0.678", MPFR_RNDU);
    mpfr_mul(small.get(), small.get(), lower.get(), MPFR_RNDU);
    MpfrValue large(prec, "238", MPFR_RNDD);
    record("combined_log_arg", "351*0.678 <= 238", small, large);
  }
  return report;
}

bool b_bound_from_gap(const Integer& b, const Integer& d) {
  if (sgn(b) <= 0 || sgn(d) <= 0) throw InputError("b and d must be positive");
  return 4 * b * b < d;
}

}  // namespace dioph::bounds
