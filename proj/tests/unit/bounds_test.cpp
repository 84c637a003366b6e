#include "dioph/bounds.hpp"

#include <cmath>
#include <cstring>
#include <numbers>

#include <gtest/gtest.h>
#include <mpfr.h>

#include "dioph/errors.hpp"
#include "dioph/tuples.hpp"

namespace dioph::bounds {
namespace {

// Reference evaluation of both sides at C = mantissa * 10^exp10, with C
// formed exactly in 160-bit MPFR and the fourth root taken by two square
// roots. Returns lhs / rhs.
double reference_ratio(double mantissa, long exp10) {
  mpfr_t c, lhs, rhs, t;
  mpfr_inits2(160, c, lhs, rhs, t, static_cast<mpfr_ptr>(nullptr));
  mpfr_ui_pow_ui(c, 10, static_cast<unsigned long>(exp10), MPFR_RNDN);
  mpfr_mul_d(c, c, mantissa, MPFR_RNDN);
  mpfr_sqrt(lhs, c, MPFR_RNDN);
  mpfr_sqrt(lhs, lhs, MPFR_RNDN);
  mpfr_log(rhs, c, MPFR_RNDN);
  mpfr_sqr(rhs, rhs, MPFR_RNDN);
  mpfr_mul_ui(t, lhs, 238, MPFR_RNDN);
  mpfr_log(t, t, MPFR_RNDN);
  mpfr_mul(rhs, rhs, t, MPFR_RNDN);
  mpfr_mul_d(rhs, rhs, 4.11e12, MPFR_RNDN);
  mpfr_div(t, lhs, rhs, MPFR_RNDN);
  const double ratio = mpfr_get_d(t, MPFR_RNDN);
  mpfr_clears(c, lhs, rhs, t, static_cast<mpfr_ptr>(nullptr));
  return ratio;
}

TEST(LowerBoundM, Examples) {
  EXPECT_NEAR(lower_bound_m(1e76), 6.78e18, 6.78e18 * 1e-14);
  EXPECT_DOUBLE_EQ(lower_bound_m(1.0), 0.678);
  EXPECT_NEAR(lower_bound_m(std::pow(2.0 / 0.678, 4)), 2.0, 1e-14);
  EXPECT_THROW(lower_bound_m(0.5), DomainError);
}

TEST(MatveevUpper, Examples) {
  EXPECT_TRUE(matveev_upper_holds(1e10, 1e76));   // 3.4618e8 < 8.5318e16
  EXPECT_FALSE(matveev_upper_holds(1e22, 1e20));  // 1.7694e20 > 5.9084e15
  EXPECT_TRUE(matveev_upper_holds(1.0, std::numbers::e));  // 0.17063 < 2.786e12
  EXPECT_THROW(matveev_upper_holds(1.0 / 351.0, 10.0), DomainError);
  EXPECT_THROW(matveev_upper_holds(0.0, 10.0), DomainError);
  EXPECT_THROW(matveev_upper_holds(5.0, 1.0), DomainError);
}

TEST(CombinedInequality, Examples) {
  EXPECT_TRUE(combined_inequality_holds(1e75));
  EXPECT_FALSE(combined_inequality_holds(1e76));
  EXPECT_TRUE(combined_inequality_holds(10.0));
  EXPECT_TRUE(combined_inequality_holds(1.2e75));
  EXPECT_FALSE(combined_inequality_holds(1.5e75));
  EXPECT_THROW(combined_inequality_holds(1.0), DomainError);

  // Side values from a 50-digit evaluation.
  EXPECT_NEAR(reference_ratio(1.0, 75), 5.6234132519034908e18 / 5.9626669312163294e18, 1e-15);
  EXPECT_NEAR(reference_ratio(1.0, 76), 1e19 / 6.1951843637722143e18, 1e-15);
}

TEST(CombinedInequality, DoubleAndPreciseAgreeWithReference) {
  for (int i = 0; i <= 200; ++i) {
    const double lg = 1.0 + 0.4 * i;  // 10^1 .. 10^81
    const long e = static_cast<long>(std::floor(lg));
    const double mant = std::pow(10.0, lg - static_cast<double>(e));
    const bool expected = reference_ratio(mant, e) < 1.0;
    ASSERT_EQ(combined_inequality_holds_log10(lg), expected) << lg;
    ASSERT_EQ(combined_inequality_holds_precise(lg), expected) << lg;
    ASSERT_EQ(combined_relative_margin(lg) > 0, expected) << lg;
  }
}

TEST(SolveCrossover, BracketAndVerdict) {
  const auto r = solve_crossover(0.01);
  EXPECT_GT(r.c_star, 1.0e75);
  EXPECT_LT(r.c_star, 2.0e75);
  EXPECT_LT(r.c_star, 1e76);
  EXPECT_FALSE(r.verdict_at_10_76);
  EXPECT_LE(r.bracket_hi / r.bracket_lo, 1.01 + 1e-12);
  EXPECT_TRUE(combined_inequality_holds(r.bracket_lo));
  EXPECT_FALSE(combined_inequality_holds(r.bracket_hi));
  EXPECT_GT(r.iterations, 0);
  EXPECT_TRUE(bracket_confirmed_precise(r));
  // Root from an independent 50-digit bisection: 1.28543629039e75.
  EXPECT_LE(r.bracket_lo, 1.2854362903922335e75);
  EXPECT_GE(r.bracket_hi, 1.2854362903922335e75);
}

TEST(SolveCrossover, TighterToleranceStillBracketsTheRoot) {
  const auto r = solve_crossover(1e-9);
  EXPECT_NEAR(r.c_star / 1.2854362903922335e75, 1.0, 1e-8);
  EXPECT_TRUE(bracket_confirmed_precise(r));
}

TEST(SolveCrossover, Deterministic) {
  const auto a = solve_crossover(0.01);
  const auto b = solve_crossover(0.01);
  EXPECT_EQ(a, b);
  EXPECT_EQ(std::memcmp(&a.c_star, &b.c_star, sizeof(double)), 0);
}

TEST(SolveCrossover, Errors) {
  EXPECT_THROW(solve_crossover(0.01, 80.0, 90.0), ConfigurationError);
  EXPECT_THROW(solve_crossover(0.01, 10.0, 20.0), ConfigurationError);
  EXPECT_THROW(solve_crossover(0.0), InputError);
  EXPECT_THROW(solve_crossover(0.02), InputError);
  EXPECT_THROW(solve_crossover(-1.0), InputError);
}

TEST(CombinedInequality, MonotoneAroundCrossover) {
  const auto r = solve_crossover(0.01);
  const double lo = std::log10(r.bracket_lo);
  const double hi = std::log10(r.bracket_hi);
  for (int i = 0; i < 100; ++i) {
    const double lg = 70.0 + 10.0 * i / 99.0;
    if (lg <= lo) {
      EXPECT_TRUE(combined_inequality_holds_log10(lg)) << lg;
    } else if (lg >= hi) {
      EXPECT_FALSE(combined_inequality_holds_log10(lg)) << lg;
    }
  }
}

TEST(CombinedInequality, GluingSoundness) {
  // m := 0.678 C^(1/4) satisfying the Matveev-type bound forces the combined inequality.
  int premise_true = 0;
  for (int i = 0; i < 100; ++i) {
    const double lg = 70.0 + 10.0 * i / 99.0;
    const double C = std::pow(10.0, lg);
    const double m = lower_bound_m(C);
    if (matveev_upper_holds(m, C)) {
      ++premise_true;
      EXPECT_TRUE(combined_inequality_holds(C)) << lg;
    }
  }
  EXPECT_GT(premise_true, 0);
  for (int i = 1; i <= 300; ++i) {
    const double C = std::pow(10.0, 0.3 * i);
    if (lower_bound_m(C) * 351 <= 1.0) continue;
    if (matveev_upper_holds(lower_bound_m(C), C)) EXPECT_TRUE(combined_inequality_holds(C)) << C;
  }
}

TEST(ConstantConsistency, AllThreeMarginsPass) {
  const auto report = check_constant_consistency();
  ASSERT_EQ(report.checks.size(), 3U);
  EXPECT_TRUE(report.passed());
  EXPECT_NEAR(report.checks[0].margin, 8.2250993908562342e-4, 1e-15);
  EXPECT_NEAR(report.checks[1].margin, 8.5545722713864307e8, 1e-3);
  EXPECT_NEAR(report.checks[2].margin, 0.022, 1e-14);
  for (const auto& c : report.checks) {
    EXPECT_TRUE(c.passed) << c.name;
    EXPECT_LE(c.small, c.large);
    EXPECT_GT(c.margin, 0.0);
  }
  EXPECT_NEAR(report.checks[1].small, 4.1091445427728614e12, 1.0);
  EXPECT_NEAR(report.checks[2].small, 237.978, 1e-12);
}

TEST(BBound, Examples) {
  EXPECT_TRUE(b_bound_from_gap(3, 120));
  EXPECT_TRUE(b_bound_from_gap(4, 420));
  EXPECT_FALSE(b_bound_from_gap(3, 36));
  EXPECT_TRUE(b_bound_from_gap(3, 37));
  EXPECT_THROW(b_bound_from_gap(0, 5), InputError);
}

TEST(BBound, HoldsForEnumeratedQuadruples) {
  for (const auto& q : tuples::enumerate_tuples(1000, 4)) EXPECT_TRUE(b_bound_from_gap(q[1], q[3]));
}

}  // namespace
}  // namespace dioph::bounds
