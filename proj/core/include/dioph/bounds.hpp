#pragma once

#include <string>
#include <vector>

#include "dioph/arith.hpp"

namespace dioph::bounds {

/// Numeric constants of the bound chain. All logarithms are natural.
struct BoundConstants {
  double gap_coeff = 0.48;           // m > gap_coeff * B^(-1/2) C^(1/2)
  double lower_coeff = 0.678;        // m >= lower_coeff * C^(1/4)
  double matveev_coeff = 2.786e12;   // m / log(351 m) < matveev_coeff * log^2 C
  int log_arg_coeff = 351;
  double combined_coeff = 4.11e12;   // C^(1/4) < combined_coeff * log^2 C * log(238 C^(1/4))
  double combined_log_arg = 238.0;
  double b_ratio = 0.5;              // b < b_ratio * d^(1/2)
};

inline constexpr BoundConstants kConstants{};

/// 0.678 * C^(1/4). Requires C >= 1.
double lower_bound_m(double C);

/// m / log(351 m) < 2.786e12 * (log C)^2. Throws DomainError when
/// 351 m <= 1 or C <= 1.
bool matveev_upper_holds(double m, double C);

/// C^(1/4) < 4.11e12 * (log C)^2 * log(238 C^(1/4)) in double precision.
/// Equality counts as failure. Requires C > 1.
bool combined_inequality_holds(double C);

/// Same inequality with C = 10^log10_c; avoids forming C itself.
bool combined_inequality_holds_log10(double log10_c);

/// Same inequality evaluated with MPFR at `bits` of precision (default
/// 128, about 38 decimal digits), for cross-checking the double path.
bool combined_inequality_holds_precise(double log10_c, long bits = 128);

/// rhs / lhs - 1 of the combined inequality at C = 10^log10_c; positive
/// exactly when the inequality holds.
double combined_relative_margin(double log10_c);

struct BoundReport {
  double c_star = 0.0;
  double bracket_lo = 0.0;  // inequality holds here
  double bracket_hi = 0.0;  // and fails here
  int iterations = 0;
  bool verdict_at_10_76 = true;  // combined_inequality_holds(1e76)

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

/// Bisection on log10 C for the point where the combined inequality stops
/// holding. Stops once bracket_hi / bracket_lo <= 1 + tolerance.
/// Throws InputError unless 0 < tolerance <= 0.01, and ConfigurationError
/// if the bracket [10^lo_log10, 10^hi_log10] has no sign change.
BoundReport solve_crossover(double tolerance, double lo_log10 = 70.0, double hi_log10 = 80.0);

/// Re-evaluates both bracket ends of a report in high precision and
/// returns whether they still straddle the crossover.
bool bracket_confirmed_precise(const BoundReport& report, long bits = 128);

struct ConstantCheck {
  std::string name;
  std::string relation;  // human-readable "small <= large" form
  double small = 0.0;    // rounded up
  double large = 0.0;    // rounded down
  double margin = 0.0;   // large - small, rounded down
  bool passed = false;
};

struct ConsistencyReport {
  std::vector<ConstantCheck> checks;
  bool passed() const noexcept;
};

/// Verifies 0.678 <= 0.48 sqrt(2), 2.786e12 / 0.678 <= 4.11e12 and
/// 351 * 0.678 <= 238 with directed rounding (small side up, large side
/// down), so a pass is rigorous.
ConsistencyReport check_constant_consistency();

/// 4 b^2 < d, exact. Throws InputError unless b and d are positive.
bool b_bound_from_gap(const Integer& b, const Integer& d);

}  // namespace dioph::bounds
