#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dioph/arith.hpp"
#include "dioph/pell.hpp"

namespace dioph::lemmas {

/// n <= m <= 2n, the index relation every even coincidence v_{2m} = w_{2n}
/// must satisfy.
bool index_relation_holds(std::size_t m, std::size_t n) noexcept;

struct LemmaContext {
  Integer A, B, C;
  Integer S, T;
  Integer m, n;
  pell::Sign lambda = pell::Sign::Plus;

  static LemmaContext from_witness(const pell::PellTriple& triple,
                                   const pell::IntersectionWitness& witness);
};

/// A m^2 + lambda S m == B n^2 + lambda T n (mod 4C), exact.
bool congruence_holds(const LemmaContext& ctx);

/// 0.48 * B^(-1/2) * C^(1/2), evaluated in 128-bit binary precision and
/// rounded to double. Throws HypothesisError when B < 8 and InputError
/// unless C > B.
double gap_lower_bound(const Integer& B, const Integer& C);

/// Exact test of m > 0.48 * B^(-1/2) * C^(1/2), i.e. 10000 B m^2 > 2304 C.
bool exceeds_gap_bound(const Integer& m, const Integer& B, const Integer& C);

/// Largest m with m <= 0.48 * B^(-1/2) * C^(1/2) (exact).
Integer gap_floor(const Integer& B, const Integer& C);

/// Evaluation of the closing inequality of the gap argument at (B, C):
///   0.96 sqrt(BC+1) B^(-1/2) C^(1/2) + 0.173 C / B < C,
/// plus the majorizations used on the way, taken at m = gap_floor(B, C).
struct ProofStepTrace {
  bool hypothesis_met = false;       // B >= 8
  Integer m;                         // gap_floor(B, C)
  bool square_majorization = false;  // B m^2 <= 0.25 C
  bool linear_majorization = false;  // T m < 0.5 C with T = sqrt(BC+1)
  bool chain_majorization = false;   // 2 T m + 0.75 m^2 <= left side
  double lhs_upper = 0.0;            // left side, rounded upward
  double lhs_ratio = 0.0;            // lhs_upper / C
  bool holds = false;                // left side < C, rigorous when true
};

/// Requires 1 <= B <= C (InputError otherwise). Never throws for B < 8;
/// hypothesis_met reports it instead.
ProofStepTrace proof_step_inequality(const Integer& B, const Integer& C);

struct WitnessAudit {
  pell::IntersectionWitness witness;
  bool index_relation = false;
  bool congruence = false;
  bool gap_applicable = false;  // B >= 8, m >= 3, n >= 2
  bool gap_holds = true;        // vacuously true when not applicable
  bool quadruple_verified = true;

  bool passed() const noexcept {
    return index_relation && congruence && gap_holds && quadruple_verified;
  }
};

struct AuditReport {
  pell::PellTriple triple;
  std::vector<WitnessAudit> entries;
  std::vector<pell::ParityAnomaly> anomalies;

  std::size_t violations() const noexcept;
  bool passed() const noexcept { return violations() == 0; }
};

AuditReport audit_witnesses(const pell::PellTriple& triple,
                            std::span<const pell::IntersectionWitness> witnesses);
AuditReport audit_witnesses(const pell::PellTriple& triple, const pell::IntersectionResult& found);

struct AuditSummary {
  std::uint64_t c_max = 0;
  std::size_t max_index = 0;
  std::size_t triples = 0;
  std::size_t witnesses = 0;
  std::size_t gap_checks = 0;  // witnesses where the gap clause applied
  std::size_t violations = 0;
  std::vector<AuditReport> reports;  // one per triple, lexicographic

  bool passed() const noexcept { return violations == 0; }
};

/// Audits every Diophantine triple with c <= c_max (c_max >= 3).
AuditSummary audit_range(std::uint64_t c_max, std::size_t max_index, unsigned jobs = 1);

}  // namespace dioph::lemmas
