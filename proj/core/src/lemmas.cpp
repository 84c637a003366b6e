#include "dioph/lemmas.hpp"

#include <thread>

#include "dioph/errors.hpp"
#include "dioph/tuples.hpp"
#include "mpfr_value.hpp"

namespace dioph::lemmas {
namespace {

using detail::MpfrValue;

constexpr mpfr_prec_t kPrecision = 256;

void require_ordered(const Integer& B, const Integer& C) {
  if (B < 1) throw InputError("B must be positive, got " + B.get_str());
  if (C < B) throw InputError("C must be at least B, got B=" + B.get_str() + " C=" + C.get_str());
}

}  // namespace

bool index_relation_holds(std::size_t m, std::size_t n) noexcept { return n <= m && m <= 2 * n; }

LemmaContext LemmaContext::from_witness(const pell::PellTriple& t,
                                        const pell::IntersectionWitness& w) {
  return LemmaContext{t.A,
                      t.B,
                      t.C,
                      t.S,
                      t.T,
                      Integer(static_cast<unsigned long>(w.m)),
                      Integer(static_cast<unsigned long>(w.n)),
                      w.lambda};
}

bool congruence_holds(const LemmaContext& ctx) {
  const int lambda = pell::value(ctx.lambda);
  const Integer lhs = ctx.A * ctx.m * ctx.m + lambda * ctx.S * ctx.m;
  const Integer rhs = ctx.B * ctx.n * ctx.n + lambda * ctx.T * ctx.n;
  const Integer modulus = 4 * ctx.C;
  const Integer diff = lhs - rhs;
  return mpz_divisible_p(diff.get_mpz_t(), modulus.get_mpz_t()) != 0;
}

double gap_lower_bound(const Integer& B, const Integer& C) {
  if (B < 8) throw HypothesisError("gap bound requires B >= 8, got B=" + B.get_str());
  if (C <= B) throw InputError("gap bound requires C > B");
  MpfrValue ratio(128, C, MPFR_RNDN);
  MpfrValue b(128, B, MPFR_RNDN);
  mpfr_div(ratio.get(), ratio.get(), b.get(), MPFR_RNDN);
  mpfr_sqrt(ratio.get(), ratio.get(), MPFR_RNDN);
  MpfrValue coeff(128, "0.48", MPFR_RNDN);
  mpfr_mul(ratio.get(), ratio.get(), coeff.get(), MPFR_RNDN);
  return ratio.to_double();
}

bool exceeds_gap_bound(const Integer& m, const Integer& B, const Integer& C) {
  if (sgn(m) <= 0) return false;
  return 10000 * B * m * m > 2304 * C;
}

Integer gap_floor(const Integer& B, const Integer& C) {
  if (B < 1) throw InputError("B must be positive");
  // m^2 <= 0.2304 C / B  <=>  m^2 <= floor(2304 C / (10000 B)) for integer m.
  const Integer bound = (2304 * C) / (10000 * B);
  return arith::isqrt(bound);
}

ProofStepTrace proof_step_inequality(const Integer& B, const Integer& C) {
  require_ordered(B, C);
  ProofStepTrace trace;
  trace.hypothesis_met = B >= 8;
  trace.m = gap_floor(B, C);
  const Integer& m = trace.m;

  trace.square_majorization = 4 * B * m * m <= C;
  trace.linear_majorization = 4 * (B * C + 1) * m * m < C * C;

  // Upper bound of the left side: every factor positive, every step RNDU.
  const Integer bc1 = B * C + 1;
  MpfrValue c_over_b_up(kPrecision, C, MPFR_RNDU);
  {
    MpfrValue b(kPrecision, B, MPFR_RNDD);
    mpfr_div(c_over_b_up.get(), c_over_b_up.get(), b.get(), MPFR_RNDU);
  }
  MpfrValue first_up(kPrecision, bc1, MPFR_RNDU);
  mpfr_sqrt(first_up.get(), first_up.get(), MPFR_RNDU);
  {
    MpfrValue root(kPrecision);
    mpfr_sqrt(root.get(), c_over_b_up.get(), MPFR_RNDU);
    mpfr_mul(first_up.get(), first_up.get(), root.get(), MPFR_RNDU);
    MpfrValue k096(kPrecision, "0.96", MPFR_RNDU);
    mpfr_mul(first_up.get(), first_up.get(), k096.get(), MPFR_RNDU);
  }
  MpfrValue second_up(kPrecision, "0.173", MPFR_RNDU);
  mpfr_mul(second_up.get(), second_up.get(), c_over_b_up.get(), MPFR_RNDU);
  MpfrValue lhs_up(kPrecision);
  mpfr_add(lhs_up.get(), first_up.get(), second_up.get(), MPFR_RNDU);

  trace.holds = mpfr_cmp_z(lhs_up.get(), C.get_mpz_t()) < 0;
  trace.lhs_upper = lhs_up.to_double(MPFR_RNDU);
  {
    MpfrValue ratio(kPrecision);
    MpfrValue c(kPrecision, C, MPFR_RNDD);
    mpfr_div(ratio.get(), lhs_up.get(), c.get(), MPFR_RNDU);
    trace.lhs_ratio = ratio.to_double(MPFR_RNDU);
  }

  // Lower bound of the left side, against an upper bound of 2Tm + 0.75 m^2.
  MpfrValue lhs_down(kPrecision);
  {
    MpfrValue c_over_b(kPrecision, C, MPFR_RNDD);
    MpfrValue b(kPrecision, B, MPFR_RNDU);
    mpfr_div(c_over_b.get(), c_over_b.get(), b.get(), MPFR_RNDD);
    MpfrValue first(kPrecision, bc1, MPFR_RNDD);
    mpfr_sqrt(first.get(), first.get(), MPFR_RNDD);
    MpfrValue root(kPrecision);
    mpfr_sqrt(root.get(), c_over_b.get(), MPFR_RNDD);
    mpfr_mul(first.get(), first.get(), root.get(), MPFR_RNDD);
    MpfrValue k096(kPrecision, "0.96", MPFR_RNDD);
    mpfr_mul(first.get(), first.get(), k096.get(), MPFR_RNDD);
    MpfrValue second(kPrecision, "0.173", MPFR_RNDD);
    mpfr_mul(second.get(), second.get(), c_over_b.get(), MPFR_RNDD);
    mpfr_add(lhs_down.get(), first.get(), second.get(), MPFR_RNDD);
  }
  MpfrValue chain_up(kPrecision, bc1, MPFR_RNDU);
  {
    mpfr_sqrt(chain_up.get(), chain_up.get(), MPFR_RNDU);
    MpfrValue two_m(kPrecision, Integer(2 * m), MPFR_RNDU);
    mpfr_mul(chain_up.get(), chain_up.get(), two_m.get(), MPFR_RNDU);
    // 0.75 m^2 = 3 m^2 / 4 is exact at this precision for the sizes used.
    MpfrValue quad(kPrecision, Integer(3 * m * m), MPFR_RNDU);
    mpfr_div_2ui(quad.get(), quad.get(), 2, MPFR_RNDU);
    mpfr_add(chain_up.get(), chain_up.get(), quad.get(), MPFR_RNDU);
  }
  trace.chain_majorization = mpfr_cmp(chain_up.get(), lhs_down.get()) <= 0;
  return trace;
}

std::size_t AuditReport::violations() const noexcept {
  std::size_t count = anomalies.size();
  for (const auto& e : entries) {
    if (!e.passed()) ++count;
  }
  return count;
}

AuditReport audit_witnesses(const pell::PellTriple& triple,
                            std::span<const pell::IntersectionWitness> witnesses) {
  AuditReport report{triple, {}, {}};
  for (const auto& w : witnesses) {
    WitnessAudit entry;
    entry.witness = w;
    entry.index_relation = index_relation_holds(w.m, w.n);
    entry.congruence = congruence_holds(LemmaContext::from_witness(triple, w));
    entry.gap_applicable = triple.B >= 8 && w.m >= 3 && w.n >= 2;
    if (entry.gap_applicable) {
      entry.gap_holds = exceeds_gap_bound(Integer(static_cast<unsigned long>(w.m)), triple.B, triple.C);
    }
    if (w.extends(triple)) {
      entry.quadruple_verified =
          tuples::verify_tuple(tuples::MTuple::from_unordered({triple.A, triple.B, triple.C, w.D})).ok;
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

AuditReport audit_witnesses(const pell::PellTriple& triple, const pell::IntersectionResult& found) {
  AuditReport report = audit_witnesses(triple, found.witnesses);
  report.anomalies = found.anomalies;
  return report;
}

AuditSummary audit_range(std::uint64_t c_max, std::size_t max_index, unsigned jobs) {
  if (c_max < 3) throw InputError("audit range needs c_max >= 3");
  if (max_index < 2) throw InputError("audit range needs max_index >= 2");
  jobs = std::max(1U, jobs);

  const auto triples = tuples::enumerate_tuples(c_max, 3, jobs);
  std::vector<AuditReport> reports(triples.size());
  auto work = [&](std::size_t first) {
    for (std::size_t i = first; i < triples.size(); i += jobs) {
      const auto& t = triples[i];
      const auto pt = pell::make_pell_triple(t[0], t[1], t[2]);
      reports[i] = audit_witnesses(pt, pell::find_intersections(pt, max_index));
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) workers.emplace_back(work, w);
  }

  AuditSummary summary;
  summary.c_max = c_max;
  summary.max_index = max_index;
  summary.triples = reports.size();
  for (const auto& r : reports) {
    summary.witnesses += r.entries.size();
    summary.violations += r.violations();
    for (const auto& e : r.entries) summary.gap_checks += e.gap_applicable ? 1 : 0;
  }
  summary.reports = std::move(reports);
  return summary;
}

}  // namespace dioph::lemmas
