#include "dioph/pell.hpp"

#include <stdexcept>

#include "dioph/errors.hpp"
#include "dioph/tuples.hpp"

namespace dioph::pell {

PellTriple make_pell_triple(const Integer& a, const Integer& b, const Integer& c) {
  const auto t = tuples::triple_rst(a, b, c);
  return PellTriple{t.a, t.b, t.c, t.r, t.s, t.t};
}

const char* to_string(SequenceKind kind) noexcept { return kind == SequenceKind::V ? "v" : "w"; }

PellSequence::PellSequence(const PellTriple& triple, SequenceKind kind, Sign z_init)
    : kind_(kind), sign_(z_init), companion_init_(1) {
  const Integer& root = kind == SequenceKind::V ? triple.S : triple.T;
  coeff_ = 2 * root;
  const Integer z0 = value(z_init);
  terms_.push_back(z0);
  terms_.push_back(root * z0 + triple.C * companion_init_);
}

const Integer& PellSequence::term(std::size_t index) {
  while (terms_.size() <= index) {
    const std::size_t n = terms_.size();
    terms_.push_back(coeff_ * terms_[n - 1] - terms_[n - 2]);
  }
  return terms_[index];
}

const std::vector<Integer>& PellSequence::first(std::size_t count) {
  if (count > 0) term(count - 1);
  return terms_;
}

std::vector<Integer> generate_sequence(const PellTriple& triple, SequenceKind kind, Sign z_init,
                                       std::size_t count) {
  if (count < 1) throw InputError("generate_sequence: count must be at least 1");
  PellSequence seq(triple, kind, z_init);
  const auto& cached = seq.first(count);
  return {cached.begin(), cached.begin() + static_cast<std::ptrdiff_t>(count)};
}

std::optional<Integer> check_pell_term(const PellTriple& triple, SequenceKind kind,
                                       const Integer& z) {
  // V: C x^2 = A z^2 - (A - C);  W: C y^2 = B z^2 - (B - C)
  const Integer& lead = kind == SequenceKind::V ? triple.A : triple.B;
  const Integer numerator = lead * z * z - lead + triple.C;
  if (sgn(numerator) < 0) return std::nullopt;
  if (!mpz_divisible_p(numerator.get_mpz_t(), triple.C.get_mpz_t())) return std::nullopt;
  return arith::as_square(numerator / triple.C);
}

bool IntersectionWitness::extends(const PellTriple& t) const {
  return sgn(D) > 0 && D != t.A && D != t.B && D != t.C;
}

IntersectionResult find_intersections(const PellTriple& triple, std::size_t max_index) {
  if (max_index < 2) throw InputError("find_intersections: max_index must be at least 2");
  IntersectionResult result;

  for (Sign lambda : {Sign::Plus, Sign::Minus}) {
    PellSequence v(triple, SequenceKind::V, lambda);
    PellSequence w(triple, SequenceKind::W, lambda);
    const auto& vs = v.first(max_index + 1);
    const auto& ws = w.first(max_index + 1);

    // Both tails are strictly increasing from index 1.
    std::size_t j = 1, k = 1;
    while (j <= max_index && k <= max_index) {
      const int order = cmp(vs[j], ws[k]);
      if (order < 0) {
        ++j;
      } else if (order > 0) {
        ++k;
      } else {
        const Integer& z = vs[j];
        if (abs(z) > 1) {
          if (j % 2 == 0 && k % 2 == 0) {
            IntersectionWitness wit;
            wit.j = j;
            wit.k = k;
            wit.m = j / 2;
            wit.n = k / 2;
            wit.z = z;
            wit.lambda = lambda;
            const Integer zz1 = z * z - 1;
            if (!mpz_divisible_p(zz1.get_mpz_t(), triple.C.get_mpz_t())) {
              throw std::logic_error("common term z with z^2 - 1 not divisible by C");
            }
            wit.D = zz1 / triple.C;
            result.witnesses.push_back(std::move(wit));
          } else {
            result.anomalies.push_back(ParityAnomaly{j, k, z, lambda});
          }
        }
        ++j;
        ++k;
      }
    }
  }
  return result;
}

}  // namespace dioph::pell
