#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dioph/arith.hpp"

namespace dioph::pell {

/// Diophantine triple A < B < C with AB+1 = R^2, AC+1 = S^2, BC+1 = T^2.
struct PellTriple {
  Integer A, B, C;
  Integer R, S, T;
};

/// Throws InputError unless 0 < a < b < c, DomainError if {a, b, c} is not
/// a Diophantine triple.
PellTriple make_pell_triple(const Integer& a, const Integer& b, const Integer& c);

/// V solves A z^2 - C x^2 = A - C (coefficient 2S); W solves
/// B z^2 - C y^2 = B - C (coefficient 2T).
enum class SequenceKind { V, W };

/// Sign of the fundamental value z0 (for V) or z1 (for W).
enum class Sign : int { Plus = 1, Minus = -1 };

inline int value(Sign s) noexcept { return static_cast<int>(s); }
const char* to_string(SequenceKind kind) noexcept;

/// Binary recurrence of the z-values of one solution class:
///   terms[0] = z_init, terms[1] = coeff/2 * z_init + C * companion_init,
///   terms[i+2] = coeff * terms[i+1] - terms[i].
/// The class is the one with companion_init = 1 (x0 = 1 or y1 = 1).
/// Terms are cached and extended on demand; a single object must not be
/// extended from several threads at once.
class PellSequence {
 public:
  PellSequence(const PellTriple& triple, SequenceKind kind, Sign z_init);

  SequenceKind kind() const noexcept { return kind_; }
  Sign sign() const noexcept { return sign_; }
  const Integer& coeff() const noexcept { return coeff_; }
  const Integer& companion_init() const noexcept { return companion_init_; }

  /// The index-th term, extending the cache as needed.
  const Integer& term(std::size_t index);

  /// Ensures at least `count` terms are cached and returns the cache.
  const std::vector<Integer>& first(std::size_t count);

 private:
  SequenceKind kind_;
  Sign sign_;
  Integer coeff_;
  Integer companion_init_;
  std::vector<Integer> terms_;
};

/// First `count` (>= 1) terms of the requested class.
std::vector<Integer> generate_sequence(const PellTriple& triple, SequenceKind kind, Sign z_init,
                                       std::size_t count);

/// The non-negative companion x (for V) or y (for W) solving the class's
/// Pellian equation for this z, or empty when none exists.
std::optional<Integer> check_pell_term(const PellTriple& triple, SequenceKind kind,
                                       const Integer& z);

/// v_j = w_k = z with |z| > 1, j = 2m and k = 2n even, in the diagonal
/// class z0 = z1 = lambda.
struct IntersectionWitness {
  std::size_t j = 0, k = 0;
  std::size_t m = 0, n = 0;
  Integer z;
  Sign lambda = Sign::Plus;
  Integer D;  // (z^2 - 1) / C

  /// D differs from A, B and C, so {A, B, C, D} is a genuine quadruple.
  bool extends(const PellTriple& triple) const;
};

/// A coincidence v_j = w_k with |z| > 1 where j or k is odd. The cited
/// parity conditions rule these out; any found is reported, never dropped.
struct ParityAnomaly {
  std::size_t j = 0, k = 0;
  Integer z;
  Sign lambda = Sign::Plus;
};

struct IntersectionResult {
  std::vector<IntersectionWitness> witnesses;  // lambda = +1 first, then by j
  std::vector<ParityAnomaly> anomalies;
};

/// All coincidences v_j = w_k with 1 <= j, k <= max_index (>= 2) in the two
/// diagonal classes, found by a two-pointer merge of the increasing tails.
IntersectionResult find_intersections(const PellTriple& triple, std::size_t max_index);

}  // namespace dioph::pell
