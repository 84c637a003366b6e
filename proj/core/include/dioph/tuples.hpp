#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dioph/arith.hpp"

namespace dioph::tuples {

/// A strictly increasing list of at least two positive integers, the
/// candidate for a Diophantine m-tuple. Construction validates ordering
/// and positivity; it does not check the square property.
class MTuple {
 public:
  /// Throws InputError on fewer than two elements, non-positive elements,
  /// duplicates or non-increasing order.
  explicit MTuple(std::vector<Integer> elements);

  /// Sorts first, then validates as above. Duplicates still throw.
  static MTuple from_unordered(std::vector<Integer> elements);

  const std::vector<Integer>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const Integer& operator[](std::size_t i) const { return elements_[i]; }

  std::string to_string() const;  // space-separated decimal

  friend bool operator==(const MTuple&, const MTuple&) = default;

 private:
  std::vector<Integer> elements_;
};

struct FailingPair {
  Integer first;
  Integer second;
  friend bool operator==(const FailingPair&, const FailingPair&) = default;
};

struct VerificationReport {
  bool ok = true;
  std::vector<FailingPair> failing;  // in lexicographic (i, j) order
};

VerificationReport verify_tuple(const MTuple& tuple);

/// Triple a < b < c together with r, s, t: ab+1 = r^2, ac+1 = s^2, bc+1 = t^2.
struct TripleRST {
  Integer a, b, c;
  Integer r, s, t;
};

/// Throws InputError unless 0 < a < b < c, DomainError (naming the product)
/// if {a, b, c} is not a Diophantine triple.
TripleRST triple_rst(const Integer& a, const Integer& b, const Integer& c);

/// d+ = a + b + c + 2abc + 2rst. Same errors as triple_rst.
Integer regular_extension(const Integer& a, const Integer& b, const Integer& c);
Integer regular_extension(const TripleRST& triple);

// Desk-scale enumeration works on machine words and keeps per-element
// tables in memory, so the limit is capped well below 2^32.
inline constexpr std::uint64_t kMaxEnumerationLimit = 100'000'000ULL;

/// Adjacency lists of the pair graph {(x, y) : x < y <= limit, xy + 1 square}.
/// neighbours[x] holds the y > x, ascending. Index 0 is unused.
class PairGraph {
 public:
  explicit PairGraph(std::uint64_t limit, unsigned jobs = 1);

  std::uint64_t limit() const noexcept { return limit_; }
  std::span<const std::uint64_t> neighbours(std::uint64_t x) const;
  bool adjacent(std::uint64_t x, std::uint64_t y) const;
  std::size_t edge_count() const noexcept;

 private:
  std::uint64_t limit_;
  std::vector<std::vector<std::uint64_t>> upper_;
};

/// Every Diophantine tuple with `size` elements and max element <= limit,
/// in lexicographic order. Requires 3 <= limit <= kMaxEnumerationLimit and
/// 2 <= size <= 5 (InputError otherwise). `jobs` workers split the range of
/// the smallest element; the output does not depend on `jobs`.
std::vector<MTuple> enumerate_tuples(std::uint64_t limit, unsigned size, unsigned jobs = 1);

/// Draws `samples` random strictly increasing tuples with elements in
/// [1, limit] and returns the first one that verifies but is missing from
/// `known`. `known` must be sorted lexicographically (as enumerate_tuples
/// returns it).
std::optional<MTuple> find_unlisted_tuple(std::uint64_t limit, unsigned size,
                                          std::span<const MTuple> known,
                                          std::size_t samples, std::uint64_t seed);

/// Lexicographic comparison on elements, shorter prefix first.
bool lex_less(const MTuple& lhs, const MTuple& rhs);

}  // namespace dioph::tuples
