#include "dioph/tuples.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <random>
#include <sstream>
#include <thread>

#include "dioph/errors.hpp"

namespace dioph::tuples {
namespace {

using u64 = std::uint64_t;

std::string pair_text(const Integer& x, const Integer& y) {
  return "(" + x.get_str() + "," + y.get_str() + ")";
}

// Smallest-prime-factor table for 0..n.
std::vector<u64> smallest_prime_factors(u64 n) {
  std::vector<u64> spf(n + 1, 0);
  for (u64 i = 2; i <= n; ++i) {
    if (spf[i] != 0) continue;
    for (u64 j = i; j <= n; j += i) {
      if (spf[j] == 0) spf[j] = i;
    }
  }
  return spf;
}

// Inverse of a modulo m, gcd(a, m) == 1, m >= 1.
u64 inverse_mod(u64 a, u64 m) {
  std::int64_t old_r = static_cast<std::int64_t>(a % m), r = static_cast<std::int64_t>(m);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  std::int64_t inv = old_s % static_cast<std::int64_t>(m);
  if (inv < 0) inv += static_cast<std::int64_t>(m);
  return static_cast<u64>(inv);
}

// Roots of x^2 = 1 modulo a prime power.
std::vector<u64> unit_square_roots_prime_power(u64 p, unsigned e, u64 pe) {
  if (p != 2) return {1, pe - 1};
  if (e == 1) return {1};
  if (e == 2) return {1, 3};
  const u64 half = pe / 2;
  return {1, half - 1, half + 1, pe - 1};
}

// All x in [0, a) with x^2 = 1 (mod a), via CRT over the factorisation of a.
std::vector<u64> unit_square_roots(u64 a, const std::vector<u64>& spf) {
  std::vector<u64> roots{0};
  u64 modulus = 1;
  u64 rest = a;
  while (rest > 1) {
    const u64 p = spf[rest];
    unsigned e = 0;
    u64 pe = 1;
    while (rest % p == 0) {
      rest /= p;
      pe *= p;
      ++e;
    }
    const auto local = unit_square_roots_prime_power(p, e, pe);
    const u64 inv = inverse_mod(modulus % pe, pe);  // modulus^-1 mod pe
    std::vector<u64> merged;
    merged.reserve(roots.size() * local.size());
    for (u64 r1 : roots) {
      for (u64 r2 : local) {
        // x = r1 + modulus * ((r2 - r1) * modulus^-1 mod pe)
        const u64 diff = (r2 + pe - (r1 % pe)) % pe;
        const u64 t = (diff * inv) % pe;
        merged.push_back(r1 + modulus * t);
      }
    }
    roots = std::move(merged);
    modulus *= pe;
  }
  if (a == 1) return {0};
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

u64 isqrt_u64(u64 n) { return arith::isqrt(Integer(n)).get_ui(); }

template <class Fn>
void run_partitioned(u64 first, u64 last, unsigned jobs, Fn&& body) {
  if (jobs <= 1 || last - first < 2) {
    for (u64 x = first; x <= last; ++x) body(x);
    return;
  }
  std::vector<std::jthread> workers;
  workers.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    // Strided split: small x carry the heaviest neighbour lists.
    workers.emplace_back([&, w] {
      for (u64 x = first + w; x <= last; x += jobs) body(x);
    });
  }
}

void check_limit(u64 limit) {
  if (limit < 3) throw InputError("limit must be at least 3");
  if (limit > kMaxEnumerationLimit) {
    throw InputError("limit exceeds the machine-word enumeration range");
  }
}

}  // namespace

MTuple::MTuple(std::vector<Integer> elements) : elements_(std::move(elements)) {
  if (elements_.size() < 2) throw InputError("a tuple needs at least two elements");
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (sgn(elements_[i]) <= 0) {
      throw InputError("tuple elements must be positive, got " + elements_[i].get_str());
    }
    if (i > 0 && elements_[i - 1] >= elements_[i]) {
      if (elements_[i - 1] == elements_[i]) {
        throw InputError("duplicate tuple element " + elements_[i].get_str());
      }
      throw InputError("tuple elements must be strictly increasing: " + elements_[i - 1].get_str() +
                       " before " + elements_[i].get_str());
    }
  }
}

MTuple MTuple::from_unordered(std::vector<Integer> elements) {
  std::sort(elements.begin(), elements.end());
  return MTuple(std::move(elements));
}

std::string MTuple::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) out += ' ';
    out += elements_[i].get_str();
  }
  return out;
}

bool lex_less(const MTuple& lhs, const MTuple& rhs) {
  return std::lexicographical_compare(lhs.elements().begin(), lhs.elements().end(),
                                      rhs.elements().begin(), rhs.elements().end());
}

VerificationReport verify_tuple(const MTuple& tuple) {
  VerificationReport report;
  const auto& e = tuple.elements();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      if (!arith::as_square(e[i] * e[j] + 1)) {
        report.ok = false;
        report.failing.push_back({e[i], e[j]});
      }
    }
  }
  return report;
}

TripleRST triple_rst(const Integer& a, const Integer& b, const Integer& c) {
  if (sgn(a) <= 0 || !(a < b) || !(b < c)) {
    throw InputError("triple must satisfy 0 < a < b < c, got " + a.get_str() + ", " + b.get_str() +
                     ", " + c.get_str());
  }
  auto root = [](const Integer& x, const Integer& y) {
    auto r = arith::as_square(x * y + 1);
    if (!r) {
      throw DomainError("not a Diophantine triple: " + x.get_str() + "*" + y.get_str() +
                        "+1 is not a square " + pair_text(x, y));
    }
    return *r;
  };
  TripleRST out{a, b, c, root(a, b), root(a, c), root(b, c)};
  return out;
}

Integer regular_extension(const TripleRST& t) {
  return t.a + t.b + t.c + 2 * t.a * t.b * t.c + 2 * t.r * t.s * t.t;
}

Integer regular_extension(const Integer& a, const Integer& b, const Integer& c) {
  return regular_extension(triple_rst(a, b, c));
}

PairGraph::PairGraph(u64 limit, unsigned jobs) : limit_(limit), upper_(limit + 1) {
  check_limit(limit);
  const auto spf = smallest_prime_factors(limit);
  run_partitioned(1, limit, jobs, [&](u64 a) {
    // b = (r^2 - 1) / a with a < b <= limit  <=>  a < r <= isqrt(a*limit + 1)
    const u64 r_max = isqrt_u64(a * limit + 1);
    if (r_max <= a) return;
    auto& out = upper_[a];
    for (u64 root : unit_square_roots(a, spf)) {
      // first r > a congruent to root mod a
      u64 r = a + root;
      if (r <= a) r += a;
      for (; r <= r_max; r += a) {
        const u64 b = (r * r - 1) / a;
        if (b > a && b <= limit) out.push_back(b);
      }
    }
    std::sort(out.begin(), out.end());
  });
}

std::span<const u64> PairGraph::neighbours(u64 x) const {
  if (x == 0 || x > limit_) return {};
  return upper_[x];
}

bool PairGraph::adjacent(u64 x, u64 y) const {
  if (x > y) std::swap(x, y);
  const auto n = neighbours(x);
  return std::binary_search(n.begin(), n.end(), y);
}

std::size_t PairGraph::edge_count() const noexcept {
  std::size_t total = 0;
  for (const auto& n : upper_) total += n.size();
  return total;
}

std::vector<MTuple> enumerate_tuples(u64 limit, unsigned size, unsigned jobs) {
  check_limit(limit);
  if (size < 2 || size > 5) throw InputError("tuple size must be between 2 and 5");
  jobs = std::max(1U, jobs);

  const PairGraph graph(limit, jobs);
  std::vector<std::vector<MTuple>> per_first(limit + 1);

  run_partitioned(1, limit, jobs, [&](u64 first) {
    std::vector<u64> chosen{first};
    auto& found = per_first[first];
    // Extend a clique whose common upper neighbourhood is `candidates`.
    std::function<void(const std::vector<u64>&)> extend = [&](const std::vector<u64>& candidates) {
      if (chosen.size() == size) {
        std::vector<Integer> elems(chosen.begin(), chosen.end());
        found.emplace_back(std::move(elems));
        return;
      }
      for (u64 next : candidates) {
        const auto nb = graph.neighbours(next);
        std::vector<u64> narrowed;
        std::set_intersection(candidates.begin(), candidates.end(), nb.begin(), nb.end(),
                              std::back_inserter(narrowed));
        if (narrowed.empty() && chosen.size() + 1 < size) continue;
        chosen.push_back(next);
        extend(narrowed);
        chosen.pop_back();
      }
    };
    const auto nb = graph.neighbours(first);
    extend(std::vector<u64>(nb.begin(), nb.end()));
  });

  std::vector<MTuple> out;
  for (auto& bucket : per_first) {
    std::move(bucket.begin(), bucket.end(), std::back_inserter(out));
  }
  return out;
}

std::optional<MTuple> find_unlisted_tuple(u64 limit, unsigned size, std::span<const MTuple> known,
                                          std::size_t samples, u64 seed) {
  check_limit(limit);
  if (size < 2 || size > 5 || size > limit) throw InputError("invalid tuple size for spot check");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<u64> element(1, limit);

  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<u64> picked;
    if (s % 2 == 0) {
      // Uniform draw.
      while (picked.size() < size) {
        const u64 x = element(rng);
        if (std::find(picked.begin(), picked.end(), x) == picked.end()) picked.push_back(x);
      }
    } else {
      // Square-seeded draw: every later element makes a pair with the first.
      const u64 a = element(rng);
      picked.push_back(a);
      const u64 r_max = isqrt_u64(a * limit + 1);
      if (r_max < 2) continue;
      std::uniform_int_distribution<u64> root(2, r_max);
      for (int tries = 0; picked.size() < size && tries < 64; ++tries) {
        const u64 r = root(rng);
        const u64 sq = r * r - 1;
        if (sq % a != 0) continue;
        const u64 b = sq / a;
        if (b == 0 || b > limit) continue;
        if (std::find(picked.begin(), picked.end(), b) == picked.end()) picked.push_back(b);
      }
      if (picked.size() < size) continue;
    }
    std::sort(picked.begin(), picked.end());
    MTuple candidate(std::vector<Integer>(picked.begin(), picked.end()));
    if (!verify_tuple(candidate).ok) continue;
    if (!std::binary_search(known.begin(), known.end(), candidate, lex_less)) return candidate;
  }
  return std::nullopt;
}

}  // namespace dioph::tuples
