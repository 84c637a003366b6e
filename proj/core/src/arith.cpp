#include "dioph/arith.hpp"

#include <array>
#include <cctype>
#include <string>

#include "dioph/errors.hpp"

namespace dioph::arith {
namespace {

template <unsigned Mod>
constexpr std::array<bool, Mod> square_residues() {
  std::array<bool, Mod> table{};
  for (unsigned x = 0; x < Mod; ++x) table[(x * x) % Mod] = true;
  return table;
}

constexpr auto kRes64 = square_residues<64>();
constexpr auto kRes63 = square_residues<63>();
constexpr auto kRes65 = square_residues<65>();
constexpr auto kRes11 = square_residues<11>();

}  // namespace

Integer isqrt(const Integer& n) {
  if (sgn(n) < 0) throw InputError("isqrt: negative argument " + n.get_str());
  if (n < 2) return n;

  // Start from a power of two that is >= sqrt(n). From any start above the
  // root, x' = (x + n/x) / 2 decreases strictly until it reaches
  // floor(sqrt(n)); the first non-decrease marks the answer.
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  Integer x = 1;
  x <<= static_cast<mp_bitcnt_t>((bits + 1) / 2);
  for (;;) {
    Integer y = (x + n / x) >> 1;
    if (y >= x) return x;
    x = std::move(y);
  }
}

bool may_be_square(const Integer& n) noexcept {
  if (sgn(n) < 0) return false;
  const unsigned long low = mpz_fdiv_ui(n.get_mpz_t(), 64UL * 63UL * 65UL * 11UL);
  return kRes64[low % 64] && kRes63[low % 63] && kRes65[low % 65] && kRes11[low % 11];
}

std::optional<Integer> as_square(const Integer& n) {
  if (!may_be_square(n)) return std::nullopt;
  Integer r = isqrt(n);
  if (r * r != n) return std::nullopt;
  return r;
}

Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) throw InputError("not an integer: '" + std::string(text) + "'");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw InputError("not an integer: '" + std::string(text) + "'");
    }
  }
  Integer value;
  const std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  value.set_str(digits, 10);
  return value;
}

Integer parse_natural(std::string_view text) {
  Integer value = parse_integer(text);
  if (sgn(value) < 0) throw InputError("expected a non-negative integer, got " + value.get_str());
  return value;
}

}  // namespace dioph::arith
