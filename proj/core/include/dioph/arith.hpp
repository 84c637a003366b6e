#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dioph {

/// Arbitrary-precision integer. Used for both signed values (Pell terms)
/// and the non-negative quantities a, b, c, d, R, S, T; operations that
/// need non-negativity check it at the boundary.
using Integer = mpz_class;

namespace arith {

/// Floor of the square root: r with r*r <= n < (r+1)*(r+1).
/// Throws InputError for negative n.
Integer isqrt(const Integer& n);

/// r with r*r == n when n is a perfect square, otherwise empty.
/// Negative n is never a square.
std::optional<Integer> as_square(const Integer& n);

/// Cheap necessary condition for n to be a square (residues modulo
/// 64, 63, 65 and 11). False means "certainly not a square".
bool may_be_square(const Integer& n) noexcept;

/// Parses an optionally signed decimal integer. Surrounding whitespace,
/// empty strings, and stray characters are rejected with InputError.
Integer parse_integer(std::string_view text);

/// Like parse_integer, but also rejects negative values.
Integer parse_natural(std::string_view text);

inline std::string to_string(const Integer& n) { return n.get_str(10); }

}  // namespace arith
}  // namespace dioph
