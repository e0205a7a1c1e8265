#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace geocrystal {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q". Throws ParseError on malformed text or q = 0.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" with q > 0 and gcd(p, q) = 1; integers keep the "/1".
std::string format_rational(const Rational& r);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// a / b, throwing DivisionByZero instead of letting GMP abort.
Rational checked_div(const Rational& a, const Rational& b);

/// r^k for any integer k; 0^k with k < 0 throws DivisionByZero.
Rational ipow(const Rational& r, int k);

}  // namespace geocrystal
