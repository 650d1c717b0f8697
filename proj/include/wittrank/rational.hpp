#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wittrank {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical text form "p/q", with "/q" omitted when q = 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p" or "p/q" (optional leading '-'); throws InputError otherwise.
Rational parse_rational(std::string_view text);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

/// Simplest rational (smallest denominator, then smallest |numerator|)
/// strictly inside the open interval (lo, hi). Requires lo < hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

/// Outward rounding to a multiple of 2^-bits.
Rational round_down(const Rational& q, unsigned bits);
Rational round_up(const Rational& q, unsigned bits);

}  // namespace wittrank
