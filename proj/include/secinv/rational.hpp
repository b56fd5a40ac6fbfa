#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace secinv {

using Integer = mpz_class;
/// Exact rational; GMP keeps it canonical (lowest terms, positive denominator).
using Rational = mpq_class;

/// Parses "[-]digits[/digits]". Throws ParseError on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace secinv
