#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace exo {

// Exact rationals; mpq_class keeps every value canonical (lowest terms,
// positive denominator, zero is 0/1).
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "a" or "a/b" with decimal digits and an optional leading '-'.
Rational parse_rational(std::string_view text);

inline std::string to_string(const Rational& q) { return q.get_str(); }

} // namespace exo
