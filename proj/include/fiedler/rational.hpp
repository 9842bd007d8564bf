#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fiedler {

// GMP keeps mpq_class canonical (gcd 1, positive denominator) after every
// arithmetic operation; parse_rational canonicalizes string input.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q". Throws InputError on anything else or q = 0.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace fiedler
