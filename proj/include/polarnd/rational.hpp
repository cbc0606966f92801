#pragma once

#include <gmpxx.h>

#include <string>

namespace polarnd {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Canonicalized num/den; throws PreconditionError on a zero denominator.
Rational make_rational(long num, long den = 1);

/// Parses "n" or "n/d" (optionally signed).
Rational parse_rational(const std::string& text);

/// "n" when the denominator is 1, otherwise "n/d".
std::string to_string(const Rational& r);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace polarnd
