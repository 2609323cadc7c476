#pragma once

#include <gmpxx.h>

#include <string>

namespace stringcone {

// Exact arbitrary-precision rationals, always kept canonical
// (coprime numerator/denominator, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

// Accepts "p/q" or "p".
Rational parse_rational(const std::string& s);

std::string rational_str(const Rational& r);

bool rational_is_integer(const Rational& r);

}  // namespace stringcone
