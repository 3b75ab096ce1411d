#pragma once

#include <gmpxx.h>

#include <string>

namespace palinform {

using Rational = mpq_class;
using Integer  = mpz_class;

// "3", "-7/2", "1.05" (decimal -> exact: 21/20), optional leading +/-.
Rational parse_rational(const std::string& text);

// Finite decimal string when the reduced denominator is 2^a*5^b ("1.05", "-0.2"),
// otherwise "p/q". Round-trips through parse_rational.
std::string format_rational(const Rational& value);

Integer binomial(unsigned long n, unsigned long k);

inline double to_double(const Rational& value) { return value.get_d(); }

Rational rational_pow(const Rational& base, long exponent);

}  // namespace palinform
