#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace linf {

using Rational = mpq_class;

// "p" or "p/q", canonical (q > 0).
std::string to_string(const Rational& q);

// Accepts integers, "p/q" and signs.  Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// p/q in canonical form; q != 0.
Rational make_rational(long p, long q);

Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

}
