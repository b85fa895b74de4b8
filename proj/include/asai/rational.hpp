#ifndef ASAI_RATIONAL_HPP
#define ASAI_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace asai {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical rational with positive denominator; throws on den == 0.
Rational make_rational(const Integer& num, const Integer& den);

// Strict "num" / "num/den" parser (optional leading '-'). Throws
// std::invalid_argument on anything else, including den == 0.
Rational parse_rational(std::string_view text);

// "num" or "num/den"; the inverse of parse_rational on canonical values.
std::string rational_str(const Rational& q);

// base^e with e possibly negative (base must be nonzero in that case).
Rational rational_pow(const Rational& base, long e);

// p^e as an exact rational, e of either sign.
Rational prime_power(long p, long e);

bool is_integer(const Rational& q);

} // namespace asai

#endif
