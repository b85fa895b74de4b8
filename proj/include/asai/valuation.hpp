#ifndef ASAI_VALUATION_HPP
#define ASAI_VALUATION_HPP

#include <map>
#include <optional>
#include <string>

#include "asai/scalar.hpp"

namespace asai {

bool is_prime(long n);

// Additive p-adic valuation of a rational; nullopt encodes v_p(0) = +infinity.
// Throws std::invalid_argument unless p is prime.
std::optional<long> padic_valuation(const Rational& x, long p);

// Valuation of a scalar. Rational mode delegates to the exact valuation. In
// symbolic mode every indeterminate occurring with a positive exponent must
// have a declared valuation; the result is the minimum over monomials of
// v_p(coefficient) + sum(exponent * declared). This is the exact valuation
// whenever the minimum is attained once, and a lower bound in general.
std::optional<Rational> padic_valuation(const Scalar& x, long p,
                                        const std::map<std::string, Rational>& declared);

} // namespace asai

#endif
