#ifndef ASAI_QUAD_FIELD_HPP
#define ASAI_QUAD_FIELD_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "asai/rational.hpp"

namespace asai {

// K = Q(sqrt(d)) for squarefree d > 1.
struct QuadField {
    long d = 0;
    long discriminant = 0; // d when d = 1 mod 4, else 4d
};

QuadField make_quad_field(long d); // validates d squarefree and > 1

enum class SplittingType { Split, Inert, Ramified };

std::string splitting_str(SplittingType t);

// Kronecker symbol (a/n).
int kronecker(long a, long n);

// Behaviour of the rational prime ell in O_K, by (disc/ell).
SplittingType splitting_type(const QuadField& field, long ell);

enum class IdealSlot { First, Second, Whole };

// Label for a prime ideal above a rational prime. Split primes carry the
// two labels First/Second (an arbitrary but fixed orientation of l, l^c);
// inert primes the single label Whole; ramified primes reuse slot First.
struct PrimeIdealLabel {
    long ell = 0;
    IdealSlot slot = IdealSlot::First;
    auto operator<=>(const PrimeIdealLabel&) const = default;
};

std::string label_str(const PrimeIdealLabel& label);

// N(label): ell for split and ramified slots, ell^2 for Whole.
long label_norm(const QuadField& field, const PrimeIdealLabel& label);

std::vector<PrimeIdealLabel> labels_above(const QuadField& field, long ell);

// label -> positive exponent
using IdealFactorization = std::map<PrimeIdealLabel, long>;

// Factorization of the ideal m O_K; m = 1 gives the empty map.
IdealFactorization factor_rational_ideal(const QuadField& field, long m);

Integer ideal_norm(const QuadField& field, const IdealFactorization& factors);

// Trial-division factorization of n >= 1 as (prime, exponent) pairs.
std::vector<std::pair<long, long>> factorize(long n);

// Norm of the unit (x + y*sqrt(d))/w where w is 1 or 2; throws unless the
// norm is +-1. Used for the weight-space unit condition.
long unit_norm(const QuadField& field, long x, long y, long w = 1);

} // namespace asai

#endif
