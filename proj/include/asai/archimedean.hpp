#ifndef ASAI_ARCHIMEDEAN_HPP
#define ASAI_ARCHIMEDEAN_HPP

#include <utility>
#include <vector>

#include "asai/hilbert.hpp"
#include "asai/weights.hpp"

namespace asai {

// Exponents (u, v) of z^u zbar^v in a Langlands parameter at infinity;
// half-integers are exact rationals.
using ExponentPair = std::pair<Rational, Rational>;

struct HodgeType {
    long p = 0, q = 0;
    auto operator<=>(const HodgeType&) const = default;
};

// Parameter of the discrete-series component pi_i:
// {(1/2 - v_i, -n_i - v_i - 1/2)} together with its swap.
std::vector<ExponentPair> parameter_of_component(long n_i, long v_i);

// The four exponent pairs of the Asai parameter; normalized = true applies
// the |det|^{1/2} twist, adding 1/2 to every exponent.
std::vector<ExponentPair> asai_parameter(const HilbertWeight& kappa, bool normalized);

// Hodge types of the Asai motive at the infinite place; motive weight
// n1 + n2 + 2(v1 + v2) + 2 = 2m + 2.
std::vector<HodgeType> hodge_types_asai(const HilbertWeight& kappa);

bool has_middle_hodge_type(const HilbertWeight& kappa);

// mu recovered from the normalized parameter: with the first components
// sorted descending as u_1 >= ... >= u_4, mu_i = 3/2 - rho_i - u_{5-i}.
// Must agree with weight_map_j; throws NonCohomologicalError at n1 = n2.
GL4Weight mu_from_infinity(const HilbertWeight& kappa);

} // namespace asai

#endif
