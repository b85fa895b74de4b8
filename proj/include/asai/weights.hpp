#ifndef ASAI_WEIGHTS_HPP
#define ASAI_WEIGHTS_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "asai/hilbert.hpp"

namespace asai {

// Thrown when an operation needs n1 > n2 (at n1 = n2 the Asai motive has a
// middle Hodge type and supports no cohomology).
struct NonCohomologicalError : std::domain_error {
    NonCohomologicalError() : std::domain_error("n1 = n2: Asai transfer is not cohomological") {}
};

// GL(4) weight mu with purity weight w = mu1 + mu4 = mu2 + mu3.
struct GL4Weight {
    long mu1 = 0, mu2 = 0, mu3 = 0, mu4 = 0;
    long w = 0;
    std::array<long, 4> mu() const { return {mu1, mu2, mu3, mu4}; }
};

struct PurityDominanceReport {
    bool pure = false;
    bool dominant = false;
    bool regular = false; // strictly decreasing chain
    std::vector<std::string> failures;
};

PurityDominanceReport purity_dominance_check(const GL4Weight& mu);

// Exponents of the controlling-operator torus element: (1,p,p^2,p^3) for
// U_p, (1,p,p^3,p^4) for the auxiliary-algebra operator at inert p.
struct SlopeContext {
    PRegime regime = PRegime::SplitAtP;
    std::array<long, 4> rho{3, 2, 1, 0};
    std::array<long, 4> c{0, 1, 2, 3};
};

SlopeContext slope_context(PRegime regime);

// The closed immersion of weight spaces on integer points:
// mu = ((n1+n2)/2 + m - 1, (n1-n2)/2 + m - 1, m - (n1-n2)/2, m - (n1+n2)/2),
// w = 2m - 1. Throws std::domain_error when parity makes mu non-integral.
GL4Weight weight_map_j(const HilbertWeight& kappa);

// min over the 23 nontrivial Weyl elements of
// sum_i c_i ((mu+rho)_{w^{-1}(i)} - (mu+rho)_i); requires mu dominant.
Rational weyl_slope_bound_bruteforce(const GL4Weight& mu, const SlopeContext& ctx);

// min{n1-n2, n2+1} (split) / min{n2+1, 2(n1-n2)} (inert); needs n1 > n2 >= 0.
Rational small_slope_closed_form(const HilbertWeight& kappa, PRegime regime);

// Classicality threshold on the refinement valuation itself:
// split compares v_p(alpha_p^4 alpha_pc^2) with min{n1-n2, n2+1}; inert
// compares v_p(alpha_p) with min{(n2+1)/4, (n1-n2)/2}.
Rational classicality_threshold(long n1, long n2, PRegime regime);

struct ClassicalityReport {
    PRegime regime = PRegime::SplitAtP;
    Rational valuation;
    Rational threshold;
    bool classical = false; // strict inequality valuation < threshold
};

ClassicalityReport classicality_check(const HilbertEigenPacket& pkt);

// n1 > n2 >= 0 together with 2v1+v2 = 0 (split) or 3v1+v2 = 0 (inert).
bool classical_weight_membership(const HilbertWeight& kappa, PRegime regime);

// kappa(gamma, gamma) = N(gamma)^m for a unit gamma; the weight-space
// membership flag is N^m = 1.
bool weight_unit_condition(const HilbertWeight& kappa, long fundamental_unit_norm);

} // namespace asai

#endif
