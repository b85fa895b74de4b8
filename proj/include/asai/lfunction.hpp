#ifndef ASAI_LFUNCTION_HPP
#define ASAI_LFUNCTION_HPP

#include <map>

#include "asai/power_series.hpp"
#include "asai/transfer.hpp"

namespace asai {

// Local Euler factor in X = l^{-s}: the reverse of the degree-4
// characteristic polynomial, with constant term 1.
struct LocalFactor {
    long ell = 0;
    UniPoly poly;
};

LocalFactor local_euler_factor(const GL4Local& loc);

// The packet's local transfer at any unramified l, including l = p (the
// level-1 setting keeps p unramified on the Dirichlet-series side).
GL4Local transfer_local_at(const HilbertEigenPacket& pkt, long ell, TransferSign sign);

// Local piece of zeta(2s - 2k + 2) * sum c(m O_K) m^{-s} at an unramified l:
// (sum_{r <= R} c(l^r O_K) X^r) * (1 - l^{2k-2} X^2)^{-1} mod X^{R+1}.
// Requires the classical-level-1 profile e_l = N(l)^{k-1} on the packet.
PowerSeries local_dirichlet_series(const HilbertEigenPacket& pkt, long ell, long k, int order);

struct LocalIdentityResult {
    bool ok = false;
    int first_mismatch = -1; // lowest differing X-power when !ok
};

// Checks local_dirichlet_series == (local As-factor)^{-1} through X^order.
// The identity holds for the plus transfer; the minus sign breaks it at
// inert primes and the first differing coefficient is reported.
LocalIdentityResult local_identity_check(const HilbertEigenPacket& pkt, long ell, long k,
                                         int order, TransferSign sign);

// Coefficients b_m of zeta(2s - 2k + 2) * sum c(m O_K) m^{-s} for
// 1 <= m <= truncation, restricted to m coprime to disc(K); there is no
// Euler data at ramified primes, so those m are excluded rather than
// guessed.
struct DirichletPrefix {
    long truncation = 0;
    std::map<long, Scalar> b;
};

// Dirichlet-convolution route: b_m = sum_{j^2 | m} j^{2k-2} c((m/j^2) O_K).
DirichletPrefix global_dirichlet_coefficients(const HilbertEigenPacket& pkt, long k, long M);

// Independent route: expand prod_l (local As+ Euler factor)^{-1}
// coefficientwise; must agree with the convolution route.
DirichletPrefix global_dirichlet_coefficients_euler(const HilbertEigenPacket& pkt, long k, long M);

} // namespace asai

#endif
