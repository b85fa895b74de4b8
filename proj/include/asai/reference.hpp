#ifndef ASAI_REFERENCE_HPP
#define ASAI_REFERENCE_HPP

#include <array>
#include <vector>

#include "asai/scalar.hpp"
#include "asai/transfer.hpp"

// Brute-force reference computations used by the property suite and the
// tests. Everything here expands products over individual Frobenius
// eigenvalues in splitting rings; nothing is shared with the closed-form
// transfer formulas these results are checked against.
namespace asai::reference {

// Element x + y*theta2 of a quadratic extension of the scalar ring.
struct QuadPair {
    Scalar x, y;
};

// Element a + b*theta1 with a, b linear in theta2: the ring
// Scalar[theta1, theta2] / (theta1^2 - u1 theta1 - v1,
//                          theta2^2 - u2 theta2 - v2).
struct BiQuad {
    QuadPair a, b;
};

struct BiQuadCtx {
    Scalar u1, v1; // theta1^2 = u1 theta1 + v1
    Scalar u2, v2; // theta2^2 = u2 theta2 + v2
};

BiQuad bq_const(const Scalar& c);
BiQuad bq_theta1();
BiQuad bq_theta2();
BiQuad bq_add(const BiQuad& p, const BiQuad& q);
BiQuad bq_sub(const BiQuad& p, const BiQuad& q);
BiQuad bq_neg(const BiQuad& p);
BiQuad bq_mul(const BiQuadCtx& ctx, const BiQuad& p, const BiQuad& q);
bool bq_is_base(const BiQuad& p); // no theta-dependence left

// Coefficients (ascending in X) of the monic polynomial prod (X - root).
std::vector<BiQuad> expand_monic_from_roots(const BiQuadCtx& ctx,
                                            const std::vector<BiQuad>& roots);

// Charpoly coefficients (X^0..X^4) of the split tensor product: the roots
// {aa', ab', ba', bb'} in the double splitting ring of X^2 - aX + l s and
// X^2 - a'X + l s'. Throws if any root-dependence survives.
std::array<Scalar, 5> split_tensor_charpoly(const Scalar& a, const Scalar& s,
                                            const Scalar& a2, const Scalar& s2, long ell);

// Inert counterpart over {±a, ±r, ∓r, ±b} with r = sqrt(ab) adjoined
// (r^2 = e is a base constant); e = l^2 s.
std::array<Scalar, 5> inert_tensor_charpoly(const Scalar& a, const Scalar& s, long ell,
                                            TransferSign sign);

// h_r(alpha, beta) = sum_{i+j=r} alpha^i beta^j expanded in the splitting
// ring of X^2 - aX + e.
Scalar power_sum_h(const Scalar& a, const Scalar& e, long r);

// chi~ computed from the full inert character chi with an explicit choice
// of the square root of alpha*beta (root_sign = false negates it). Entries
// are (chi(u1), chi(u2)^2, chi(u3)/chi(u2), chi(u4)) evaluated exactly;
// both root signs must give the same answer.
std::array<Scalar, 4> inert_chi_tilde(const Rational& alpha, const Rational& beta, long p,
                                      TransferSign sign, bool root_sign);

} // namespace asai::reference

#endif
