#ifndef ASAI_TRANSFER_HPP
#define ASAI_TRANSFER_HPP

#include <array>
#include <map>
#include <string>

#include "asai/hilbert.hpp"
#include "asai/unipoly.hpp"
#include "asai/weights.hpp"

namespace asai {

// Sign of the Asai representation on the Galois swap.
enum class TransferSign { Plus, Minus };

std::string sign_str(TransferSign s);

// Images of T_{l,1..4} at one rational prime l != p.
struct GL4Local {
    long ell = 0;
    std::array<Scalar, 4> t;
};

// sigma at split l = l l^c:
//   T1 -> T_l T_lc, T2 -> T_l^2 S_lc + S_l T_lc^2 - 2 l S_l S_lc,
//   T3 -> l^{-1} T_l S_l T_lc S_lc, T4 -> l^{-2} S_l^2 S_lc^2.
// Sign-independent.
GL4Local sigma_unramified_split(const SatakeLocal& first, const SatakeLocal& second, long ell);

// sigma at inert l: T1 -> +-T_l, T2 -> 0, T3 -> -+ l^{-1} T_l S_l,
// T4 -> -l^{-2} S_l^2 (top symbols for Plus).
GL4Local sigma_unramified_inert(const SatakeLocal& whole, long ell, TransferSign sign);

// X^4 - T1 X^3 + l T2 X^2 - l^3 T3 X + l^6 T4.
UniPoly asai_charpoly_local(const GL4Local& loc);

// Images of the operators supported at p. Split regime: U_{p,1..4} and the
// controlling U_p = U_{p,1}U_{p,2}U_{p,3}; inert regime: the auxiliary
// generators U~_{p,1..4} and U~_p. Symbolic values are reduced to normal
// form modulo the norm relations, so the controlling eigenvalue is exactly
// p^{3m-1} a_p^4 a_pc^2 (split) and -p^{4m-1} a_p^4 (inert).
struct GL4PPart {
    PRegime regime = PRegime::SplitAtP;
    std::array<Scalar, 4> u;
    Scalar controlling;
};

GL4PPart sigma_p_split(const RefinementData& ref, long p, long m);
GL4PPart sigma_p_inert(const RefinementData& ref, long p, long m, TransferSign sign);

// Refinement character in canonical generator order (u_1, u_2, u_3, u_4).
// Split: (a_p a_pc, p^{-1} a_p b_pc, p^{-2} b_p a_pc, p^{-3} b_p b_pc).
// Inert: the restriction chi~ on u~: (+-a_p, p^{-2} a_p b_p, -p^{-1},
// +-p^{-3} b_p); the square roots of the full chi cancel and chi itself is
// never materialized.
struct RefinementCharacter {
    PRegime regime = PRegime::SplitAtP;
    std::array<Scalar, 4> u;
};

RefinementCharacter refinement_split(const RefinementData& ref, long p, long m);
RefinementCharacter refinement_inert(const RefinementData& ref, long p, long m, TransferSign sign);

// Normal form of a symbolic scalar modulo the norm relations
// alpha*beta = p^{m+1} per split slot / alpha*beta = p^{2m+2} inert.
// Identity on numeric scalars and when no beta symbol is declared.
Scalar impose_norm_relations(const Scalar& value, const RefinementData& ref, long p, long m);

struct GL4EigenPacket {
    TransferSign sign = TransferSign::Plus;
    std::map<long, GL4Local> locals; // ell != p
    GL4PPart ppart;
    GL4Weight weight;
};

// Full point-level transfer: locals via sigma at every supported prime
// away from p, p-part per regime, weight via the weight map. Requires a
// valid packet with n1 > n2.
GL4EigenPacket transfer_eigenpacket(const HilbertEigenPacket& pkt, TransferSign sign);

// Q-fiber equivalence: all T_{l,i} agree, U_{p,1}, U_{p,3}, U_{p,4} agree
// and U_{p,2} agrees up to sign. Inert-regime packets compare all four
// auxiliary values strictly. Throws on incomparable supports or regimes.
bool q_equivalent(const GL4EigenPacket& x, const GL4EigenPacket& y);

// Controlling eigenvalue divided by mu evaluated on the controlling torus
// element: p^{3m-1+4v1+2v2} (split) / p^{4m-1+6v1+2v2} (inert). Equals
// alpha_p^4 alpha_pc^2 resp. -alpha_p^4 exactly on classical weights.
Scalar star_eigenvalue(const HilbertEigenPacket& pkt, TransferSign sign);

} // namespace asai

#endif
