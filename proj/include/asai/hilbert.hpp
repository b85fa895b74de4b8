#ifndef ASAI_HILBERT_HPP
#define ASAI_HILBERT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "asai/quad_field.hpp"
#include "asai/scalar.hpp"

namespace asai {

// Cohomological weight (n, v) with parallel n + 2v = m(sigma_1 + sigma_2).
struct HilbertWeight {
    long n1 = 0, n2 = 0;
    long v1 = 0, v2 = 0;
    long m() const { return n1 + 2 * v1; }
};

std::vector<std::string> weight_violations(const HilbertWeight& w);
bool weight_valid(const HilbertWeight& w);

// Unramified Hecke data at one prime ideal: eigenvalues a of T_l and s of
// S_l. The Frobenius trace/determinant pair is (t, e) = (a, N(l) * s); the
// Satake roots themselves are never materialized.
struct SatakeLocal {
    PrimeIdealLabel label;
    long norm = 0; // N(label)
    Scalar a, s;
    const Scalar& t() const { return a; }
    Scalar e() const { return Scalar(Rational(norm)) * s; }
};

enum class PRegime { SplitAtP, InertAtP };

std::string regime_str(PRegime r);

// Chosen U_p-eigenvalues at p. Complementary roots obey
// alpha_p * beta_p = p^{m+1} per split slot and alpha * beta = p^{2m+2}
// in the inert case; numeric betas are derived, symbolic ones must be
// declared indeterminates.
struct RefinementData {
    PRegime regime = PRegime::SplitAtP;
    Scalar alpha1; // U_p eigenvalue (split: at p-first; inert: U_p)
    Scalar alpha2; // split only: U_{p^c} eigenvalue
    std::optional<Scalar> beta1, beta2; // symbolic-mode root symbols
    std::map<std::string, Rational> declared_valuations;
};

struct HilbertEigenPacket {
    QuadField field;
    HilbertWeight weight;
    long p = 0;
    std::map<PrimeIdealLabel, SatakeLocal> locals;
    RefinementData refinement;
    VarTableRef vars; // null in numeric mode
    bool symbolic() const { return vars != nullptr; }
};

// Diagnostics, empty iff every packet invariant holds. Never throws.
std::vector<std::string> validate_packet(const HilbertEigenPacket& pkt);

// c(l^r) by the Hecke recursion c(l^{r+1}) = a c(l^r) - e c(l^{r-1});
// equals the complete homogeneous symmetric polynomial h_r of the Satake
// roots.
Scalar eigenvalue_at_prime_power(const SatakeLocal& loc, long r);

// c(m O_K) by multiplicativity over the factorization of m O_K.
Scalar eigenvalue_at_mOK(const HilbertEigenPacket& pkt, long m);

// Betas complementary to the chosen refinement. Numeric mode divides by the
// norm relation; symbolic mode returns the declared companion symbol.
Scalar refinement_beta1(const RefinementData& ref, long p, long m);
Scalar refinement_beta2(const RefinementData& ref, long p, long m);

// Arithmetic normalization e_l = N(l)^{k-1} (parallel weight k, trivial
// character, level 1), the setting of the Asai Dirichlet series identity.
bool classical_level1_profile(const HilbertEigenPacket& pkt, long k);

} // namespace asai

#endif
