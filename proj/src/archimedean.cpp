#include "asai/archimedean.hpp"

#include <algorithm>
#include <stdexcept>

namespace asai {

std::vector<ExponentPair> parameter_of_component(long n_i, long v_i) {
    Rational u = Rational(1, 2) - v_i;
    Rational v = Rational(-n_i - v_i) - Rational(1, 2);
    return {{u, v}, {v, u}};
}

std::vector<ExponentPair> asai_parameter(const HilbertWeight& kappa, bool normalized) {
    long n1 = kappa.n1, n2 = kappa.n2;
    long vs = kappa.v1 + kappa.v2;
    Rational shift = normalized ? Rational(1, 2) : Rational(0);
    auto pair = [&](Rational u, Rational v) {
        return ExponentPair{u + shift, v + shift};
    };
    std::vector<ExponentPair> out;
    out.push_back(pair(Rational(1 - vs), Rational(-n1 - n2 - vs - 1)));
    out.push_back(pair(Rational(-n1 - n2 - vs - 1), Rational(1 - vs)));
    out.push_back(pair(Rational(-n2 - vs), Rational(-n1 - vs)));
    out.push_back(pair(Rational(-n1 - vs), Rational(-n2 - vs)));
    return out;
}

std::vector<HodgeType> hodge_types_asai(const HilbertWeight& kappa) {
    long n1 = kappa.n1, n2 = kappa.n2;
    long vs = kappa.v1 + kappa.v2;
    return {
        {n1 + n2 + vs + 2, vs},
        {n1 + 1 + vs, n2 + 1 + vs},
        {n2 + 1 + vs, n1 + 1 + vs},
        {vs, n1 + n2 + vs + 2},
    };
}

bool has_middle_hodge_type(const HilbertWeight& kappa) {
    for (const auto& h : hodge_types_asai(kappa))
        if (h.p == h.q)
            return true;
    return false;
}

GL4Weight mu_from_infinity(const HilbertWeight& kappa) {
    if (kappa.n1 == kappa.n2)
        throw NonCohomologicalError();
    auto params = asai_parameter(kappa, true);
    std::vector<Rational> firsts;
    firsts.reserve(params.size());
    for (const auto& [u, v] : params)
        firsts.push_back(u);
    std::sort(firsts.begin(), firsts.end(), std::greater<>());

    const long rho[4] = {3, 2, 1, 0};
    long mu[4];
    for (int i = 0; i < 4; ++i) {
        Rational value = Rational(3, 2) - rho[i] - firsts[3 - i];
        if (!is_integer(value))
            throw std::domain_error("normalized parameter does not give an integral weight");
        mu[i] = value.get_num().get_si();
    }
    GL4Weight out;
    out.mu1 = mu[0];
    out.mu2 = mu[1];
    out.mu3 = mu[2];
    out.mu4 = mu[3];
    out.w = mu[0] + mu[3];
    return out;
}

} // namespace asai
