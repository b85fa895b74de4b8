#include "asai/weights.hpp"

#include <algorithm>

#include "asai/valuation.hpp"

namespace asai {

PurityDominanceReport purity_dominance_check(const GL4Weight& mu) {
    PurityDominanceReport report;
    report.pure = (mu.mu1 + mu.mu4 == mu.mu2 + mu.mu3) && (mu.mu1 + mu.mu4 == mu.w);
    if (!report.pure)
        report.failures.push_back("impure: mu1+mu4 = " + std::to_string(mu.mu1 + mu.mu4) +
                                  ", mu2+mu3 = " + std::to_string(mu.mu2 + mu.mu3) +
                                  ", w = " + std::to_string(mu.w));
    report.dominant = mu.mu1 >= mu.mu2 && mu.mu2 >= mu.mu3 && mu.mu3 >= mu.mu4;
    if (!report.dominant)
        report.failures.push_back("not dominant");
    report.regular = mu.mu1 > mu.mu2 && mu.mu2 > mu.mu3 && mu.mu3 > mu.mu4;
    if (report.dominant && !report.regular)
        report.failures.push_back("dominant but not regular (tied entries)");
    return report;
}

SlopeContext slope_context(PRegime regime) {
    SlopeContext ctx;
    ctx.regime = regime;
    ctx.c = regime == PRegime::SplitAtP ? std::array<long, 4>{0, 1, 2, 3}
                                        : std::array<long, 4>{0, 1, 3, 4};
    return ctx;
}

GL4Weight weight_map_j(const HilbertWeight& kappa) {
    if (((kappa.n1 + kappa.n2) % 2 + 2) % 2 != 0)
        throw std::domain_error("weight map needs n1 = n2 mod 2 (mu would not be integral)");
    long m = kappa.m();
    long half_sum = (kappa.n1 + kappa.n2) / 2;
    long half_diff = (kappa.n1 - kappa.n2) / 2;
    GL4Weight mu;
    mu.mu1 = half_sum + m - 1;
    mu.mu2 = half_diff + m - 1;
    mu.mu3 = m - half_diff;
    mu.mu4 = m - half_sum;
    mu.w = 2 * m - 1;
    return mu;
}

Rational weyl_slope_bound_bruteforce(const GL4Weight& mu, const SlopeContext& ctx) {
    if (!purity_dominance_check(mu).dominant)
        throw std::domain_error("slope bound needs a dominant weight");
    std::array<long, 4> lambda{};
    auto m = mu.mu();
    for (int i = 0; i < 4; ++i)
        lambda[i] = m[i] + ctx.rho[i];
    std::array<int, 4> q{0, 1, 2, 3}; // runs over w^{-1} for all w in S4
    std::optional<long> best;
    do {
        if (q == std::array<int, 4>{0, 1, 2, 3})
            continue;
        long cost = 0;
        for (int i = 0; i < 4; ++i)
            cost += ctx.c[i] * (lambda[q[i]] - lambda[i]);
        if (!best || cost < *best)
            best = cost;
    } while (std::next_permutation(q.begin(), q.end()));
    return Rational(*best);
}

Rational small_slope_closed_form(const HilbertWeight& kappa, PRegime regime) {
    if (kappa.n1 <= kappa.n2 || kappa.n2 < 0)
        throw std::domain_error("closed-form slope needs n1 > n2 >= 0");
    long diff = kappa.n1 - kappa.n2;
    long h = regime == PRegime::SplitAtP ? std::min(diff, kappa.n2 + 1)
                                         : std::min(kappa.n2 + 1, 2 * diff);
    return Rational(h);
}

Rational classicality_threshold(long n1, long n2, PRegime regime) {
    if (n1 <= n2 || n2 < 0)
        throw std::domain_error("classicality threshold needs n1 > n2 >= 0");
    if (regime == PRegime::SplitAtP)
        return Rational(std::min(n1 - n2, n2 + 1));
    return std::min(Rational(n2 + 1) / 4, Rational(n1 - n2) / 2);
}

ClassicalityReport classicality_check(const HilbertEigenPacket& pkt) {
    const RefinementData& ref = pkt.refinement;
    ClassicalityReport report;
    report.regime = ref.regime;
    report.threshold = classicality_threshold(pkt.weight.n1, pkt.weight.n2, ref.regime);
    Scalar tested = ref.regime == PRegime::SplitAtP
                        ? ref.alpha1.pow(4) * ref.alpha2.pow(2)
                        : ref.alpha1;
    auto v = padic_valuation(tested, pkt.p, ref.declared_valuations);
    if (!v)
        throw std::invalid_argument("refinement eigenvalue is zero");
    report.valuation = *v;
    report.classical = report.valuation < report.threshold;
    return report;
}

bool classical_weight_membership(const HilbertWeight& kappa, PRegime regime) {
    if (!(kappa.n1 > kappa.n2 && kappa.n2 >= 0))
        return false;
    long condition = regime == PRegime::SplitAtP ? 2 * kappa.v1 + kappa.v2
                                                 : 3 * kappa.v1 + kappa.v2;
    return condition == 0;
}

bool weight_unit_condition(const HilbertWeight& kappa, long fundamental_unit_norm) {
    if (fundamental_unit_norm != 1 && fundamental_unit_norm != -1)
        throw std::invalid_argument("unit norm must be +-1");
    return fundamental_unit_norm == 1 || kappa.m() % 2 == 0;
}

} // namespace asai
