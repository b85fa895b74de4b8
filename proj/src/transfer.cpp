#include "asai/transfer.hpp"

#include <stdexcept>

namespace asai {

std::string sign_str(TransferSign s) {
    return s == TransferSign::Plus ? "plus" : "minus";
}

GL4Local sigma_unramified_split(const SatakeLocal& first, const SatakeLocal& second, long ell) {
    if (first.label.ell != ell || second.label.ell != ell)
        throw std::invalid_argument("labels do not lie over l");
    if (first.label.slot == IdealSlot::Whole || second.label.slot == IdealSlot::Whole ||
        first.label.slot == second.label.slot)
        throw std::invalid_argument("split transfer needs the two slots First and Second");
    Rational lq(ell);
    GL4Local out;
    out.ell = ell;
    const Scalar &a = first.a, &s = first.s, &a2 = second.a, &s2 = second.s;
    out.t[0] = a * a2;
    out.t[1] = a * a * s2 + s * (a2 * a2) - Scalar(Rational(2 * lq)) * s * s2;
    out.t[2] = (a * s * a2 * s2) / Scalar(lq);
    out.t[3] = (s * s * s2 * s2) / Scalar(lq * lq);
    return out;
}

GL4Local sigma_unramified_inert(const SatakeLocal& whole, long ell, TransferSign sign) {
    if (whole.label.ell != ell || whole.label.slot != IdealSlot::Whole)
        throw std::invalid_argument("inert transfer needs the Whole label over l");
    Rational lq(ell);
    Scalar ts = whole.a * whole.s;
    GL4Local out;
    out.ell = ell;
    out.t[0] = sign == TransferSign::Plus ? whole.a : -whole.a;
    out.t[1] = Scalar(0);
    out.t[2] = sign == TransferSign::Plus ? -(ts / Scalar(lq)) : ts / Scalar(lq);
    out.t[3] = -((whole.s * whole.s) / Scalar(lq * lq));
    return out;
}

UniPoly asai_charpoly_local(const GL4Local& loc) {
    Rational lq(loc.ell);
    std::vector<Scalar> c(5, Scalar(0));
    c[4] = Scalar(1);
    c[3] = -loc.t[0];
    c[2] = loc.t[1] * Scalar(lq);
    c[1] = -(loc.t[2] * Scalar(rational_pow(lq, 3)));
    c[0] = loc.t[3] * Scalar(rational_pow(lq, 6));
    return UniPoly(std::move(c));
}

Scalar impose_norm_relations(const Scalar& value, const RefinementData& ref, long p, long m) {
    if (value.is_rational())
        return value;
    auto var_index = [&](const Scalar& s) -> std::optional<std::size_t> {
        if (!s.is_symbolic() || s.poly().term_count() != 1)
            return std::nullopt;
        const auto& [mono, coeff] = *s.poly().terms().begin();
        if (coeff != 1)
            return std::nullopt;
        std::optional<std::size_t> found;
        for (std::size_t i = 0; i < mono.size(); ++i) {
            if (mono[i] == 1 && !found)
                found = i;
            else if (mono[i] != 0)
                return std::nullopt;
        }
        return found;
    };
    MPoly poly = value.poly();
    auto reduce = [&](const Scalar& alpha, const std::optional<Scalar>& beta, long exponent) {
        if (!beta)
            return;
        auto i = var_index(alpha);
        auto j = var_index(*beta);
        if (i && j)
            poly = poly.reduce_pair(*i, *j, prime_power(p, exponent));
    };
    if (ref.regime == PRegime::SplitAtP) {
        reduce(ref.alpha1, ref.beta1, m + 1);
        reduce(ref.alpha2, ref.beta2, m + 1);
    } else {
        reduce(ref.alpha1, ref.beta1, 2 * m + 2);
    }
    return Scalar(std::move(poly));
}

GL4PPart sigma_p_split(const RefinementData& ref, long p, long m) {
    if (ref.regime != PRegime::SplitAtP)
        throw std::invalid_argument("split p-part requested for an inert-regime refinement");
    const Scalar& a1 = ref.alpha1;
    const Scalar& a2 = ref.alpha2;
    Scalar b1 = refinement_beta1(ref, p, m);
    Scalar b2 = refinement_beta2(ref, p, m);
    GL4PPart out;
    out.regime = ref.regime;
    out.u[0] = a1 * a2;
    out.u[1] = (a1 * a1 * a2 * b2) / Scalar(prime_power(p, 1));
    out.u[2] = (a1 * a1 * a2 * a2 * b1 * b2) / Scalar(prime_power(p, 3));
    out.u[3] = (a1 * a1 * a2 * a2 * b1 * b1 * b2 * b2) / Scalar(prime_power(p, 6));
    for (auto& value : out.u)
        value = impose_norm_relations(value, ref, p, m);
    out.controlling = impose_norm_relations(out.u[0] * out.u[1] * out.u[2], ref, p, m);
    return out;
}

GL4PPart sigma_p_inert(const RefinementData& ref, long p, long m, TransferSign sign) {
    if (ref.regime != PRegime::InertAtP)
        throw std::invalid_argument("inert p-part requested for a split-regime refinement");
    const Scalar& a = ref.alpha1;
    Scalar b = refinement_beta1(ref, p, m);
    bool plus = sign == TransferSign::Plus;
    GL4PPart out;
    out.regime = ref.regime;
    out.u[0] = plus ? a : -a;
    out.u[1] = (a * a * a * b) / Scalar(prime_power(p, 2));
    Scalar third = (a * a * b) / Scalar(prime_power(p, 3));
    out.u[2] = plus ? -third : third;
    out.u[3] = -((a * a * b * b) / Scalar(prime_power(p, 6)));
    for (auto& value : out.u)
        value = impose_norm_relations(value, ref, p, m);
    out.controlling = impose_norm_relations(out.u[0] * out.u[1] * out.u[2], ref, p, m);
    return out;
}

RefinementCharacter refinement_split(const RefinementData& ref, long p, long m) {
    if (ref.regime != PRegime::SplitAtP)
        throw std::invalid_argument("split refinement requested for an inert-regime refinement");
    Scalar b1 = refinement_beta1(ref, p, m);
    Scalar b2 = refinement_beta2(ref, p, m);
    RefinementCharacter out;
    out.regime = ref.regime;
    out.u[0] = ref.alpha1 * ref.alpha2;
    out.u[1] = (ref.alpha1 * b2) / Scalar(prime_power(p, 1));
    out.u[2] = (b1 * ref.alpha2) / Scalar(prime_power(p, 2));
    out.u[3] = (b1 * b2) / Scalar(prime_power(p, 3));
    return out;
}

RefinementCharacter refinement_inert(const RefinementData& ref, long p, long m, TransferSign sign) {
    if (ref.regime != PRegime::InertAtP)
        throw std::invalid_argument("inert refinement requested for a split-regime refinement");
    Scalar b = refinement_beta1(ref, p, m);
    bool plus = sign == TransferSign::Plus;
    RefinementCharacter out;
    out.regime = ref.regime;
    out.u[0] = plus ? ref.alpha1 : -ref.alpha1;
    out.u[1] = (ref.alpha1 * b) / Scalar(prime_power(p, 2));
    out.u[2] = Scalar(-prime_power(p, -1));
    Scalar last = b / Scalar(prime_power(p, 3));
    out.u[3] = plus ? last : -last;
    return out;
}

GL4EigenPacket transfer_eigenpacket(const HilbertEigenPacket& pkt, TransferSign sign) {
    auto violations = validate_packet(pkt);
    if (!violations.empty())
        throw std::invalid_argument("invalid packet: " + violations.front());
    if (pkt.weight.n1 == pkt.weight.n2)
        throw NonCohomologicalError();
    if (pkt.weight.n1 < pkt.weight.n2)
        throw std::domain_error("transfer needs n1 > n2");

    GL4EigenPacket out;
    out.sign = sign;
    out.weight = weight_map_j(pkt.weight);

    for (const auto& [label, loc] : pkt.locals) {
        long ell = label.ell;
        if (ell == pkt.p)
            continue;
        if (out.locals.count(ell))
            continue;
        switch (splitting_type(pkt.field, ell)) {
        case SplittingType::Split: {
            auto first = pkt.locals.find({ell, IdealSlot::First});
            auto second = pkt.locals.find({ell, IdealSlot::Second});
            if (first == pkt.locals.end() || second == pkt.locals.end())
                throw std::invalid_argument("missing Hecke data at the conjugate slot over " +
                                            std::to_string(ell));
            out.locals.emplace(ell, sigma_unramified_split(first->second, second->second, ell));
            break;
        }
        case SplittingType::Inert:
            out.locals.emplace(ell, sigma_unramified_inert(loc, ell, sign));
            break;
        case SplittingType::Ramified:
            throw std::invalid_argument("ramified prime " + std::to_string(ell) +
                                        " has no local transfer");
        }
    }

    long m = pkt.weight.m();
    out.ppart = pkt.refinement.regime == PRegime::SplitAtP
                    ? sigma_p_split(pkt.refinement, pkt.p, m)
                    : sigma_p_inert(pkt.refinement, pkt.p, m, sign);
    return out;
}

bool q_equivalent(const GL4EigenPacket& x, const GL4EigenPacket& y) {
    if (x.ppart.regime != y.ppart.regime)
        throw std::invalid_argument("q_equivalent: packets live over different p-regimes");
    if (x.locals.size() != y.locals.size())
        throw std::invalid_argument("q_equivalent: incomparable supports");
    for (const auto& [ell, loc] : x.locals) {
        auto it = y.locals.find(ell);
        if (it == y.locals.end())
            throw std::invalid_argument("q_equivalent: incomparable supports");
        for (int i = 0; i < 4; ++i)
            if (loc.t[i] != it->second.t[i])
                return false;
    }
    if (x.ppart.u[0] != y.ppart.u[0] || x.ppart.u[2] != y.ppart.u[2] ||
        x.ppart.u[3] != y.ppart.u[3])
        return false;
    if (x.ppart.regime == PRegime::InertAtP)
        return x.ppart.u[1] == y.ppart.u[1];
    return x.ppart.u[1] == y.ppart.u[1] || x.ppart.u[1] == -y.ppart.u[1];
}

Scalar star_eigenvalue(const HilbertEigenPacket& pkt, TransferSign sign) {
    long m = pkt.weight.m();
    long v1 = pkt.weight.v1, v2 = pkt.weight.v2;
    if (pkt.refinement.regime == PRegime::SplitAtP) {
        GL4PPart part = sigma_p_split(pkt.refinement, pkt.p, m);
        return part.controlling / Scalar(prime_power(pkt.p, 3 * m - 1 + 4 * v1 + 2 * v2));
    }
    GL4PPart part = sigma_p_inert(pkt.refinement, pkt.p, m, sign);
    return part.controlling / Scalar(prime_power(pkt.p, 4 * m - 1 + 6 * v1 + 2 * v2));
}

} // namespace asai
