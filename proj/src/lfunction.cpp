#include "asai/lfunction.hpp"

#include <numeric>
#include <stdexcept>

#include "asai/valuation.hpp"

namespace asai {

LocalFactor local_euler_factor(const GL4Local& loc) {
    UniPoly charpoly = asai_charpoly_local(loc);
    std::vector<Scalar> reversed(5, Scalar(0));
    for (int i = 0; i <= 4; ++i)
        reversed[i] = charpoly.coeff(static_cast<std::size_t>(4 - i));
    return {loc.ell, UniPoly(std::move(reversed))};
}

namespace {

void require_profile(const HilbertEigenPacket& pkt, long ell, long k) {
    for (const auto& label : labels_above(pkt.field, ell)) {
        auto it = pkt.locals.find(label);
        if (it == pkt.locals.end())
            throw std::invalid_argument("missing Hecke data at " + label_str(label));
        Scalar e = it->second.e();
        if (!e.has_rational_value() ||
            e.rational_value() != rational_pow(Rational(it->second.norm), k - 1))
            throw std::invalid_argument("classical-level-1 profile violated at " +
                                        label_str(label) + " (need e = N^{k-1})");
    }
}

} // namespace

GL4Local transfer_local_at(const HilbertEigenPacket& pkt, long ell, TransferSign sign) {
    switch (splitting_type(pkt.field, ell)) {
    case SplittingType::Split: {
        auto first = pkt.locals.find({ell, IdealSlot::First});
        auto second = pkt.locals.find({ell, IdealSlot::Second});
        if (first == pkt.locals.end() || second == pkt.locals.end())
            throw std::invalid_argument("missing Hecke data over " + std::to_string(ell));
        return sigma_unramified_split(first->second, second->second, ell);
    }
    case SplittingType::Inert: {
        auto whole = pkt.locals.find({ell, IdealSlot::Whole});
        if (whole == pkt.locals.end())
            throw std::invalid_argument("missing Hecke data over " + std::to_string(ell));
        return sigma_unramified_inert(whole->second, ell, sign);
    }
    case SplittingType::Ramified:
        throw std::invalid_argument("no local factor at the ramified prime " +
                                    std::to_string(ell));
    }
    throw std::logic_error("unreachable");
}

namespace {

PowerSeries zeta_local_factor(long ell, long k, int order) {
    // (1 - l^{2k-2} X^2)^{-1}
    UniPoly f({Scalar(1), Scalar(0), Scalar(-rational_pow(Rational(ell), 2 * k - 2))});
    return PowerSeries::from_poly(f, order).inverse();
}

} // namespace

PowerSeries local_dirichlet_series(const HilbertEigenPacket& pkt, long ell, long k, int order) {
    if (splitting_type(pkt.field, ell) == SplittingType::Ramified)
        throw std::invalid_argument("ramified prime " + std::to_string(ell));
    require_profile(pkt, ell, k);
    std::vector<Scalar> c;
    c.reserve(static_cast<std::size_t>(order) + 1);
    for (int r = 0; r <= order; ++r) {
        Scalar value(1);
        for (const auto& label : labels_above(pkt.field, ell))
            value *= eigenvalue_at_prime_power(pkt.locals.at(label), r);
        c.push_back(value);
    }
    return PowerSeries(std::move(c), order) * zeta_local_factor(ell, k, order);
}

LocalIdentityResult local_identity_check(const HilbertEigenPacket& pkt, long ell, long k,
                                         int order, TransferSign sign) {
    PowerSeries lhs = local_dirichlet_series(pkt, ell, k, order);
    LocalFactor factor = local_euler_factor(transfer_local_at(pkt, ell, sign));
    PowerSeries rhs = PowerSeries::from_poly(factor.poly, order).inverse();
    for (int i = 0; i <= order; ++i)
        if (lhs.coeff(i) != rhs.coeff(i))
            return {false, i};
    return {true, -1};
}

DirichletPrefix global_dirichlet_coefficients(const HilbertEigenPacket& pkt, long k, long M) {
    if (M < 1)
        throw std::invalid_argument("truncation must be >= 1");
    DirichletPrefix out;
    out.truncation = M;
    for (long m = 1; m <= M; ++m) {
        if (std::gcd(m, pkt.field.discriminant) != 1)
            continue;
        Scalar b(0);
        for (long j = 1; j * j <= m; ++j) {
            if (m % (j * j))
                continue;
            Scalar zeta_coeff(rational_pow(Rational(j), 2 * k - 2));
            b += zeta_coeff * eigenvalue_at_mOK(pkt, m / (j * j));
        }
        out.b.emplace(m, std::move(b));
    }
    return out;
}

DirichletPrefix global_dirichlet_coefficients_euler(const HilbertEigenPacket& pkt, long k,
                                                    long M) {
    if (M < 1)
        throw std::invalid_argument("truncation must be >= 1");
    // expansions of (local factor)^{-1} per prime, to the order each can
    // contribute below M
    std::map<long, PowerSeries> expansions;
    for (long ell = 2; ell <= M; ++ell) {
        if (!is_prime(ell) || splitting_type(pkt.field, ell) == SplittingType::Ramified)
            continue;
        int order = 0;
        long power = ell;
        while (power <= M / ell) {
            power *= ell;
            ++order;
        }
        ++order;
        require_profile(pkt, ell, k);
        LocalFactor factor = local_euler_factor(transfer_local_at(pkt, ell, TransferSign::Plus));
        expansions.emplace(ell, PowerSeries::from_poly(factor.poly, order).inverse());
    }
    DirichletPrefix out;
    out.truncation = M;
    for (long m = 1; m <= M; ++m) {
        if (std::gcd(m, pkt.field.discriminant) != 1)
            continue;
        Scalar b(1);
        for (const auto& [p, e] : factorize(m))
            b *= expansions.at(p).coeff(static_cast<std::size_t>(e));
        out.b.emplace(m, std::move(b));
    }
    return out;
}

} // namespace asai
