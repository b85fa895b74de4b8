#include "asai/quad_field.hpp"

#include <stdexcept>

#include "asai/valuation.hpp"

namespace asai {

std::vector<std::pair<long, long>> factorize(long n) {
    if (n < 1)
        throw std::invalid_argument("factorize expects n >= 1");
    std::vector<std::pair<long, long>> factors;
    for (long p = 2; p <= n / p; ++p) {
        if (n % p)
            continue;
        long e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        factors.emplace_back(p, e);
    }
    if (n > 1)
        factors.emplace_back(n, 1);
    return factors;
}

QuadField make_quad_field(long d) {
    if (d <= 1)
        throw std::invalid_argument("real quadratic field needs squarefree d > 1");
    for (const auto& [p, e] : factorize(d))
        if (e > 1)
            throw std::invalid_argument("d = " + std::to_string(d) + " is not squarefree");
    QuadField field;
    field.d = d;
    field.discriminant = (d % 4 == 1) ? d : 4 * d;
    return field;
}

std::string splitting_str(SplittingType t) {
    switch (t) {
    case SplittingType::Split: return "split";
    case SplittingType::Inert: return "inert";
    case SplittingType::Ramified: return "ramified";
    }
    return "?";
}

int kronecker(long a, long n) {
    return mpz_kronecker_si(Integer(a).get_mpz_t(), n);
}

SplittingType splitting_type(const QuadField& field, long ell) {
    if (!is_prime(ell))
        throw std::invalid_argument("splitting_type: " + std::to_string(ell) + " is not prime");
    int symbol = kronecker(field.discriminant, ell);
    if (symbol == 0)
        return SplittingType::Ramified;
    return symbol == 1 ? SplittingType::Split : SplittingType::Inert;
}

std::string label_str(const PrimeIdealLabel& label) {
    switch (label.slot) {
    case IdealSlot::First: return std::to_string(label.ell) + "a";
    case IdealSlot::Second: return std::to_string(label.ell) + "b";
    case IdealSlot::Whole: return std::to_string(label.ell);
    }
    return "?";
}

long label_norm(const QuadField& field, const PrimeIdealLabel& label) {
    SplittingType type = splitting_type(field, label.ell);
    switch (type) {
    case SplittingType::Split:
        if (label.slot == IdealSlot::Whole)
            throw std::invalid_argument("split prime has no Whole slot");
        return label.ell;
    case SplittingType::Inert:
        if (label.slot != IdealSlot::Whole)
            throw std::invalid_argument("inert prime has only the Whole slot");
        return label.ell * label.ell;
    case SplittingType::Ramified:
        if (label.slot != IdealSlot::First)
            throw std::invalid_argument("ramified prime carries the single slot First");
        return label.ell;
    }
    throw std::logic_error("unreachable");
}

std::vector<PrimeIdealLabel> labels_above(const QuadField& field, long ell) {
    switch (splitting_type(field, ell)) {
    case SplittingType::Split:
        return {{ell, IdealSlot::First}, {ell, IdealSlot::Second}};
    case SplittingType::Inert:
        return {{ell, IdealSlot::Whole}};
    case SplittingType::Ramified:
        return {{ell, IdealSlot::First}};
    }
    return {};
}

IdealFactorization factor_rational_ideal(const QuadField& field, long m) {
    if (m < 1)
        throw std::invalid_argument("factor_rational_ideal expects m >= 1");
    IdealFactorization result;
    for (const auto& [p, e] : factorize(m)) {
        switch (splitting_type(field, p)) {
        case SplittingType::Split:
            result[{p, IdealSlot::First}] += e;
            result[{p, IdealSlot::Second}] += e;
            break;
        case SplittingType::Inert:
            result[{p, IdealSlot::Whole}] += e;
            break;
        case SplittingType::Ramified:
            result[{p, IdealSlot::First}] += 2 * e;
            break;
        }
    }
    return result;
}

Integer ideal_norm(const QuadField& field, const IdealFactorization& factors) {
    Integer norm(1);
    for (const auto& [label, e] : factors) {
        Integer base(label_norm(field, label));
        Integer power;
        mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
        norm *= power;
    }
    return norm;
}

long unit_norm(const QuadField& field, long x, long y, long w) {
    if (w != 1 && w != 2)
        throw std::invalid_argument("unit denominator must be 1 or 2");
    Integer raw = Integer(x) * x - Integer(field.d) * y * y; // w^2 * N(u)
    Integer den = Integer(w) * w;
    if (raw % den != 0)
        throw std::invalid_argument("not an algebraic integer of K");
    Integer n = raw / den;
    if (n != 1 && n != -1)
        throw std::invalid_argument("element is not a unit (norm " + n.get_str() + ")");
    return n == 1 ? 1 : -1;
}

} // namespace asai
