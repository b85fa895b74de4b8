#include "asai/valuation.hpp"

#include <stdexcept>

namespace asai {

bool is_prime(long n) {
    if (n < 2)
        return false;
    if (n < 4)
        return true;
    if (n % 2 == 0)
        return false;
    for (long d = 3; d <= n / d; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

namespace {

long remove_factor(Integer& z, const Integer& p) {
    Integer reduced;
    auto count = mpz_remove(reduced.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t());
    z = reduced;
    return static_cast<long>(count);
}

} // namespace

std::optional<long> padic_valuation(const Rational& x, long p) {
    if (!is_prime(p))
        throw std::invalid_argument("padic_valuation: " + std::to_string(p) + " is not prime");
    if (x == 0)
        return std::nullopt;
    Integer pz(p);
    Integer num = x.get_num();
    Integer den = x.get_den();
    long vnum = remove_factor(num, pz);
    long vden = remove_factor(den, pz);
    return vnum - vden;
}

std::optional<Rational> padic_valuation(const Scalar& x, long p,
                                        const std::map<std::string, Rational>& declared) {
    if (x.is_rational()) {
        auto v = padic_valuation(x.rational(), p);
        if (!v)
            return std::nullopt;
        return Rational(*v);
    }
    const MPoly& poly = x.poly();
    if (poly.is_zero())
        return std::nullopt;
    const VarTable& table = *poly.table();
    std::optional<Rational> best;
    for (const auto& [mono, coeff] : poly.terms()) {
        Rational v(*padic_valuation(coeff, p));
        for (std::size_t i = 0; i < mono.size(); ++i) {
            if (mono[i] == 0)
                continue;
            auto it = declared.find(table.name(i));
            if (it == declared.end())
                throw std::invalid_argument("undeclared symbolic valuation for '" +
                                            table.name(i) + "'");
            v += Rational(mono[i]) * it->second;
        }
        if (!best || v < *best)
            best = v;
    }
    return best;
}

} // namespace asai
