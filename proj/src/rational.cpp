#include "asai/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace asai {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text) {
    if (text.empty())
        throw std::invalid_argument("empty rational literal");
    std::size_t pos = 0;
    auto scan_int = [&](bool sign_allowed) {
        std::size_t start = pos;
        if (sign_allowed && pos < text.size() && text[pos] == '-')
            ++pos;
        std::size_t digits = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            ++digits;
        }
        if (digits == 0)
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        return std::string(text.substr(start, pos - start));
    };
    std::string num = scan_int(true);
    std::string den = "1";
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = scan_int(false);
    }
    if (pos != text.size())
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    return make_rational(Integer(num), Integer(den));
}

std::string rational_str(const Rational& q) {
    return q.get_str();
}

Rational rational_pow(const Rational& base, long e) {
    if (e == 0)
        return Rational(1);
    if (base == 0) {
        if (e < 0)
            throw std::domain_error("negative power of zero");
        return Rational(0);
    }
    bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), k);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), k);
    // powers of a canonical rational stay canonical
    if (invert) {
        if (sgn(r) < 0)
            return Rational(-r.get_den(), -r.get_num());
        return Rational(r.get_den(), r.get_num());
    }
    return r;
}

Rational prime_power(long p, long e) {
    return rational_pow(Rational(p), e);
}

bool is_integer(const Rational& q) {
    return q.get_den() == 1;
}

} // namespace asai
