#include "asai/unipoly.hpp"

#include <sstream>

namespace asai {

UniPoly::UniPoly(std::vector<Scalar> coefficients) : coeffs_(std::move(coefficients)) {
    normalize();
}

void UniPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

UniPoly UniPoly::one() {
    return UniPoly({Scalar(1)});
}

UniPoly UniPoly::x() {
    return UniPoly({Scalar(0), Scalar(1)});
}

const Scalar& UniPoly::coeff(std::size_t i) const {
    static const Scalar zero(0);
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Scalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(0));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeff(i) + b.coeff(i);
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Scalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(0));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeff(i) - b.coeff(i);
    return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero())
        return UniPoly();
    std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(const Scalar& c) const {
    std::vector<Scalar> r(coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        r[i] = coeffs_[i] * c;
    return UniPoly(std::move(r));
}

bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.coeffs_.size() != b.coeffs_.size())
        return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        if (a.coeffs_[i] != b.coeffs_[i])
            return false;
    return true;
}

Scalar UniPoly::eval(const Scalar& x) const {
    Scalar r(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        r = r * x + *it;
    return r;
}

std::string UniPoly::str(std::string_view var, bool ascending) const {
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t step = 0; step < coeffs_.size(); ++step) {
        std::size_t k = ascending ? step : coeffs_.size() - 1 - step;
        const Scalar& c = coeffs_[k];
        if (c.is_zero())
            continue;
        std::string cs = c.str();
        bool single_term = cs.find(' ') == std::string::npos;
        bool negative = single_term && !cs.empty() && cs[0] == '-';
        if (first) {
            first = false;
            if (negative) {
                out << "-";
                cs = cs.substr(1);
            }
        } else {
            out << (negative ? " - " : " + ");
            if (negative)
                cs = cs.substr(1);
        }
        bool needs_parens = !single_term;
        if (k == 0) {
            out << (needs_parens ? "(" + cs + ")" : cs);
            continue;
        }
        if (cs == "1") {
            out << var;
        } else if (needs_parens) {
            out << "(" << cs << ")*" << var;
        } else {
            out << cs << "*" << var;
        }
        if (k > 1)
            out << "^" << k;
    }
    return out.str();
}

UniPoly poly_mul(const UniPoly& a, const UniPoly& b) {
    return a * b;
}

} // namespace asai
