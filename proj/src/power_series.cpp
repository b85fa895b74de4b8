#include "asai/power_series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace asai {

PowerSeries::PowerSeries(std::vector<Scalar> coefficients, int order)
    : coeffs_(std::move(coefficients)), order_(order) {
    if (order_ < 0)
        throw std::invalid_argument("negative truncation order");
    coeffs_.resize(static_cast<std::size_t>(order_) + 1, Scalar(0));
}

PowerSeries PowerSeries::zero(int order) {
    return PowerSeries({}, order);
}

PowerSeries PowerSeries::one(int order) {
    return PowerSeries({Scalar(1)}, order);
}

PowerSeries PowerSeries::from_poly(const UniPoly& p, int order) {
    std::vector<Scalar> c;
    c.reserve(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i <= order; ++i)
        c.push_back(p.coeff(static_cast<std::size_t>(i)));
    return PowerSeries(std::move(c), order);
}

PowerSeries PowerSeries::truncated(int order) const {
    if (order > order_)
        throw std::invalid_argument("cannot extend series precision");
    std::vector<Scalar> c(coeffs_.begin(), coeffs_.begin() + order + 1);
    return PowerSeries(std::move(c), order);
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    int order = std::min(a.order_, b.order_);
    std::vector<Scalar> c(static_cast<std::size_t>(order) + 1, Scalar(0));
    for (int i = 0; i <= order; ++i)
        c[i] = a.coeffs_[i] + b.coeffs_[i];
    return PowerSeries(std::move(c), order);
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    int order = std::min(a.order_, b.order_);
    std::vector<Scalar> c(static_cast<std::size_t>(order) + 1, Scalar(0));
    for (int i = 0; i <= order; ++i)
        c[i] = a.coeffs_[i] - b.coeffs_[i];
    return PowerSeries(std::move(c), order);
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    int order = std::min(a.order_, b.order_);
    std::vector<Scalar> c(static_cast<std::size_t>(order) + 1, Scalar(0));
    for (int i = 0; i <= order; ++i)
        for (int j = 0; i + j <= order; ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return PowerSeries(std::move(c), order);
}

PowerSeries PowerSeries::inverse() const {
    const Scalar& c0 = coeffs_[0];
    if (!c0.has_rational_value() || c0.is_zero())
        throw std::domain_error("series constant term is not invertible");
    Scalar inv0 = Scalar(1) / c0;
    std::vector<Scalar> g(coeffs_.size(), Scalar(0));
    g[0] = inv0;
    for (std::size_t n = 1; n < g.size(); ++n) {
        Scalar acc(0);
        for (std::size_t i = 1; i <= n; ++i)
            acc += coeffs_[i] * g[n - i];
        g[n] = -(acc * inv0);
    }
    return PowerSeries(std::move(g), order_);
}

bool operator==(const PowerSeries& a, const PowerSeries& b) {
    if (a.order_ != b.order_)
        return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        if (a.coeffs_[i] != b.coeffs_[i])
            return false;
    return true;
}

std::string PowerSeries::str(std::string_view var) const {
    std::ostringstream out;
    bool wrote = false;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero())
            continue;
        if (wrote)
            out << " + ";
        wrote = true;
        std::string cs = coeffs_[k].str();
        bool parens = cs.find(' ') != std::string::npos;
        if (k == 0) {
            out << (parens ? "(" + cs + ")" : cs);
            continue;
        }
        if (cs == "1")
            out << var;
        else
            out << (parens ? "(" + cs + ")" : cs) << "*" << var;
        if (k > 1)
            out << "^" << k;
    }
    if (!wrote)
        out << "0";
    out << " + O(" << var << "^" << (order_ + 1) << ")";
    return out.str();
}

PowerSeries series_inverse(const PowerSeries& f) {
    return f.inverse();
}

} // namespace asai
