#ifndef ASAI_POWER_SERIES_HPP
#define ASAI_POWER_SERIES_HPP

#include <string>
#include <vector>

#include "asai/unipoly.hpp"

namespace asai {

// Truncated formal power series over Scalar, exact through X^order.
// Binary operations truncate to the smaller operand order; precision is
// never inflated.
class PowerSeries {
public:
    PowerSeries(std::vector<Scalar> coefficients, int order);

    static PowerSeries zero(int order);
    static PowerSeries one(int order);
    static PowerSeries from_poly(const UniPoly& p, int order);

    int order() const { return order_; }
    const Scalar& coeff(std::size_t i) const { return coeffs_.at(i); }
    const std::vector<Scalar>& coefficients() const { return coeffs_; }

    PowerSeries truncated(int order) const;

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);

    // Multiplicative inverse mod X^{order+1}. The constant term must carry a
    // nonzero rational value; a non-constant symbolic constant term is not a
    // unit of the coefficient ring and is rejected.
    PowerSeries inverse() const;

    friend bool operator==(const PowerSeries& a, const PowerSeries& b);
    friend bool operator!=(const PowerSeries& a, const PowerSeries& b) { return !(a == b); }

    std::string str(std::string_view var = "X") const;

private:
    std::vector<Scalar> coeffs_; // size order_ + 1
    int order_;
};

PowerSeries series_inverse(const PowerSeries& f);

} // namespace asai

#endif
