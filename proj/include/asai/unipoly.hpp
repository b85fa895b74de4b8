#ifndef ASAI_UNIPOLY_HPP
#define ASAI_UNIPOLY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "asai/scalar.hpp"

namespace asai {

// Dense univariate polynomial over Scalar; coefficient i belongs to X^i.
// The leading coefficient is nonzero unless the polynomial is zero.
class UniPoly {
public:
    UniPoly() = default; // zero polynomial
    explicit UniPoly(std::vector<Scalar> coefficients);

    static UniPoly one();
    static UniPoly x();

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const Scalar& coeff(std::size_t i) const; // 0 beyond the degree
    const std::vector<Scalar>& coefficients() const { return coeffs_; }

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly scaled(const Scalar& c) const;

    friend bool operator==(const UniPoly& a, const UniPoly& b);
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    Scalar eval(const Scalar& x) const;

    // Highest power first by default; ascending = true starts at X^0 (the
    // usual shape for Euler factors).
    std::string str(std::string_view var = "X", bool ascending = false) const;

private:
    void normalize();
    std::vector<Scalar> coeffs_;
};

UniPoly poly_mul(const UniPoly& a, const UniPoly& b);

} // namespace asai

#endif
