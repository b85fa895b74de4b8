#ifndef ASAI_SCALAR_HPP
#define ASAI_SCALAR_HPP

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "asai/rational.hpp"

namespace asai {

// Ordered set of indeterminate names, fixed for a computation session.
// Silent creation of new indeterminates is forbidden: every symbol must be
// declared here before use.
class VarTable {
public:
    explicit VarTable(std::vector<std::string> names);

    std::size_t size() const noexcept { return names_.size(); }
    std::size_t index_of(std::string_view name) const; // throws if unknown
    bool contains(std::string_view name) const noexcept;
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const noexcept { return names_; }

    friend bool operator==(const VarTable& a, const VarTable& b) noexcept {
        return a.names_ == b.names_;
    }

private:
    std::vector<std::string> names_;
    std::map<std::string, std::size_t, std::less<>> index_;
};

using VarTableRef = std::shared_ptr<const VarTable>;

VarTableRef make_vars(std::vector<std::string> names);

// Sparse multivariate polynomial over Rational with a fixed indeterminate
// set. Exponents are nonnegative; zero coefficients are never stored.
class MPoly {
public:
    using Mono = std::vector<int>; // exponent per table slot

    static MPoly zero(VarTableRef table);
    static MPoly constant(VarTableRef table, const Rational& c);
    static MPoly variable(VarTableRef table, std::string_view name);
    static MPoly monomial(VarTableRef table, Mono exponents, const Rational& c);

    const VarTableRef& table() const noexcept { return table_; }
    const std::map<Mono, Rational>& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    Rational constant_term() const;
    std::size_t term_count() const noexcept { return terms_.size(); }
    long total_degree() const; // -1 for the zero polynomial

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);

    MPoly scaled(const Rational& c) const;
    MPoly pow(long e) const; // e >= 0

    friend bool operator==(const MPoly& a, const MPoly& b);

    Rational eval(const std::vector<Rational>& point) const;

    // Impose x_i * x_j = value: every monomial divisible by x_i*x_j loses
    // one such pair per step and gains a factor of value. Normal form of
    // the quotient by the binomial ideal (x_i x_j - value).
    MPoly reduce_pair(std::size_t i, std::size_t j, const Rational& value) const;

    std::string str() const;

private:
    MPoly() = default;
    void add_term(const Mono& m, const Rational& c);
    static void check_compatible(const MPoly& a, const MPoly& b);

    VarTableRef table_;
    std::map<Mono, Rational> terms_;
};

// Exact scalar: an arbitrary-precision rational or a sparse multivariate
// polynomial. Mixed arithmetic promotes the rational side to a constant
// polynomial; two symbolic operands must share the indeterminate set.
class Scalar {
public:
    Scalar() : value_(Rational(0)) {}
    Scalar(Rational q) : value_(std::move(q)) {}
    Scalar(long n) : value_(Rational(n)) {}
    Scalar(int n) : value_(Rational(n)) {}
    Scalar(MPoly p) : value_(std::move(p)) {}

    bool is_rational() const noexcept { return std::holds_alternative<Rational>(value_); }
    bool is_symbolic() const noexcept { return !is_rational(); }

    const Rational& rational() const;
    const MPoly& poly() const;
    VarTableRef table() const; // null for rational mode

    bool is_zero() const;
    // True in rational mode and for constant polynomials.
    bool has_rational_value() const;
    Rational rational_value() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    // Division by a scalar with a nonzero rational value only.
    friend Scalar operator/(const Scalar& a, const Scalar& b);

    Scalar pow(long e) const; // e < 0 requires a nonzero rational value

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string str() const;

private:
    std::variant<Rational, MPoly> value_;
};

Scalar sym(VarTableRef table, std::string_view name);

} // namespace asai

#endif
