#include "asai/scalar.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace asai {

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty())
        throw std::invalid_argument("indeterminate set must be nonempty");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty())
            throw std::invalid_argument("empty indeterminate name");
        if (!index_.emplace(names_[i], i).second)
            throw std::invalid_argument("duplicate indeterminate '" + names_[i] + "'");
    }
}

std::size_t VarTable::index_of(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        throw std::invalid_argument("unknown indeterminate '" + std::string(name) + "'");
    return it->second;
}

bool VarTable::contains(std::string_view name) const noexcept {
    return index_.find(name) != index_.end();
}

VarTableRef make_vars(std::vector<std::string> names) {
    return std::make_shared<const VarTable>(std::move(names));
}

// ---------------------------------------------------------------------------
// MPoly

MPoly MPoly::zero(VarTableRef table) {
    if (!table)
        throw std::invalid_argument("null indeterminate table");
    MPoly p;
    p.table_ = std::move(table);
    return p;
}

MPoly MPoly::constant(VarTableRef table, const Rational& c) {
    MPoly p = zero(std::move(table));
    if (c != 0)
        p.terms_.emplace(Mono(p.table_->size(), 0), c);
    return p;
}

MPoly MPoly::variable(VarTableRef table, std::string_view name) {
    MPoly p = zero(std::move(table));
    Mono m(p.table_->size(), 0);
    m[p.table_->index_of(name)] = 1;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

MPoly MPoly::monomial(VarTableRef table, Mono exponents, const Rational& c) {
    MPoly p = zero(std::move(table));
    if (exponents.size() != p.table_->size())
        throw std::invalid_argument("exponent vector length mismatch");
    for (int e : exponents)
        if (e < 0)
            throw std::invalid_argument("negative exponent");
    if (c != 0)
        p.terms_.emplace(std::move(exponents), c);
    return p;
}

bool MPoly::is_constant() const noexcept {
    if (terms_.empty())
        return true;
    if (terms_.size() > 1)
        return false;
    const Mono& m = terms_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
}

Rational MPoly::constant_term() const {
    Mono zero_mono(table_->size(), 0);
    auto it = terms_.find(zero_mono);
    return it == terms_.end() ? Rational(0) : it->second;
}

long MPoly::total_degree() const {
    long deg = -1;
    for (const auto& [m, c] : terms_) {
        long d = 0;
        for (int e : m)
            d += e;
        deg = std::max(deg, d);
    }
    return deg;
}

void MPoly::add_term(const Mono& m, const Rational& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void MPoly::check_compatible(const MPoly& a, const MPoly& b) {
    if (a.table_ == b.table_)
        return;
    if (!a.table_ || !b.table_ || !(*a.table_ == *b.table_))
        throw std::invalid_argument("mismatched indeterminate sets");
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [m, c] : r.terms_)
        c = -c;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    check_compatible(*this, o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    check_compatible(*this, o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly::check_compatible(a, b);
    MPoly r = MPoly::zero(a.table_);
    MPoly::Mono m(a.table_->size());
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i)
                m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

MPoly& MPoly::operator*=(const MPoly& o) {
    *this = *this * o;
    return *this;
}

MPoly MPoly::scaled(const Rational& c) const {
    MPoly r = zero(table_);
    if (c == 0)
        return r;
    for (const auto& [m, coeff] : terms_)
        r.terms_.emplace(m, coeff * c);
    return r;
}

MPoly MPoly::pow(long e) const {
    if (e < 0)
        throw std::invalid_argument("negative polynomial power");
    MPoly r = constant(table_, Rational(1));
    MPoly base = *this;
    while (e > 0) {
        if (e & 1)
            r *= base;
        e >>= 1;
        if (e > 0)
            base *= base;
    }
    return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
    if (!(a.table_ == b.table_) && !(*a.table_ == *b.table_))
        return false;
    return a.terms_ == b.terms_;
}

Rational MPoly::eval(const std::vector<Rational>& point) const {
    if (point.size() != table_->size())
        throw std::invalid_argument("evaluation point length mismatch");
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0)
                term *= rational_pow(point[i], m[i]);
        total += term;
    }
    return total;
}

MPoly MPoly::reduce_pair(std::size_t i, std::size_t j, const Rational& value) const {
    if (i >= table_->size() || j >= table_->size() || i == j)
        throw std::invalid_argument("bad reduction pair");
    MPoly r = zero(table_);
    for (const auto& [m, c] : terms_) {
        int k = std::min(m[i], m[j]);
        if (k == 0) {
            r.add_term(m, c);
            continue;
        }
        Mono reduced = m;
        reduced[i] -= k;
        reduced[j] -= k;
        r.add_term(reduced, c * rational_pow(value, k));
    }
    return r;
}

std::string MPoly::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    // highest exponent vector first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0)
                out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::string mono;
        for (std::size_t v = 0; v < m.size(); ++v) {
            if (m[v] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += table_->name(v);
            if (m[v] > 1)
                mono += "^" + std::to_string(m[v]);
        }
        if (mono.empty()) {
            out << rational_str(abs_c);
        } else if (abs_c == 1) {
            out << mono;
        } else {
            out << rational_str(abs_c) << "*" << mono;
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Scalar

const Rational& Scalar::rational() const {
    if (!is_rational())
        throw std::logic_error("scalar is symbolic");
    return std::get<Rational>(value_);
}

const MPoly& Scalar::poly() const {
    if (is_rational())
        throw std::logic_error("scalar is rational");
    return std::get<MPoly>(value_);
}

VarTableRef Scalar::table() const {
    return is_rational() ? nullptr : poly().table();
}

bool Scalar::is_zero() const {
    return is_rational() ? rational() == 0 : poly().is_zero();
}

bool Scalar::has_rational_value() const {
    return is_rational() || poly().is_constant();
}

Rational Scalar::rational_value() const {
    if (is_rational())
        return rational();
    if (!poly().is_constant())
        throw std::logic_error("scalar has no rational value");
    return poly().constant_term();
}

Scalar Scalar::operator-() const {
    if (is_rational())
        return Scalar(Rational(-rational()));
    return Scalar(-poly());
}

namespace {

MPoly promote_to(const Scalar& s, const VarTableRef& table) {
    if (s.is_rational())
        return MPoly::constant(table, s.rational());
    return s.poly();
}

template <typename RatOp, typename PolyOp>
Scalar binop(const Scalar& a, const Scalar& b, RatOp rop, PolyOp pop) {
    if (a.is_rational() && b.is_rational())
        return Scalar(rop(a.rational(), b.rational()));
    VarTableRef table = a.is_symbolic() ? a.table() : b.table();
    return Scalar(pop(promote_to(a, table), promote_to(b, table)));
}

} // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
    *this = binop(*this, o,
                  [](const Rational& x, const Rational& y) { return Rational(x + y); },
                  [](const MPoly& x, const MPoly& y) { return x + y; });
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    *this = binop(*this, o,
                  [](const Rational& x, const Rational& y) { return Rational(x - y); },
                  [](const MPoly& x, const MPoly& y) { return x - y; });
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    *this = binop(*this, o,
                  [](const Rational& x, const Rational& y) { return Rational(x * y); },
                  [](const MPoly& x, const MPoly& y) { return x * y; });
    return *this;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (!b.has_rational_value())
        throw std::domain_error("division by a non-constant symbolic scalar");
    Rational d = b.rational_value();
    if (d == 0)
        throw std::domain_error("division by zero");
    Rational inv = Rational(1) / d;
    if (a.is_rational())
        return Scalar(Rational(a.rational() * inv));
    return Scalar(a.poly().scaled(inv));
}

Scalar Scalar::pow(long e) const {
    if (e >= 0) {
        if (is_rational())
            return Scalar(rational_pow(rational(), e));
        return Scalar(poly().pow(e));
    }
    return Scalar(rational_pow(rational_value(), e));
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.is_rational() && b.is_rational())
        return a.rational() == b.rational();
    if (a.is_rational())
        return b.poly().is_constant() && b.poly().constant_term() == a.rational();
    if (b.is_rational())
        return a.poly().is_constant() && a.poly().constant_term() == b.rational();
    const MPoly& pa = a.poly();
    const MPoly& pb = b.poly();
    if (!(*pa.table() == *pb.table()))
        return pa.is_constant() && pb.is_constant() &&
               pa.constant_term() == pb.constant_term();
    return pa == pb;
}

std::string Scalar::str() const {
    return is_rational() ? rational_str(rational()) : poly().str();
}

Scalar sym(VarTableRef table, std::string_view name) {
    return Scalar(MPoly::variable(std::move(table), name));
}

} // namespace asai
