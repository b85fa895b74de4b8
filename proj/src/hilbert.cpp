#include "asai/hilbert.hpp"

#include <stdexcept>

#include "asai/valuation.hpp"

namespace asai {

std::vector<std::string> weight_violations(const HilbertWeight& w) {
    std::vector<std::string> out;
    if (w.n1 < 0 || w.n2 < 0)
        out.push_back("weight needs n1, n2 >= 0");
    if (w.n1 + 2 * w.v1 != w.n2 + 2 * w.v2)
        out.push_back("m mismatch: n1+2v1 = " + std::to_string(w.n1 + 2 * w.v1) +
                      " but n2+2v2 = " + std::to_string(w.n2 + 2 * w.v2));
    else if (((w.n1 - w.n2) % 2) != 0)
        out.push_back("parity violation: n1 and n2 differ mod 2");
    return out;
}

bool weight_valid(const HilbertWeight& w) {
    return weight_violations(w).empty();
}

std::string regime_str(PRegime r) {
    return r == PRegime::SplitAtP ? "split" : "inert";
}

namespace {

// single-variable degree-1 monomial with unit coefficient?
bool is_plain_symbol(const Scalar& s) {
    if (!s.is_symbolic() || s.poly().term_count() != 1)
        return false;
    const auto& [mono, coeff] = *s.poly().terms().begin();
    if (coeff != 1)
        return false;
    int total = 0;
    for (int e : mono)
        total += e;
    return total == 1;
}

void check_refinement_scalar(const HilbertEigenPacket& pkt, const Scalar& s,
                             const char* what, std::vector<std::string>& out) {
    if (s.is_rational()) {
        if (s.rational() == 0)
            out.push_back(std::string(what) + " must be nonzero");
        return;
    }
    if (!pkt.symbolic()) {
        out.push_back(std::string(what) + " is symbolic in a numeric packet");
        return;
    }
    if (!(*s.poly().table() == *pkt.vars)) {
        out.push_back(std::string(what) + " uses an indeterminate set different from the packet's");
        return;
    }
    if (!is_plain_symbol(s))
        out.push_back(std::string(what) + " must be a declared bare indeterminate");
}

} // namespace

std::vector<std::string> validate_packet(const HilbertEigenPacket& pkt) {
    std::vector<std::string> out = weight_violations(pkt.weight);

    if (pkt.field.d <= 1) {
        out.push_back("invalid field");
        return out;
    }
    if (!is_prime(pkt.p)) {
        out.push_back("p = " + std::to_string(pkt.p) + " is not prime");
        return out;
    }
    if (pkt.p == 2)
        out.push_back("p must be an odd prime");
    SplittingType p_type = splitting_type(pkt.field, pkt.p);
    if (p_type == SplittingType::Ramified)
        out.push_back("p = " + std::to_string(pkt.p) + " ramifies in K");
    else if (p_type == SplittingType::Split && pkt.refinement.regime != PRegime::SplitAtP)
        out.push_back("p splits in K but the refinement is inert-regime");
    else if (p_type == SplittingType::Inert && pkt.refinement.regime != PRegime::InertAtP)
        out.push_back("p is inert in K but the refinement is split-regime");

    for (const auto& [label, loc] : pkt.locals) {
        std::string where = "hecke data at " + label_str(label);
        if (!is_prime(label.ell)) {
            out.push_back(where + ": residue prime is not prime");
            continue;
        }
        SplittingType type = splitting_type(pkt.field, label.ell);
        if (type == SplittingType::Ramified) {
            out.push_back(where + ": ramified prime carries no Hecke data");
            continue;
        }
        if (type == SplittingType::Split && label.slot == IdealSlot::Whole)
            out.push_back(where + ": split prime labelled Whole");
        if (type == SplittingType::Inert && label.slot != IdealSlot::Whole)
            out.push_back(where + ": inert prime labelled " + label_str(label));
        if (loc.label != label)
            out.push_back(where + ": label mismatch");
        if (loc.norm != label_norm(pkt.field, label))
            out.push_back(where + ": wrong norm");
        for (const Scalar* s : {&loc.a, &loc.s}) {
            if (s->is_symbolic()) {
                if (!pkt.symbolic())
                    out.push_back(where + ": symbolic eigenvalue in a numeric packet");
                else if (!(*s->poly().table() == *pkt.vars))
                    out.push_back(where + ": foreign indeterminate set");
            }
        }
    }

    check_refinement_scalar(pkt, pkt.refinement.alpha1,
                            pkt.refinement.regime == PRegime::SplitAtP ? "alpha_p" : "alpha",
                            out);
    if (pkt.refinement.regime == PRegime::SplitAtP)
        check_refinement_scalar(pkt, pkt.refinement.alpha2, "alpha_pc", out);
    if (pkt.refinement.beta1)
        check_refinement_scalar(pkt, *pkt.refinement.beta1, "beta symbol", out);
    if (pkt.refinement.beta2)
        check_refinement_scalar(pkt, *pkt.refinement.beta2, "beta_pc symbol", out);

    if (pkt.symbolic()) {
        // distinct indeterminates per role: a bare symbol may not stand for
        // two different eigenvalues
        std::map<std::string, std::string> used;
        auto claim = [&](const Scalar& s, const std::string& role) {
            if (!is_plain_symbol(s) || !(*s.poly().table() == *pkt.vars))
                return;
            const auto& mono = s.poly().terms().begin()->first;
            for (std::size_t i = 0; i < mono.size(); ++i) {
                if (mono[i] != 1)
                    continue;
                auto [it, fresh] = used.emplace(pkt.vars->name(i), role);
                if (!fresh)
                    out.push_back("indeterminate '" + pkt.vars->name(i) + "' reused by " +
                                  it->second + " and " + role);
            }
        };
        for (const auto& [label, loc] : pkt.locals) {
            claim(loc.a, "a at " + label_str(label));
            claim(loc.s, "s at " + label_str(label));
        }
        claim(pkt.refinement.alpha1, "refinement alpha");
        if (pkt.refinement.regime == PRegime::SplitAtP)
            claim(pkt.refinement.alpha2, "refinement alpha_pc");
        if (pkt.refinement.beta1)
            claim(*pkt.refinement.beta1, "refinement beta");
        if (pkt.refinement.beta2)
            claim(*pkt.refinement.beta2, "refinement beta_pc");
    }
    return out;
}

Scalar eigenvalue_at_prime_power(const SatakeLocal& loc, long r) {
    if (r < 0)
        throw std::invalid_argument("negative prime power");
    Scalar prev(1); // c(l^0)
    if (r == 0)
        return prev;
    Scalar cur = loc.a; // c(l^1)
    Scalar e = loc.e();
    for (long i = 1; i < r; ++i) {
        Scalar next = loc.a * cur - e * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

Scalar eigenvalue_at_mOK(const HilbertEigenPacket& pkt, long m) {
    if (m < 1)
        throw std::invalid_argument("eigenvalue_at_mOK expects m >= 1");
    for (const auto& [p, e] : factorize(m))
        if (splitting_type(pkt.field, p) == SplittingType::Ramified)
            throw std::invalid_argument("ramified prime " + std::to_string(p) + " divides m");
    Scalar result(1);
    for (const auto& [label, r] : factor_rational_ideal(pkt.field, m)) {
        auto it = pkt.locals.find(label);
        if (it == pkt.locals.end())
            throw std::invalid_argument("missing Hecke data at " + label_str(label));
        result *= eigenvalue_at_prime_power(it->second, r);
    }
    return result;
}

namespace {

Scalar derived_beta(const Scalar& alpha, const std::optional<Scalar>& declared,
                    const Rational& product) {
    if (alpha.is_symbolic()) {
        if (!declared)
            throw std::invalid_argument("symbolic refinement needs a declared beta symbol");
        return *declared;
    }
    if (alpha.rational() == 0)
        throw std::invalid_argument("refinement eigenvalue is zero");
    return Scalar(Rational(product / alpha.rational()));
}

} // namespace

Scalar refinement_beta1(const RefinementData& ref, long p, long m) {
    long e = ref.regime == PRegime::SplitAtP ? m + 1 : 2 * m + 2;
    return derived_beta(ref.alpha1, ref.beta1, prime_power(p, e));
}

Scalar refinement_beta2(const RefinementData& ref, long p, long m) {
    if (ref.regime != PRegime::SplitAtP)
        throw std::invalid_argument("second refinement slot exists only at split p");
    return derived_beta(ref.alpha2, ref.beta2, prime_power(p, m + 1));
}

bool classical_level1_profile(const HilbertEigenPacket& pkt, long k) {
    if (k < 2)
        return false;
    for (const auto& [label, loc] : pkt.locals) {
        Scalar e = loc.e();
        if (!e.has_rational_value())
            return false;
        if (e.rational_value() != rational_pow(Rational(loc.norm), k - 1))
            return false;
    }
    return true;
}

} // namespace asai
