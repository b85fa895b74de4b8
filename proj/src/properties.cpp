#include "asai/properties.hpp"

#include <functional>
#include <numeric>
#include <sstream>

#include "asai/archimedean.hpp"
#include "asai/lfunction.hpp"
#include "asai/packet_io.hpp"
#include "asai/reference.hpp"
#include "asai/rng.hpp"
#include "asai/transfer.hpp"
#include "asai/valuation.hpp"
#include "asai/weights.hpp"

namespace asai {

namespace {

using CheckFn = std::function<std::string(Rng&, int)>; // empty string = pass

std::string fail(const std::string& detail) {
    return detail.empty() ? "failed" : detail;
}

SatakeLocal make_local(long ell, IdealSlot slot, long norm, Scalar a, Scalar s) {
    SatakeLocal loc;
    loc.label = {ell, slot};
    loc.norm = norm;
    loc.a = std::move(a);
    loc.s = std::move(s);
    return loc;
}

// ---------------------------------------------------------------------------

std::string check_ring_axioms_rational(Rng& rng, int trials) {
    for (int t = 0; t < trials; ++t) {
        Rational a = rng.rational(), b = rng.rational(), c = rng.rational();
        if ((a + b) + c != a + (b + c))
            return fail("associativity of +");
        if ((a * b) * c != a * (b * c))
            return fail("associativity of *");
        if (a * (b + c) != a * b + a * c)
            return fail("distributivity");
        if (a + (-a) != 0)
            return fail("additive inverse");
        Rational d = rng.nonzero_rational();
        if ((a / d) * d != a)
            return fail("exact division");
    }
    return {};
}

MPoly random_poly(Rng& rng, const VarTableRef& vars, int max_terms = 4, int max_exp = 3) {
    MPoly p = MPoly::zero(vars);
    int terms = static_cast<int>(rng.range(0, max_terms));
    for (int i = 0; i < terms; ++i) {
        MPoly::Mono mono(vars->size(), 0);
        for (auto& e : mono)
            e = static_cast<int>(rng.range(0, max_exp));
        p += MPoly::monomial(vars, mono, rng.rational(9));
    }
    return p;
}

std::string check_ring_axioms_mpoly(Rng& rng, int trials) {
    VarTableRef vars = make_vars({"x", "y", "z"});
    for (int t = 0; t < trials; ++t) {
        MPoly a = random_poly(rng, vars);
        MPoly b = random_poly(rng, vars);
        MPoly c = random_poly(rng, vars);
        if (!((a + b) + c == a + (b + c)))
            return fail("associativity of +");
        if (!((a * b) * c == a * (b * c)))
            return fail("associativity of *");
        if (!(a * (b + c) == a * b + a * c))
            return fail("distributivity");
        if (!(a * b == b * a))
            return fail("commutativity");
        if (!(a + (-a) == MPoly::zero(vars)))
            return fail("additive inverse");
        // evaluation is a ring homomorphism
        std::vector<Rational> point{rng.rational(5), rng.rational(5), rng.rational(5)};
        if ((a * b + c).eval(point) != a.eval(point) * b.eval(point) + c.eval(point))
            return fail("evaluation homomorphism");
    }
    return {};
}

std::string check_series_inverse(Rng& rng, int trials) {
    for (int t = 0; t < trials; ++t) {
        int order = static_cast<int>(rng.range(0, 32));
        std::vector<Scalar> coeffs;
        coeffs.emplace_back(Rational(1));
        for (int i = 1; i <= order; ++i)
            coeffs.emplace_back(rng.rational(9));
        PowerSeries f(std::move(coeffs), order);
        PowerSeries product = f * f.inverse();
        if (product != PowerSeries::one(order))
            return fail("f * inverse(f) != 1 at order " + std::to_string(order));
    }
    return {};
}

std::string check_valuation_laws(Rng& rng, int trials) {
    const std::vector<long> primes{2, 3, 5, 7, 11, 13};
    for (int t = 0; t < trials; ++t) {
        long p = rng.pick(primes);
        Rational a = rng.nonzero_rational(200);
        Rational b = rng.nonzero_rational(200);
        long va = *padic_valuation(a, p);
        long vb = *padic_valuation(b, p);
        if (*padic_valuation(a * b, p) != va + vb)
            return fail("v(ab) != v(a)+v(b)");
        Rational sum = a + b;
        auto vsum = padic_valuation(sum, p);
        long lower = std::min(va, vb);
        if (vsum && *vsum < lower)
            return fail("v(a+b) < min(v(a), v(b))");
        if (va != vb && (!vsum || *vsum != lower))
            return fail("v(a+b) != min when valuations differ");
    }
    if (padic_valuation(Rational(0), 7))
        return fail("v_p(0) must be infinite");
    return {};
}

// ---------------------------------------------------------------------------

std::array<Scalar, 5> ascending_coeffs(const UniPoly& p) {
    std::array<Scalar, 5> out;
    for (int i = 0; i <= 4; ++i)
        out[i] = p.coeff(static_cast<std::size_t>(i));
    return out;
}

std::string check_split_tensor(Rng& rng, int trials) {
    const std::vector<long> ells{2, 3, 5, 7, 11};
    for (int t = 0; t < trials; ++t) {
        long ell = rng.pick(ells);
        Scalar a(rng.nonzero_rational()), s(rng.nonzero_rational());
        Scalar a2(rng.nonzero_rational()), s2(rng.nonzero_rational());
        GL4Local local = sigma_unramified_split(
            make_local(ell, IdealSlot::First, ell, a, s),
            make_local(ell, IdealSlot::Second, ell, a2, s2), ell);
        auto got = ascending_coeffs(asai_charpoly_local(local));
        auto expected = reference::split_tensor_charpoly(a, s, a2, s2, ell);
        for (int i = 0; i <= 4; ++i)
            if (got[i] != expected[i])
                return fail("coefficient X^" + std::to_string(i) + " at l=" +
                            std::to_string(ell));
    }
    // symbolic run: coefficients are polynomial in (a, s, a', s')
    VarTableRef vars = make_vars({"a", "s", "a2", "s2"});
    Scalar a = sym(vars, "a"), s = sym(vars, "s");
    Scalar a2 = sym(vars, "a2"), s2 = sym(vars, "s2");
    GL4Local local = sigma_unramified_split(make_local(7, IdealSlot::First, 7, a, s),
                                            make_local(7, IdealSlot::Second, 7, a2, s2), 7);
    auto got = ascending_coeffs(asai_charpoly_local(local));
    auto expected = reference::split_tensor_charpoly(a, s, a2, s2, 7);
    for (int i = 0; i <= 4; ++i)
        if (got[i] != expected[i])
            return fail("symbolic coefficient X^" + std::to_string(i));
    return {};
}

std::string check_inert_tensor(Rng& rng, int trials) {
    const std::vector<long> ells{2, 3, 5, 7, 11};
    for (int t = 0; t < trials; ++t) {
        long ell = rng.pick(ells);
        TransferSign sign = rng.coin() ? TransferSign::Plus : TransferSign::Minus;
        Scalar a(rng.nonzero_rational()), s(rng.nonzero_rational());
        GL4Local local =
            sigma_unramified_inert(make_local(ell, IdealSlot::Whole, ell * ell, a, s), ell, sign);
        if (!local.t[1].is_zero())
            return fail("T_{l,2} not identically zero");
        auto got = ascending_coeffs(asai_charpoly_local(local));
        auto expected = reference::inert_tensor_charpoly(a, s, ell, sign);
        for (int i = 0; i <= 4; ++i)
            if (got[i] != expected[i])
                return fail("coefficient X^" + std::to_string(i) + " at l=" +
                            std::to_string(ell));
    }
    VarTableRef vars = make_vars({"a", "s"});
    for (TransferSign sign : {TransferSign::Plus, TransferSign::Minus}) {
        Scalar a = sym(vars, "a"), s = sym(vars, "s");
        GL4Local local =
            sigma_unramified_inert(make_local(3, IdealSlot::Whole, 9, a, s), 3, sign);
        if (!local.t[1].is_zero())
            return fail("symbolic T_{l,2} not identically zero");
        auto got = ascending_coeffs(asai_charpoly_local(local));
        auto expected = reference::inert_tensor_charpoly(a, s, 3, sign);
        for (int i = 0; i <= 4; ++i)
            if (got[i] != expected[i])
                return fail("symbolic coefficient X^" + std::to_string(i));
    }
    return {};
}

// ---------------------------------------------------------------------------

RefinementData symbolic_split_refinement(const VarTableRef& vars) {
    RefinementData ref;
    ref.regime = PRegime::SplitAtP;
    ref.alpha1 = sym(vars, "ap");
    ref.beta1 = sym(vars, "bp");
    ref.alpha2 = sym(vars, "apc");
    ref.beta2 = sym(vars, "bpc");
    return ref;
}

std::string check_refinement_lemma_split(Rng&, int) {
    VarTableRef vars = make_vars({"ap", "bp", "apc", "bpc"});
    std::size_t iap = vars->index_of("ap"), ibp = vars->index_of("bp");
    std::size_t iapc = vars->index_of("apc"), ibpc = vars->index_of("bpc");
    RefinementData ref = symbolic_split_refinement(vars);
    for (auto [p, m] : std::vector<std::pair<long, long>>{{3, 1}, {3, 3}, {5, 2}, {7, 5}}) {
        GL4PPart part = sigma_p_split(ref, p, m);
        RefinementCharacter chi = refinement_split(ref, p, m);
        // telescoping route, reduced independently
        Scalar product(1);
        for (int i = 0; i < 4; ++i) {
            product *= chi.u[i];
            MPoly reduced = product.poly()
                                .reduce_pair(iap, ibp, prime_power(p, m + 1))
                                .reduce_pair(iapc, ibpc, prime_power(p, m + 1));
            if (!(part.u[i] == Scalar(reduced)))
                return fail("U_{p," + std::to_string(i + 1) + "} != telescoped u-product");
        }
        // U_p = p^{3m-1} alpha_p^4 alpha_pc^2 as an exact polynomial identity
        MPoly::Mono mono(vars->size(), 0);
        mono[iap] = 4;
        mono[iapc] = 2;
        Scalar closed(MPoly::monomial(vars, mono, prime_power(p, 3 * m - 1)));
        if (!(part.controlling == closed))
            return fail("split controlling eigenvalue != p^{3m-1} a_p^4 a_pc^2");
        if (!(part.controlling == impose_norm_relations(part.u[0] * part.u[1] * part.u[2],
                                                        ref, p, m)))
            return fail("controlling != U1 U2 U3");
    }
    // frozen numeric example: p=3, m=3, alpha_p=3, alpha_pc=9
    RefinementData num;
    num.regime = PRegime::SplitAtP;
    num.alpha1 = Scalar(3);
    num.alpha2 = Scalar(9);
    GL4PPart part = sigma_p_split(num, 3, 3);
    Rational u_p = rational_pow(Rational(3), 16);
    if (!(part.controlling == Scalar(u_p)))
        return fail("U_p at (p,m,a,a') = (3,3,3,9) should be 3^16");
    RefinementCharacter chi = refinement_split(num, 3, 3);
    const long expected[4] = {27, 9, 27, 9};
    for (int i = 0; i < 4; ++i)
        if (!(chi.u[i] == Scalar(expected[i])))
            return fail("refinement tuple at (3,3,3,9) != (27, 9, 27, 9)");
    if (!(part.u[3] == Scalar(prime_power(3, 4 * 3 - 2))))
        return fail("U_{p,4} != p^{4m-2}");
    return {};
}

std::string check_refinement_lemma_inert(Rng&, int) {
    VarTableRef vars = make_vars({"ap", "bp"});
    std::size_t iap = vars->index_of("ap"), ibp = vars->index_of("bp");
    RefinementData ref;
    ref.regime = PRegime::InertAtP;
    ref.alpha1 = sym(vars, "ap");
    ref.beta1 = sym(vars, "bp");
    for (auto [p, m] : std::vector<std::pair<long, long>>{{3, 0}, {3, 1}, {5, 2}, {7, 4}}) {
        GL4PPart plus = sigma_p_inert(ref, p, m, TransferSign::Plus);
        GL4PPart minus = sigma_p_inert(ref, p, m, TransferSign::Minus);
        if (!(plus.u[1] == minus.u[1]) || !(plus.u[3] == minus.u[3]))
            return fail("U~_{p,2}, U~_{p,4} must be sign-independent");
        if (!(plus.controlling == minus.controlling))
            return fail("controlling value must be sign-independent");
        if (!(plus.u[0] == -minus.u[0]) || !(plus.u[2] == -minus.u[2]))
            return fail("U~_{p,1}, U~_{p,3} must flip with the sign");
        MPoly::Mono mono(vars->size(), 0);
        mono[iap] = 4;
        Scalar closed(MPoly::monomial(vars, mono, -prime_power(p, 4 * m - 1)));
        if (!(plus.controlling == closed))
            return fail("inert controlling eigenvalue != -p^{4m-1} a_p^4");
        for (TransferSign sign : {TransferSign::Plus, TransferSign::Minus}) {
            GL4PPart part = sigma_p_inert(ref, p, m, sign);
            RefinementCharacter chi = refinement_inert(ref, p, m, sign);
            auto reduce = [&](const Scalar& s) {
                return Scalar(s.poly().reduce_pair(iap, ibp, prime_power(p, 2 * m + 2)));
            };
            if (!(chi.u[0] == part.u[0]))
                return fail("u~_1 != U~_1");
            if (!(part.u[1] == reduce(chi.u[1] * part.u[0] * part.u[0])))
                return fail("U~_2 != u~_2 U~_1^2");
            if (!(part.u[2] * part.u[0] == chi.u[2] * part.u[1]))
                return fail("U~_3 U~_1 != u~_3 U~_2");
            if (!(part.u[3] == reduce(chi.u[3] * part.u[2])))
                return fail("U~_4 != u~_4 U~_3");
            if (!(chi.u[2] == Scalar(-prime_power(p, -1))))
                return fail("chi~(u~_3) != -1/p");
            if (!(reduce(chi.u[1]) == Scalar(prime_power(p, 2 * m))))
                return fail("chi~(u~_2) != p^{2m} under the norm relation");
        }
    }
    // frozen numeric example: p=3, m=1, alpha_p=3 (beta = 27)
    RefinementData num;
    num.regime = PRegime::InertAtP;
    num.alpha1 = Scalar(3);
    GL4PPart part = sigma_p_inert(num, 3, 1, TransferSign::Plus);
    const long images[4] = {3, 81, -9, -9};
    for (int i = 0; i < 4; ++i)
        if (!(part.u[i] == Scalar(images[i])))
            return fail("inert images at (p,m,a)=(3,1,3) != (3, 81, -9, -9)");
    if (!(part.controlling == Scalar(-rational_pow(Rational(3), 7))))
        return fail("U~_p at (3,1,3) != -3^7");
    // the two square-root choices restrict to the same chi~
    for (TransferSign sign : {TransferSign::Plus, TransferSign::Minus}) {
        auto plus_root = reference::inert_chi_tilde(Rational(3), Rational(27), 3, sign, true);
        auto minus_root = reference::inert_chi_tilde(Rational(3), Rational(27), 3, sign, false);
        RefinementCharacter chi = refinement_inert(num, 3, 1, sign);
        for (int i = 0; i < 4; ++i) {
            if (!(plus_root[i] == minus_root[i]))
                return fail("chi~ depends on the square-root choice");
            if (!(chi.u[i] == plus_root[i]))
                return fail("chi~ mismatch against the root-level oracle");
        }
    }
    return {};
}

// ---------------------------------------------------------------------------

std::string check_hecke_recursion(Rng& rng, int trials) {
    for (int t = 0; t < trials; ++t) {
        Scalar a(rng.nonzero_rational()), e(rng.nonzero_rational());
        // synthetic local carrying (t, e) = (a, 4s)
        SatakeLocal loc = make_local(2, IdealSlot::Whole, 4, a, e / Scalar(4));
        long r = rng.range(0, 12);
        Scalar got = eigenvalue_at_prime_power(loc, r);
        Scalar expected = reference::power_sum_h(a, e, r);
        if (!(got == expected))
            return fail("c(l^" + std::to_string(r) + ") != h_r");
    }
    return {};
}

std::string check_multiplicativity(Rng& rng, int trials) {
    HilbertEigenPacket pkt = synthetic_packet_d5(rng.raw(), 60);
    for (int t = 0; t < trials; ++t) {
        long m1 = rng.range(1, 60);
        long m2 = rng.range(1, 60);
        if (std::gcd(m1, m2) != 1 || m1 % 5 == 0 || m2 % 5 == 0)
            continue;
        if (!(eigenvalue_at_mOK(pkt, m1 * m2) ==
              eigenvalue_at_mOK(pkt, m1) * eigenvalue_at_mOK(pkt, m2)))
            return fail("c(m1 m2) != c(m1) c(m2) at " + std::to_string(m1) + "," +
                        std::to_string(m2));
    }
    return {};
}

HilbertEigenPacket swap_split_labels(const HilbertEigenPacket& pkt) {
    HilbertEigenPacket out = pkt;
    out.locals.clear();
    for (const auto& [label, loc] : pkt.locals) {
        PrimeIdealLabel swapped = label;
        if (label.slot == IdealSlot::First)
            swapped.slot = IdealSlot::Second;
        else if (label.slot == IdealSlot::Second)
            swapped.slot = IdealSlot::First;
        SatakeLocal copy = loc;
        copy.label = swapped;
        out.locals.emplace(swapped, std::move(copy));
    }
    std::swap(out.refinement.alpha1, out.refinement.alpha2);
    std::swap(out.refinement.beta1, out.refinement.beta2);
    return out;
}

std::string check_swap_symmetry(Rng& rng, int trials) {
    for (int t = 0; t < trials; ++t) {
        HilbertEigenPacket pkt = synthetic_packet_d5(rng.raw(), 41);
        HilbertEigenPacket swapped = swap_split_labels(pkt);
        for (long m = 1; m <= 40; ++m) {
            if (m % 5 == 0)
                continue;
            if (!(eigenvalue_at_mOK(pkt, m) == eigenvalue_at_mOK(swapped, m)))
                return fail("eigenvalue at m O_K changed under First<->Second swap");
        }
        GL4EigenPacket x = transfer_eigenpacket(pkt, TransferSign::Plus);
        GL4EigenPacket y = transfer_eigenpacket(swapped, TransferSign::Plus);
        for (const auto& [ell, loc] : x.locals)
            for (int i = 0; i < 4; ++i)
                if (!(loc.t[i] == y.locals.at(ell).t[i]))
                    return fail("GL4 local changed under First<->Second swap");
        // p-part transformation: U1, U3, U4 fixed; U2 moves by the
        // u2 <-> u3 exchange
        if (!(x.ppart.u[0] == y.ppart.u[0]) || !(x.ppart.u[2] == y.ppart.u[2]) ||
            !(x.ppart.u[3] == y.ppart.u[3]))
            return fail("U_{p,1}, U_{p,3}, U_{p,4} must be swap-invariant");
        RefinementCharacter ux = refinement_split(pkt.refinement, pkt.p, pkt.weight.m());
        RefinementCharacter uy = refinement_split(swapped.refinement, pkt.p, pkt.weight.m());
        Rational p(pkt.p);
        if (!(uy.u[0] == ux.u[0]) || !(uy.u[3] == ux.u[3]))
            return fail("u_1, u_4 must be swap-invariant");
        if (!(uy.u[1] == ux.u[2] * Scalar(p)) || !(uy.u[2] == ux.u[1] / Scalar(p)))
            return fail("swap must act as u_2 -> p u_3, u_3 -> u_2 / p");
        if (!(y.ppart.u[1] == uy.u[0] * uy.u[1]))
            return fail("swapped U_{p,2} != u_1' u_2'");
        bool expect = y.ppart.u[1] == x.ppart.u[1] || y.ppart.u[1] == -x.ppart.u[1];
        if (q_equivalent(x, y) != expect)
            return fail("q_equivalent disagrees with the documented U_{p,2} pattern");
    }
    return {};
}

// ---------------------------------------------------------------------------

std::string check_slope_bounds(Rng&, int) {
    for (long n1 = 2; n1 <= 40; ++n1) {
        for (long n2 = 1; n2 < n1; ++n2) {
            if ((n1 - n2) % 2)
                continue; // no valid Hilbert weight otherwise
            HilbertWeight kappa{n1, n2, 0, (n1 - n2) / 2};
            GL4Weight mu = weight_map_j(kappa);
            for (PRegime regime : {PRegime::SplitAtP, PRegime::InertAtP}) {
                Rational brute = weyl_slope_bound_bruteforce(mu, slope_context(regime));
                Rational closed = small_slope_closed_form(kappa, regime);
                if (brute != closed)
                    return fail("slope mismatch at (n1,n2)=(" + std::to_string(n1) + "," +
                                std::to_string(n2) + ") " + regime_str(regime));
            }
            // weighted single-swap costs per regime
            std::array<long, 4> lambda{mu.mu1 + 3, mu.mu2 + 2, mu.mu3 + 1, mu.mu4};
            long diff = n1 - n2;
            for (PRegime regime : {PRegime::SplitAtP, PRegime::InertAtP}) {
                auto c = slope_context(regime).c;
                long middle = regime == PRegime::SplitAtP ? diff : 2 * diff;
                if ((c[1] - c[0]) * (lambda[0] - lambda[1]) != n2 + 1 ||
                    (c[2] - c[1]) * (lambda[1] - lambda[2]) != middle ||
                    (c[3] - c[2]) * (lambda[2] - lambda[3]) != n2 + 1)
                    return fail("single-swap costs are off");
            }
        }
    }
    return {};
}

std::string check_star_normalization(Rng&, int) {
    VarTableRef svars = make_vars({"ap", "bp", "apc", "bpc"});
    MPoly::Mono smono(svars->size(), 0);
    smono[svars->index_of("ap")] = 4;
    smono[svars->index_of("apc")] = 2;

    // split regime over classical (2v1+v2=0) and non-classical weights
    std::vector<HilbertWeight> split_weights{{7, 1, -1, 2}, {3, 1, 0, 1}, {9, 3, -2, 1}};
    for (const HilbertWeight& kappa : split_weights) {
        HilbertEigenPacket pkt;
        pkt.field = make_quad_field(5);
        pkt.weight = kappa;
        pkt.p = 11;
        pkt.vars = svars;
        pkt.refinement = symbolic_split_refinement(svars);
        Scalar star = star_eigenvalue(pkt, TransferSign::Plus);
        long defect = 4 * kappa.v1 + 2 * kappa.v2;
        Scalar expected(MPoly::monomial(svars, smono, prime_power(11, -defect)));
        if (!(star == expected))
            return fail("split star eigenvalue carries the wrong p-power");
        if (classical_weight_membership(kappa, PRegime::SplitAtP) != (defect == 0))
            return fail("classical membership disagrees with the defect");
        Scalar controlling = sigma_p_split(pkt.refinement, pkt.p, kappa.m()).controlling;
        Scalar normalizer(prime_power(11, 3 * kappa.m() - 1 + defect));
        if (!(star * normalizer == controlling))
            return fail("star * mu(1,p,p^2,p^3) != controlling eigenvalue");
    }

    VarTableRef ivars = make_vars({"ap", "bp"});
    MPoly::Mono imono(ivars->size(), 0);
    imono[ivars->index_of("ap")] = 4;
    std::vector<HilbertWeight> inert_weights{{9, 1, -1, 3}, {5, 1, 0, 2}, {17, 1, -2, 6}};
    for (const HilbertWeight& kappa : inert_weights) {
        HilbertEigenPacket pkt;
        pkt.field = make_quad_field(5);
        pkt.weight = kappa;
        pkt.p = 3;
        pkt.vars = ivars;
        pkt.refinement.regime = PRegime::InertAtP;
        pkt.refinement.alpha1 = sym(ivars, "ap");
        pkt.refinement.beta1 = sym(ivars, "bp");
        Scalar star = star_eigenvalue(pkt, TransferSign::Plus);
        long defect = 6 * kappa.v1 + 2 * kappa.v2;
        Scalar expected(MPoly::monomial(ivars, imono, -prime_power(3, -defect)));
        if (!(star == expected))
            return fail("inert star eigenvalue carries the wrong p-power");
        if (classical_weight_membership(kappa, PRegime::InertAtP) != (defect == 0))
            return fail("classical membership disagrees with the defect");
        Scalar controlling =
            sigma_p_inert(pkt.refinement, pkt.p, kappa.m(), TransferSign::Minus).controlling;
        Scalar normalizer(prime_power(3, 4 * kappa.m() - 1 + defect));
        if (!(star * normalizer == controlling))
            return fail("star * mu(1,p,p^3,p^4) != controlling eigenvalue");
    }
    return {};
}

std::string check_hodge_parameters(Rng&, int) {
    for (long n1 = 0; n1 <= 20; ++n1) {
        for (long n2 = 0; n2 <= n1; ++n2) {
            if ((n1 - n2) % 2)
                continue;
            for (long v1 = -2; v1 <= 2; ++v1) {
                HilbertWeight kappa{n1, n2, v1, v1 + (n1 - n2) / 2};
                if (!weight_valid(kappa))
                    return fail("scan produced an invalid weight");
                long m = kappa.m();
                // tensor oracle for the Hodge types
                std::vector<HodgeType> expected;
                for (const auto& [p1, q1] :
                     {std::pair<long, long>{n1 + 1 + v1, v1}, {v1, n1 + 1 + v1}})
                    for (const auto& [p2, q2] : {std::pair<long, long>{n2 + 1 + kappa.v2, kappa.v2},
                                                 {kappa.v2, n2 + 1 + kappa.v2}})
                        expected.push_back({p1 + p2, q1 + q2});
                std::vector<HodgeType> got = hodge_types_asai(kappa);
                std::sort(expected.begin(), expected.end());
                std::sort(got.begin(), got.end());
                if (got != expected)
                    return fail("Hodge types != tensor sums at (" + std::to_string(n1) + "," +
                                std::to_string(n2) + ")");
                for (const auto& h : got)
                    if (h.p + h.q != 2 * m + 2)
                        return fail("motive weight != 2m+2");
                if (has_middle_hodge_type(kappa) != (n1 == n2))
                    return fail("middle Hodge type iff n1 = n2 fails");
                // parameter parity and pair sums
                auto plain = asai_parameter(kappa, false);
                for (const auto& [u, v] : plain)
                    if (!is_integer(u) || !is_integer(v))
                        return fail("unnormalized exponents must be integers");
                auto normalized = asai_parameter(kappa, true);
                for (const auto& [u, v] : normalized) {
                    if (is_integer(u) || is_integer(v))
                        return fail("normalized exponents must be half-integers");
                    if (u + v != Rational(1 - 2 * m))
                        return fail("normalized pair sum != 1 - 2m");
                }
                if (n1 == n2)
                    continue;
                GL4Weight via_j = weight_map_j(kappa);
                GL4Weight via_inf = mu_from_infinity(kappa);
                if (via_j.mu() != via_inf.mu() || via_j.w != via_inf.w)
                    return fail("mu_from_infinity != weight_map_j");
                if (via_inf.w != 2 * m - 1)
                    return fail("purity weight != 2m-1");
                auto report = purity_dominance_check(via_j);
                if (!report.pure || !report.dominant)
                    return fail("weight map image must be pure and dominant for n1 > n2");
            }
        }
    }
    // dominance fails exactly when n1 = n2 (mu2 < mu3)
    for (long n = 0; n <= 20; ++n) {
        HilbertWeight kappa{n, n, 0, 0};
        if (purity_dominance_check(weight_map_j(kappa)).dominant)
            return fail("weight map image is dominant despite n1 = n2");
    }
    return {};
}

std::string check_qfiber(Rng& rng, int trials) {
    for (int t = 0; t < trials; ++t) {
        HilbertEigenPacket pkt = synthetic_packet_d5(rng.raw(), 20);
        GL4EigenPacket x = transfer_eigenpacket(pkt, TransferSign::Plus);
        if (!q_equivalent(x, x))
            return fail("q_equivalent is not reflexive");
        // sign flip fixes split locals and moves exactly T1, T3 at inert ones
        GL4EigenPacket flipped = transfer_eigenpacket(pkt, TransferSign::Minus);
        for (const auto& [ell, loc] : x.locals) {
            const GL4Local& other = flipped.locals.at(ell);
            bool split = splitting_type(pkt.field, ell) == SplittingType::Split;
            if (!(loc.t[1] == other.t[1]) || !(loc.t[3] == other.t[3]))
                return fail("sign flip moved T2 or T4 at l=" + std::to_string(ell));
            if (split && (!(loc.t[0] == other.t[0]) || !(loc.t[2] == other.t[2])))
                return fail("sign flip moved a split local at l=" + std::to_string(ell));
            if (!split && (!(loc.t[0] == -other.t[0]) || !(loc.t[2] == -other.t[2])))
                return fail("sign flip did not negate T1, T3 at l=" + std::to_string(ell));
        }
        GL4EigenPacket y = x;
        y.ppart.u[1] = -y.ppart.u[1];
        if (!q_equivalent(x, y))
            return fail("negating U_{p,2} must preserve the fiber");
        for (int i : {0, 2, 3}) {
            GL4EigenPacket z = x;
            z.ppart.u[i] = z.ppart.u[i] + Scalar(1);
            if (q_equivalent(x, z))
                return fail("perturbing U_{p," + std::to_string(i + 1) + "} must break the fiber");
        }
        long first_ell = x.locals.begin()->first;
        for (int i = 0; i < 4; ++i) {
            GL4EigenPacket z = x;
            z.locals.at(first_ell).t[i] = z.locals.at(first_ell).t[i] + Scalar(1);
            if (q_equivalent(x, z))
                return fail("perturbing T_{l," + std::to_string(i + 1) + "} must break the fiber");
        }
    }
    return {};
}

// ---------------------------------------------------------------------------

HilbertEigenPacket symbolic_profile_packet(long k) {
    VarTableRef vars = make_vars({"t19a", "t19b", "t3"});
    HilbertEigenPacket pkt;
    pkt.field = make_quad_field(5);
    pkt.weight = {3, 1, 0, 1};
    pkt.p = 11;
    pkt.vars = vars;
    pkt.refinement.regime = PRegime::SplitAtP;
    pkt.refinement.alpha1 = Scalar(3);
    pkt.refinement.alpha2 = Scalar(2);
    // profile s = N^{k-2}
    pkt.locals[{19, IdealSlot::First}] =
        make_local(19, IdealSlot::First, 19, sym(vars, "t19a"),
                   Scalar(rational_pow(Rational(19), k - 2)));
    pkt.locals[{19, IdealSlot::Second}] =
        make_local(19, IdealSlot::Second, 19, sym(vars, "t19b"),
                   Scalar(rational_pow(Rational(19), k - 2)));
    pkt.locals[{3, IdealSlot::Whole}] = make_local(
        3, IdealSlot::Whole, 9, sym(vars, "t3"), Scalar(rational_pow(Rational(9), k - 2)));
    return pkt;
}

std::string check_lfunction_local(Rng&, int) {
    for (long k : {2L, 3L}) {
        HilbertEigenPacket pkt = symbolic_profile_packet(k);
        auto split = local_identity_check(pkt, 19, k, 16, TransferSign::Plus);
        if (!split.ok)
            return fail("split local identity fails at X^" + std::to_string(split.first_mismatch));
        auto inert = local_identity_check(pkt, 3, k, 16, TransferSign::Plus);
        if (!inert.ok)
            return fail("inert local identity fails at X^" + std::to_string(inert.first_mismatch));
        auto minus = local_identity_check(pkt, 3, k, 16, TransferSign::Minus);
        if (minus.ok || minus.first_mismatch != 1)
            return fail("minus sign at an inert prime must break the identity at X^1");
    }
    // fully symbolic Rankin-Selberg shape: prod(1 - gamma X) * sum h_r h_r X^r
    // = 1 - e e' X^2, with all four of (a, s, a', s') free
    VarTableRef vars = make_vars({"a", "s", "a2", "s2"});
    Scalar a = sym(vars, "a"), s = sym(vars, "s");
    Scalar a2 = sym(vars, "a2"), s2 = sym(vars, "s2");
    long ell = 7;
    int order = 16;
    Scalar e = Scalar(ell) * s, e2 = Scalar(ell) * s2;
    GL4Local local = sigma_unramified_split(make_local(ell, IdealSlot::First, ell, a, s),
                                            make_local(ell, IdealSlot::Second, ell, a2, s2), ell);
    UniPoly factor_poly = local_euler_factor(local).poly;
    if (factor_poly.degree() != 4 || !(factor_poly.coeff(0) == Scalar(1)))
        return fail("euler factor must be degree 4 with constant term 1");
    PowerSeries factor = PowerSeries::from_poly(factor_poly, order);
    std::vector<Scalar> h(order + 1, Scalar(0));
    for (int r = 0; r <= order; ++r)
        h[r] = reference::power_sum_h(a, e, r) * reference::power_sum_h(a2, e2, r);
    PowerSeries hs(std::move(h), order);
    PowerSeries lhs = factor * hs;
    PowerSeries rhs = PowerSeries::from_poly(
        UniPoly({Scalar(1), Scalar(0), -(e * e2)}), order);
    if (lhs != rhs)
        return fail("Rankin-Selberg identity fails symbolically");
    return {};
}

std::string check_lfunction_global(Rng& rng, int) {
    HilbertEigenPacket pkt = synthetic_packet_d5(rng.raw(), 200, 2);
    DirichletPrefix conv = global_dirichlet_coefficients(pkt, 2, 200);
    DirichletPrefix euler = global_dirichlet_coefficients_euler(pkt, 2, 200);
    if (conv.b.size() != euler.b.size())
        return fail("routes disagree on the coefficient support");
    for (const auto& [m, b] : conv.b) {
        if (!(b == euler.b.at(m)))
            return fail("b_" + std::to_string(m) + " differs between the two routes");
    }
    if (!(conv.b.at(1) == Scalar(1)))
        return fail("b_1 != 1");
    // prefix multiplicativity on coprime pairs
    for (auto [m1, m2] : std::vector<std::pair<long, long>>{{2, 3}, {4, 9}, {6, 7}, {11, 13}}) {
        if (!(conv.b.at(m1 * m2) == conv.b.at(m1) * conv.b.at(m2)))
            return fail("prefix multiplicativity fails at " + std::to_string(m1) + "," +
                        std::to_string(m2));
    }
    return {};
}

// ---------------------------------------------------------------------------

std::string check_quad_field_laws(Rng&, int) {
    for (long d : {2L, 3L, 5L, 6L, 7L, 10L, 13L}) {
        QuadField field = make_quad_field(d);
        for (long m = 1; m <= 10000; ++m) {
            Integer norm = ideal_norm(field, factor_rational_ideal(field, m));
            if (norm != Integer(m) * m)
                return fail("N(m O_K) != m^2 at d=" + std::to_string(d) +
                            ", m=" + std::to_string(m));
        }
        for (long ell = 2; ell < 500; ++ell) {
            if (!is_prime(ell) || ell % field.discriminant == 0)
                continue;
            for (long k = 1; k <= 3; ++k) {
                long shifted = ell + field.discriminant * k;
                if (!is_prime(shifted))
                    continue;
                if (splitting_type(field, shifted) != splitting_type(field, ell))
                    return fail("splitting not periodic mod disc at d=" + std::to_string(d) +
                                ", l=" + std::to_string(ell));
            }
        }
    }
    return {};
}

std::string check_packet_roundtrip(Rng& rng, int trials) {
    for (int t = 0; t < trials; ++t) {
        HilbertEigenPacket pkt = synthetic_packet_d5(rng.raw(), 20);
        Json rendered = render_packet(pkt);
        HilbertEigenPacket back = parse_packet_json(rendered);
        if (!packets_equal(pkt, back))
            return fail("parse(render(pkt)) != pkt");
        if (render_packet(back).dump(2) != rendered.dump(2))
            return fail("render is not deterministic");
    }
    // one symbolic packet
    HilbertEigenPacket pkt = symbolic_profile_packet(2);
    pkt.refinement.declared_valuations["t3"] = Rational(1, 2);
    HilbertEigenPacket back = parse_packet_json(render_packet(pkt));
    if (!packets_equal(pkt, back))
        return fail("symbolic parse(render(pkt)) != pkt");
    return {};
}

} // namespace

HilbertEigenPacket synthetic_packet_d5(std::uint64_t seed, long max_prime,
                                       long level1_profile_k) {
    Rng rng(seed);
    HilbertEigenPacket pkt;
    pkt.field = make_quad_field(5);
    pkt.weight = {3, 1, 0, 1};
    pkt.p = 11;
    pkt.refinement.regime = PRegime::SplitAtP;
    pkt.refinement.alpha1 = Scalar(rng.nonzero_rational(9));
    pkt.refinement.alpha2 = Scalar(rng.nonzero_rational(9));
    for (long ell = 2; ell <= max_prime; ++ell) {
        if (!is_prime(ell) || splitting_type(pkt.field, ell) == SplittingType::Ramified)
            continue;
        for (const PrimeIdealLabel& label : labels_above(pkt.field, ell)) {
            long norm = label_norm(pkt.field, label);
            Scalar s = level1_profile_k > 0
                           ? Scalar(rational_pow(Rational(norm), level1_profile_k - 2))
                           : Scalar(rng.nonzero_rational(9));
            pkt.locals[label] = make_local(ell, label.slot, norm,
                                           Scalar(rng.nonzero_rational(9)), std::move(s));
        }
    }
    return pkt;
}

std::vector<PropertyResult> run_property_suite(std::uint64_t seed, int trials) {
    struct Entry {
        const char* name;
        CheckFn fn;
    };
    const std::vector<Entry> checks{
        {"ring_axioms_rational", check_ring_axioms_rational},
        {"ring_axioms_mpoly", check_ring_axioms_mpoly},
        {"series_inverse_roundtrip", check_series_inverse},
        {"padic_valuation_laws", check_valuation_laws},
        {"quad_field_laws", check_quad_field_laws},
        {"hecke_recursion_vs_power_sum", check_hecke_recursion},
        {"eigenvalue_multiplicativity", check_multiplicativity},
        {"split_tensor_identity", check_split_tensor},
        {"inert_tensor_identity", check_inert_tensor},
        {"refinement_lemma_split", check_refinement_lemma_split},
        {"refinement_lemma_inert", check_refinement_lemma_inert},
        {"first_second_swap", check_swap_symmetry},
        {"slope_closed_forms", check_slope_bounds},
        {"star_normalization", check_star_normalization},
        {"hodge_parameter_crosschecks", check_hodge_parameters},
        {"qfiber_law", check_qfiber},
        {"lfunction_local_identity", check_lfunction_local},
        {"lfunction_global_routes", check_lfunction_global},
        {"packet_roundtrip", check_packet_roundtrip},
    };
    std::vector<PropertyResult> results;
    results.reserve(checks.size());
    std::uint64_t salt = 0x9e3779b97f4a7c15ULL;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        Rng rng(seed ^ (salt * (i + 1)));
        PropertyResult result;
        result.name = checks[i].name;
        try {
            std::string detail = checks[i].fn(rng, trials);
            result.pass = detail.empty();
            result.detail = detail;
        } catch (const std::exception& e) {
            result.pass = false;
            result.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(result));
    }
    return results;
}

} // namespace asai
