#include <doctest.h>

#include "asai/properties.hpp"
#include "asai/transfer.hpp"
#include "asai/weights.hpp"

using namespace asai;

TEST_CASE("weight map j") {
    GL4Weight mu = weight_map_j({3, 1, 0, 1});
    CHECK(mu.mu() == std::array<long, 4>{4, 3, 2, 1});
    CHECK(mu.w == 5);

    GL4Weight degenerate = weight_map_j({2, 0, 0, 1});
    CHECK(degenerate.mu() == std::array<long, 4>{2, 2, 1, 1});
    CHECK(degenerate.w == 3);
    auto report = purity_dominance_check(degenerate);
    CHECK(report.pure);
    CHECK(report.dominant);
    CHECK_FALSE(report.regular);

    // n1 = n2 forces the middle tie mu2 < mu3 and dominance fails
    GL4Weight tied = weight_map_j({2, 2, 0, 0});
    CHECK(tied.mu2 < tied.mu3);
    CHECK_FALSE(purity_dominance_check(tied).dominant);

    CHECK_THROWS_AS(weight_map_j({3, 2, 0, 0}), std::domain_error);
}

TEST_CASE("purity and dominance reports") {
    auto good = purity_dominance_check({4, 3, 2, 1, 5});
    CHECK(good.pure);
    CHECK(good.dominant);
    CHECK(good.regular);

    auto impure = purity_dominance_check({4, 2, 2, 1, 5});
    CHECK_FALSE(impure.pure);

    auto reversed = purity_dominance_check({1, 2, 3, 4, 5});
    CHECK(reversed.pure);
    CHECK_FALSE(reversed.dominant);
}

TEST_CASE("slope bounds: worked examples") {
    // split (3,1): h = min{2, 2} = 2
    HilbertWeight w31{3, 1, 0, 1};
    CHECK(small_slope_closed_form(w31, PRegime::SplitAtP) == Rational(2));
    CHECK(weyl_slope_bound_bruteforce(weight_map_j(w31), slope_context(PRegime::SplitAtP)) ==
          Rational(2));

    // closed forms at (5,2): pure (n1, n2) arithmetic, no valid weight needed
    CHECK(small_slope_closed_form({5, 2, 0, 0}, PRegime::InertAtP) == Rational(3));
    CHECK(small_slope_closed_form({5, 2, 0, 0}, PRegime::SplitAtP) == Rational(3));

    // a valid inert weight reproducing h = 3: (6,2), v = (0,2)
    HilbertWeight w62{6, 2, 0, 2};
    CHECK(small_slope_closed_form(w62, PRegime::InertAtP) == Rational(3));
    CHECK(weyl_slope_bound_bruteforce(weight_map_j(w62), slope_context(PRegime::InertAtP)) ==
          Rational(3));

    CHECK(small_slope_closed_form({2, 0, 0, 1}, PRegime::InertAtP) == Rational(1));
    CHECK(small_slope_closed_form({5, 2, 0, 0}, PRegime::SplitAtP) == Rational(3));
    CHECK_THROWS_AS(small_slope_closed_form({2, 2, 0, 0}, PRegime::SplitAtP), std::domain_error);
    CHECK_THROWS_AS(
        weyl_slope_bound_bruteforce({1, 2, 3, 4, 5}, slope_context(PRegime::SplitAtP)),
        std::domain_error);
}

TEST_CASE("adjacent transposition costs") {
    // (3 4) contributes (c4 - c3)(lambda3 - lambda4) = n2 + 1 in both regimes
    for (auto [n1, n2] : std::vector<std::pair<long, long>>{{3, 1}, {7, 3}, {10, 2}}) {
        HilbertWeight kappa{n1, n2, 0, (n1 - n2) / 2};
        GL4Weight mu = weight_map_j(kappa);
        long lambda3 = mu.mu3 + 1, lambda4 = mu.mu4;
        CHECK(lambda3 - lambda4 == n2 + 1);
        for (PRegime regime : {PRegime::SplitAtP, PRegime::InertAtP}) {
            auto ctx = slope_context(regime);
            CHECK((ctx.c[3] - ctx.c[2]) * (lambda3 - lambda4) == n2 + 1);
        }
    }
}

TEST_CASE("classicality thresholds and checks") {
    // split (3,1): threshold 2
    CHECK(classicality_threshold(3, 1, PRegime::SplitAtP) == Rational(2));
    // inert (5,2): min{3/4, 3/2} = 3/4
    CHECK(classicality_threshold(5, 2, PRegime::InertAtP) == Rational(3, 4));

    // split packet with declared valuation sum 1 < 2: classical
    VarTableRef vars = make_vars({"ap", "bp", "apc", "bpc"});
    HilbertEigenPacket pkt;
    pkt.field = make_quad_field(5);
    pkt.weight = {3, 1, 0, 1};
    pkt.p = 11;
    pkt.vars = vars;
    pkt.refinement.regime = PRegime::SplitAtP;
    pkt.refinement.alpha1 = sym(vars, "ap");
    pkt.refinement.beta1 = sym(vars, "bp");
    pkt.refinement.alpha2 = sym(vars, "apc");
    pkt.refinement.beta2 = sym(vars, "bpc");
    pkt.refinement.declared_valuations["ap"] = Rational(1, 4);
    pkt.refinement.declared_valuations["apc"] = Rational(0);
    auto report = classicality_check(pkt);
    CHECK(report.valuation == Rational(1));
    CHECK(report.threshold == Rational(2));
    CHECK(report.classical);

    // boundary equality is NOT classical (strict inequality)
    pkt.refinement.declared_valuations["ap"] = Rational(1, 2);
    CHECK(classicality_check(pkt).valuation == Rational(2));
    CHECK_FALSE(classicality_check(pkt).classical);

    // undeclared symbolic valuation is an error
    pkt.refinement.declared_valuations.erase("apc");
    CHECK_THROWS_AS(classicality_check(pkt), std::invalid_argument);

    // inert numeric: (9,1) has threshold min{1/2, 4} = 1/2; v_3(2) = 0 < 1/2
    HilbertEigenPacket inert;
    inert.field = make_quad_field(5);
    inert.weight = {9, 1, -1, 3};
    inert.p = 3;
    inert.refinement.regime = PRegime::InertAtP;
    inert.refinement.alpha1 = Scalar(2);
    auto inert_report = classicality_check(inert);
    CHECK(inert_report.threshold == Rational(1, 2));
    CHECK(inert_report.classical);
    inert.refinement.alpha1 = Scalar(3); // v = 1 >= 1/2
    CHECK_FALSE(classicality_check(inert).classical);
}

TEST_CASE("classical weight membership") {
    CHECK_FALSE(classical_weight_membership({3, 1, 0, 1}, PRegime::SplitAtP));
    CHECK(classical_weight_membership({7, 1, -1, 2}, PRegime::SplitAtP));
    CHECK(classical_weight_membership({9, 1, -1, 3}, PRegime::InertAtP));
    // (5,1): no integer v satisfies both m-consistency and 3v1+v2=0
    for (long v1 = -30; v1 <= 30; ++v1) {
        HilbertWeight kappa{5, 1, v1, v1 + 2};
        CHECK(weight_valid(kappa));
        CHECK_FALSE(classical_weight_membership(kappa, PRegime::InertAtP));
    }
    // invalid weights are a non-issue here: membership only sees n, v
    CHECK_FALSE(classical_weight_membership({1, 3, 0, 0}, PRegime::SplitAtP)); // n1 < n2
}

TEST_CASE("star eigenvalue on classical and non-classical weights") {
    // split, classical weight (7,1,-1,2): exactly alpha^4 alpha'^2
    HilbertEigenPacket pkt;
    pkt.field = make_quad_field(5);
    pkt.weight = {7, 1, -1, 2};
    pkt.p = 11;
    pkt.refinement.regime = PRegime::SplitAtP;
    pkt.refinement.alpha1 = Scalar(3);
    pkt.refinement.alpha2 = Scalar(2);
    Scalar star = star_eigenvalue(pkt, TransferSign::Plus);
    CHECK(star == Scalar(Rational(81 * 4)));

    // non-classical (3,1,0,1): defect p^{-(4v1+2v2)} = 11^{-2}
    pkt.weight = {3, 1, 0, 1};
    Scalar off = star_eigenvalue(pkt, TransferSign::Plus);
    CHECK(off == Scalar(Rational(81 * 4) * prime_power(11, -2)));

    // inert, classical (9,1,-1,3): -alpha^4
    HilbertEigenPacket inert;
    inert.field = make_quad_field(5);
    inert.weight = {9, 1, -1, 3};
    inert.p = 3;
    inert.refinement.regime = PRegime::InertAtP;
    inert.refinement.alpha1 = Scalar(2);
    for (TransferSign sign : {TransferSign::Plus, TransferSign::Minus})
        CHECK(star_eigenvalue(inert, sign) == Scalar(-16));
}

TEST_CASE("classicality rejects a vanishing refinement eigenvalue") {
    HilbertEigenPacket pkt;
    pkt.field = make_quad_field(5);
    pkt.weight = {3, 1, 0, 1};
    pkt.p = 11;
    pkt.refinement.regime = PRegime::SplitAtP;
    pkt.refinement.alpha1 = Scalar(0);
    pkt.refinement.alpha2 = Scalar(2);
    CHECK_THROWS_AS(classicality_check(pkt), std::invalid_argument);
}

TEST_CASE("weight unit condition") {
    // fundamental unit of Q(sqrt 5) has norm -1: trivial iff m is even
    CHECK(weight_unit_condition({2, 0, 0, 1}, -1));      // m = 2
    CHECK_FALSE(weight_unit_condition({3, 1, 0, 1}, -1)); // m = 3
    CHECK(weight_unit_condition({3, 1, 0, 1}, 1));
    CHECK_THROWS_AS(weight_unit_condition({2, 0, 0, 1}, 2), std::invalid_argument);
}
