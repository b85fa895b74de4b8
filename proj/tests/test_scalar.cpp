#include <doctest.h>

#include "asai/power_series.hpp"
#include "asai/rng.hpp"
#include "asai/scalar.hpp"
#include "asai/unipoly.hpp"
#include "asai/valuation.hpp"

using namespace asai;

TEST_CASE("rational parsing and canonical form") {
    CHECK(parse_rational("22/7") == Rational(22, 7));
    CHECK(parse_rational("-3") == Rational(-3));
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK(rational_str(parse_rational("4/6")) == "2/3");
    CHECK(rational_str(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
    CHECK(rational_pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(prime_power(5, 0) == 1);
    CHECK(prime_power(5, -3) == Rational(1, 125));
}

TEST_CASE("poly_mul worked examples") {
    UniPoly x = UniPoly::x();
    UniPoly one = UniPoly::one();

    // (X-1)(X+1) = X^2 - 1
    CHECK(poly_mul(x - one, x + one) == UniPoly({Scalar(-1), Scalar(0), Scalar(1)}));

    // (X-2)(X-3)(X-5)(X-7) = X^4 - 17X^3 + 101X^2 - 247X + 210
    UniPoly p = one;
    for (long root : {2, 3, 5, 7})
        p = poly_mul(p, x - UniPoly({Scalar(root)}));
    UniPoly expected({Scalar(210), Scalar(-247), Scalar(101), Scalar(-17), Scalar(1)});
    CHECK(p == expected);
    // evaluation cross-check at points off the roots
    for (long at : {0, 1, 4, 11}) {
        Scalar value = Scalar((at - 2) * (at - 3) * (at - 5) * (at - 7));
        CHECK(p.eval(Scalar(at)) == value);
    }

    // zero annihilates
    UniPoly quartic({Scalar(1), Scalar(0), Scalar(0), Scalar(0), Scalar(1)});
    CHECK(poly_mul(UniPoly(), quartic).is_zero());
    CHECK(poly_mul(UniPoly(), quartic).degree() == -1);
    CHECK(poly_mul(p, quartic).degree() == 8);
}

TEST_CASE("poly_mul rejects mismatched indeterminate sets") {
    VarTableRef t1 = make_vars({"a"});
    VarTableRef t2 = make_vars({"b"});
    UniPoly p({sym(t1, "a")});
    UniPoly q({sym(t2, "b")});
    CHECK_THROWS_AS(poly_mul(p, q), std::invalid_argument);
}

TEST_CASE("series inverse examples") {
    // 1 - X at order 3 -> geometric series
    PowerSeries f = PowerSeries::from_poly(UniPoly({Scalar(1), Scalar(-1)}), 3);
    PowerSeries g = series_inverse(f);
    for (int i = 0; i <= 3; ++i)
        CHECK(g.coeff(i) == Scalar(1));

    // 1 - 5X + 6X^2 at order 2 -> 1 + 5X + 19X^2
    PowerSeries h = PowerSeries::from_poly(UniPoly({Scalar(1), Scalar(-5), Scalar(6)}), 2);
    PowerSeries hinv = series_inverse(h);
    CHECK(hinv.coeff(0) == Scalar(1));
    CHECK(hinv.coeff(1) == Scalar(5));
    CHECK(hinv.coeff(2) == Scalar(19));
    CHECK(h * hinv == PowerSeries::one(2));

    // constant 2: invertible, inverse 1/2
    PowerSeries two = PowerSeries::from_poly(UniPoly({Scalar(2)}), 1);
    CHECK(series_inverse(two).coeff(0) == Scalar(Rational(1, 2)));
    CHECK(series_inverse(two).coeff(1) == Scalar(0));

    // non-invertible constant terms
    CHECK_THROWS_AS(series_inverse(PowerSeries::zero(2)), std::domain_error);
    VarTableRef vars = make_vars({"a"});
    PowerSeries symbolic({sym(vars, "a") + Scalar(1)}, 2);
    CHECK_THROWS_AS(series_inverse(symbolic), std::domain_error);
}

TEST_CASE("series precision is pessimistic") {
    PowerSeries lo = PowerSeries::one(2);
    PowerSeries hi = PowerSeries::one(9);
    CHECK((lo * hi).order() == 2);
    CHECK((lo + hi).order() == 2);
}

TEST_CASE("padic valuation examples") {
    CHECK(padic_valuation(Rational(12), 2) == 2);
    CHECK(padic_valuation(Rational(9, 25), 5) == -2);
    CHECK(!padic_valuation(Rational(0), 3).has_value());
    CHECK_THROWS_AS(padic_valuation(Rational(4), 4), std::invalid_argument);
    CHECK(padic_valuation(Rational(-40, 27), 3) == -3);
}

TEST_CASE("symbolic valuation with declared values") {
    VarTableRef vars = make_vars({"a", "b"});
    std::map<std::string, Rational> declared{{"a", Rational(1, 4)}};
    Scalar mono = Scalar(MPoly::variable(vars, "a")).pow(4) * Scalar(Rational(3));
    CHECK(*padic_valuation(mono, 3, declared) == Rational(2)); // 1 + 4*(1/4)
    Scalar with_b = mono * sym(vars, "b");
    CHECK_THROWS_AS(padic_valuation(with_b, 3, declared), std::invalid_argument);
    CHECK(!padic_valuation(Scalar(MPoly::zero(vars)), 3, declared).has_value());
}

TEST_CASE("mpoly reduce_pair imposes x*y = c") {
    VarTableRef vars = make_vars({"x", "y", "z"});
    MPoly x = MPoly::variable(vars, "x");
    MPoly y = MPoly::variable(vars, "y");
    MPoly z = MPoly::variable(vars, "z");
    MPoly p = x * x * y * z + x * y * y;
    MPoly reduced = p.reduce_pair(0, 1, Rational(7));
    // x^2 y z -> 7 x z; x y^2 -> 7 y
    MPoly expected = x * z * MPoly::constant(vars, 7) + y * MPoly::constant(vars, 7);
    CHECK(reduced == expected);
}

TEST_CASE("scalar promotion and equality across modes") {
    VarTableRef vars = make_vars({"t"});
    Scalar t = sym(vars, "t");
    Scalar mixed = t * Scalar(Rational(1, 2)) + Scalar(3);
    CHECK(mixed.is_symbolic());
    Scalar constant = (t - t) + Scalar(4);
    CHECK(constant.is_symbolic());
    CHECK(constant == Scalar(4)); // cross-mode equality
    CHECK(constant.has_rational_value());
    CHECK(Scalar(4) == constant);
    CHECK(mixed != Scalar(3));
    CHECK((t / Scalar(2)) * Scalar(2) == t);
    CHECK_THROWS_AS(Scalar(1) / t, std::domain_error);
    CHECK_THROWS_AS(t + sym(make_vars({"u"}), "u"), std::invalid_argument);
}

TEST_CASE("mpoly string round shape") {
    VarTableRef vars = make_vars({"a", "s"});
    MPoly p = MPoly::variable(vars, "a").pow(2) * MPoly::variable(vars, "s") -
              MPoly::constant(vars, Rational(1, 2));
    CHECK(p.str() == "a^2*s - 1/2");
    CHECK(MPoly::zero(vars).str() == "0");
}
