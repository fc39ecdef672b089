#include "doctest.h"

#include "oracles.hpp"
#include "generators.hpp"
#include "sea/error.hpp"
#include "sea/form.hpp"
#include "sea/scalar.hpp"
#include "sea/univariate.hpp"

using namespace sea;

TEST_CASE("scalar parse and print round-trip") {
    for (const char* text : {"0", "-3", "7/2", "sqrt(-3)", "-sqrt(5)", "1/2+3/4*sqrt(-7)", "266*sqrt(34)"}) {
        CHECK(Scalar::parse(text).str() == text);
    }
    CHECK(Scalar::parse("4/6") == Scalar(Rational(2, 3)));
    CHECK_THROWS_AS(Scalar::parse("sqrt(8)"), PreconditionError);
    CHECK_THROWS_AS(Scalar::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Scalar::parse("abc"), ParseError);
}

TEST_CASE("quadratic extension arithmetic") {
    const Scalar s = Scalar::sqrt_of(-3);
    CHECK(s * s == Scalar(-3));
    CHECK((s - s).is_zero());
    CHECK((s - s).is_rational());
    CHECK((Scalar(1) + s) * (Scalar(1) - s) == Scalar(4));
    CHECK((Scalar(1) + s).norm() == 4);
    CHECK(Scalar(1) / (Scalar(1) + s) == (Scalar(1) - s) / Scalar(4));
    CHECK_THROWS_AS(s + Scalar::sqrt_of(5), FieldMismatchError);
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), PreconditionError);
}

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
}

TEST_CASE("form degree is part of the value") {
    CHECK(BinaryForm(4).is_zero());
    CHECK_FALSE(BinaryForm(4) == BinaryForm(2));
    CHECK_THROWS_AS(make_form(3, {1, 2}), PreconditionError);
    const BinaryForm f = BinaryForm::from_descending({1, 2, 3});
    CHECK(f[2] == Scalar(1));
    CHECK(f[0] == Scalar(3));
}

TEST_CASE("partial derivatives") {
    // F = X^3 Z^2, dF/dX = 3 X^2 Z^2, d^2F/dXdZ = 6 X^2 Z
    const BinaryForm f = BinaryForm::monomial(3, 2);
    CHECK(partial_derivative(f, Var::X, 1) == BinaryForm::monomial(2, 2, 3));
    CHECK(mixed_partial(f, 1, 1) == BinaryForm::monomial(2, 1, 6));
    CHECK(partial_derivative(f, Var::Z, 3) == BinaryForm(2));
    CHECK(partial_derivative(f, Var::X, 6) == BinaryForm(0));
}

TEST_CASE("moebius action composes on the right") {
    testing::Gen gen(11);
    for (int t = 0; t < 20; ++t) {
        const BinaryForm f = gen.form(5, 6);
        const Matrix2 m = gen.invertible();
        const Matrix2 n = gen.invertible();
        CHECK(moebius_act(m, moebius_act(n, f)) == moebius_act(n * m, f));
        CHECK(moebius_act(Matrix2::identity(), f) == f);
    }
    CHECK_THROWS_AS(moebius_act(Matrix2(1, 2, 2, 4), BinaryForm::monomial(1, 1)), PreconditionError);
}

TEST_CASE("homogenize and dehomogenize") {
    const UnivariatePoly p({1, 0, 3});
    const BinaryForm f = homogenize(p, 5);
    CHECK(f.degree() == 5);
    CHECK(dehomogenize(f) == p);
    CHECK_THROWS_AS(homogenize(p, 1), PreconditionError);
}

TEST_CASE("gcd and squarefreeness") {
    const UnivariatePoly a({-1, 0, 1});  // x^2 - 1
    const UnivariatePoly b({1, 1});      // x + 1
    CHECK(poly_gcd(a, b) == b);
    CHECK(is_squarefree(a));
    CHECK_FALSE(is_squarefree(a * b));
    // X^2 Z^4 + X^6 has a double root at X = 0; X Z^5 + X^6 does not.
    CHECK_FALSE(is_squarefree(BinaryForm::from_ascending({0, 0, 1, 0, 0, 0, 1})));
    CHECK(is_squarefree(BinaryForm::from_ascending({0, 1, 0, 0, 0, 0, 1})));
    // Degree drop means a root at infinity; a double one is not squarefree.
    CHECK(is_squarefree(BinaryForm::from_ascending({1, 0, 0, 0, 1, 0})));
    CHECK_FALSE(is_squarefree(BinaryForm::from_ascending({1, 0, 0, 1, 0, 0})));
}

TEST_CASE("small resultants and discriminants") {
    CHECK(discriminant(UnivariatePoly({1, 2, 3})) == Scalar(-8));  // b^2 - 4ac
    CHECK(discriminant(UnivariatePoly({1, 0, 0, 1})) == Scalar(-27));
    CHECK(resultant(UnivariatePoly({-1, 1}), UnivariatePoly({-2, 1})) == Scalar(-1));
    CHECK(determinant({{2, 1}, {7, 4}}) == Scalar(1));
}

TEST_CASE("resultant agrees with a root-product oracle") {
    testing::Gen gen(5);
    for (int t = 0; t < 40; ++t) {
        const UnivariatePoly p = gen.poly(static_cast<int>(gen.integer(1, 6)), 5);
        const UnivariatePoly q = gen.poly(static_cast<int>(gen.integer(1, 6)), 5);
        const double exact = resultant(p, q).approx_real();
        const auto approx = testing::resultant_by_roots(p, q);
        CHECK(testing::close(exact, approx.real(), 1e-6));
        CHECK(std::abs(approx.imag()) <= 1e-6 * std::max(1.0, std::abs(exact)));
    }
}
