#include "doctest.h"

#include "generators.hpp"
#include "oracles.hpp"
#include "sea/error.hpp"
#include "sea/transvectant.hpp"

using namespace sea;

TEST_CASE("transvectant matches the floating-point grid oracle") {
    testing::Gen gen(21);
    for (int t = 0; t < 60; ++t) {
        const int n = static_cast<int>(gen.integer(1, 9));
        const int m = static_cast<int>(gen.integer(1, 9));
        const int r = static_cast<int>(gen.integer(0, std::min(n, m)));
        const BinaryForm f = gen.rational_form(n, 7, 3);
        const BinaryForm g = gen.rational_form(m, 7, 3);
        const BinaryForm h = transvect(f, g, r);
        const auto approx = testing::transvect_double(f, g, r);
        REQUIRE(static_cast<int>(approx.size()) == h.degree() + 1);
        for (int i = 0; i <= h.degree(); ++i) CHECK(testing::close(h[i].approx_real(), approx[i], 1e-9));
    }
}

TEST_CASE("first transvectant is the Jacobian over nm") {
    // (f,g)^1 = (f_X g_Z - f_Z g_X) / (n m)
    const BinaryForm f = BinaryForm::from_ascending({1, 2, 3});
    const BinaryForm g = BinaryForm::from_ascending({0, 1, 0, 5});
    const BinaryForm jac = partial_derivative(f, Var::X, 1) * partial_derivative(g, Var::Z, 1) -
                           partial_derivative(f, Var::Z, 1) * partial_derivative(g, Var::X, 1);
    CHECK(transvect(f, g, 1) == Scalar(Rational(1, 6)) * jac);
}

TEST_CASE("transvectant symmetry") {
    testing::Gen gen(8);
    for (int t = 0; t < 20; ++t) {
        const BinaryForm f = gen.form(6, 5);
        const BinaryForm g = gen.form(4, 5);
        for (int r = 0; r <= 4; ++r) {
            const Scalar sign = r % 2 == 0 ? 1 : -1;
            CHECK(transvect(g, f, r) == sign * transvect(f, g, r));
        }
    }
}

TEST_CASE("transvectant preconditions") {
    const BinaryForm f = BinaryForm::monomial(2, 1);
    CHECK_THROWS_AS(transvect(f, f, 4), PreconditionError);
    CHECK_THROWS_AS(transvect(f, f, -1), PreconditionError);
    CHECK_THROWS_AS(transvect_scalar(f, f, 2), InternalError);
    CHECK(transvect_scalar(f, f, 3) == Scalar(0));
}

TEST_CASE("transvectant over a quadratic field") {
    const Scalar s = Scalar::sqrt_of(-3);
    const BinaryForm f = BinaryForm::from_ascending({1, s, 1});
    // (f,f)^2 = 2 a0 a2 - a1^2 / 2 for a quadratic
    CHECK(transvect(f, f, 2)[0] == Scalar(2) - s * s / Scalar(2));
    const BinaryForm g = BinaryForm::from_ascending({1, Scalar::sqrt_of(5), 1});
    CHECK_THROWS_AS(transvect(f, g, 1), FieldMismatchError);
}
