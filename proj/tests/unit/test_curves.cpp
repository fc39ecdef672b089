#include "doctest.h"

#include <numeric>

#include "sea/curves.hpp"
#include "sea/error.hpp"

using namespace sea;

TEST_CASE("genus formula") {
    CHECK(genus_formula(2, 6) == 2);
    CHECK(genus_formula(2, 11) == 5);
    CHECK(genus_formula(3, 4) == 3);
    CHECK(genus_formula(11, 2) == 5);
    CHECK(hurwitz_bound(5) == 336);
}

TEST_CASE("genus formula symmetry and coprime case") {
    for (int n = 2; n <= 50; ++n) {
        for (int d = 2; d <= 50; ++d) {
            CHECK(genus_formula(n, d) == genus_formula(d, n));
            if (std::gcd(n, d) == 1) CHECK(2 * genus_formula(n, d) == (n - 1) * (d - 1));
        }
    }
}

TEST_CASE("curve construction") {
    const auto c = make_curve(2, UnivariatePoly({1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}));
    CHECK(c.genus() == 5);
    CHECK(c.to_json() == R"({"n":2,"f":"x^11+1","genus":5})");
    CHECK_THROWS_AS(make_curve(1, UnivariatePoly({1, 0, 1})), PreconditionError);
    CHECK_THROWS_AS(make_curve(2, UnivariatePoly({1, 2, 1})), PreconditionError);
    CHECK(make_curve(2, UnivariatePoly({1, 0, 1})).low_genus());
}

TEST_CASE("signature parsing and printing") {
    const Signature s = Signature::parse("2^3,3^2");
    CHECK(s.size() == 5);
    CHECK(s.str() == "2^3,3^2");
    CHECK(Signature::parse("3,2,2,3,2") == s);
    CHECK_THROWS(Signature::parse("1,2"));
    CHECK_THROWS(Signature::parse("2^0"));
}

TEST_CASE("Riemann-Hurwitz residual") {
    CHECK(rh_residual(5, 120, Signature({{2, 1}, {3, 1}, {10, 1}})) == 0);
    CHECK(rh_residual(5, 22, Signature({{11, 1}, {22, 1}})) != 0);
    CHECK_THROWS_AS(rh_residual(5, 22, Signature({{3, 1}})), PreconditionError);
}

TEST_CASE("signature completion") {
    const Completion a = complete_signature(5, 4, Signature({{2, 7}}));
    CHECK(a.status == CompletionStatus::completed);
    CHECK(a.signature == Signature({{2, 8}}, true));

    const Completion b = complete_signature(5, 8, Signature({{2, 6}}));
    CHECK(b.status == CompletionStatus::already_complete);
    CHECK(b.signature.size() == 6);

    const Completion c = complete_signature(6, 26, Signature({{13, 1}, {26, 1}}));
    CHECK(c.status == CompletionStatus::completed);
    CHECK(c.signature == Signature({{2, 1}, {13, 1}, {26, 1}}, true));
    CHECK(c.ok());

    CHECK_FALSE(complete_signature(5, 7, Signature({{7, 1}})).ok());
}

TEST_CASE("group orders") {
    CHECK(full_group_order(2, {ReducedKind::A5, 0}) == 120);
    CHECK(full_group_order(2, {ReducedKind::S4, 0}) == 48);
    CHECK(full_group_order(3, {ReducedKind::A4, 0}) == 36);
    CHECK(full_group_order(2, {ReducedKind::D2m, 7}) == 28);
    CHECK(full_group_order(2, {ReducedKind::Cm, 11}) == 22);
    CHECK_THROWS_AS(full_group_order(2, {ReducedKind::Cm, 0}), PreconditionError);
    CHECK(ReducedGroup{ReducedKind::D2m, 7}.str() == "D14");
    CHECK(reduced_kind_from_string("S4") == ReducedKind::S4);
}
