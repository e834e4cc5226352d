#include <doctest.h>

#include <random>

#include "conifold/mirror.hpp"

using namespace conifold;
using namespace conifold::wc;

TEST_CASE("substitution of u under wall I") {
    LaurentExpression u = LaurentExpression::variable(U);
    LaurentExpression img = substitute(substitute(u, wall_crossing_I()), w_expansions());
    LaurentExpression want = LaurentExpression::variable(ZH1) + LaurentExpression::variable(ZH3);
    CHECK(img == want);
}

TEST_CASE("identity substitution") {
    LaurentExpression e = LaurentExpression::variable(Z1) * LaurentExpression::variable(Z2, -3) +
                          LaurentExpression::constant(Rational(5, 2));
    SubstitutionMap id;
    id.name = "identity";
    CHECK(substitute(e, id) == e);
}

TEST_CASE("wall II on zh1 + zh3") {
    LaurentExpression e = LaurentExpression::variable(ZH1) + LaurentExpression::variable(ZH3);
    LaurentExpression img = substitute(e, wall_crossing_II());
    LaurentExpression onePlusW2 =
        LaurentExpression::constant(Rational(1)) + LaurentExpression::variable(W2);
    LaurentExpression want =
        (LaurentExpression::variable(Z1) + LaurentExpression::variable(Z3)) * onePlusW2;
    CHECK(img == want);
}

TEST_CASE("substitute is a ring homomorphism on random expressions") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coeff(-3, 3), expo(-2, 2), pick(0, kNumVars - 1);
    SubstitutionMap s = wall_crossing_II();
    auto randomExpr = [&]() {
        LaurentExpression e;
        for (int t = 0; t < 3; ++t) {
            Exponents ex{};
            ex[pick(rng)] = expo(rng);
            ex[pick(rng)] += expo(rng);
            // variables with non-unit images stay in nonnegative powers so
            // the substitution does not leave the Laurent ring
            for (const auto& [v, img] : s.images)
                if (ex[v] < 0) ex[v] = -ex[v];
            e.add(ex, Rational(coeff(rng)));
        }
        return e;
    };
    for (int i = 0; i < 50; ++i) {
        LaurentExpression a = randomExpr(), b = randomExpr();
        CHECK(substitute(a * b, s) == substitute(a, s) * substitute(b, s));
        CHECK(substitute(a + b, s) == substitute(a, s) + substitute(b, s));
    }
}

TEST_CASE("inverting a non-unit sum is rejected") {
    LaurentExpression e = LaurentExpression::variable(Z1) + LaurentExpression::variable(Z2);
    CHECK_THROWS_AS(e.pow(-1), std::domain_error);
}

TEST_CASE("wall crossing verification") {
    WallCrossReport rep = verify_wall_crossing();
    CHECK(rep.all_pass());
    REQUIRE(rep.checks.size() == 5);
    CHECK(rep.checks[1].name == "composed image of u is z1 + z2 + z3 + z2*z3/z1");
}
