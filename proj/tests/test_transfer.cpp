#include <doctest.h>

#include "conifold/merkulov.hpp"

using namespace conifold;

namespace {

struct Model {
    DgCategoryPresentation D;
    HomotopyData H;
};

const Model& builtin() {
    static Model m = [] {
        auto [D, H] = builtin_vanishing_cycle_model();
        return Model{D, H};
    }();
    return m;
}

Chain single(const DgCategoryPresentation& D, const char* name) {
    return Chain(D.find(name));
}

}  // namespace

TEST_CASE("builtin model dimensions match the displayed bases") {
    const auto& [D, H] = builtin();
    int homCount[2][2] = {{0, 0}, {0, 0}};
    for (const auto& g : D.gens) ++homCount[g.source][g.target];
    CHECK(homCount[0][0] == 8);   // C*(S^3)
    CHECK(homCount[1][1] == 8);
    CHECK(homCount[1][0] == 12);  // two solid-torus summands
    CHECK(homCount[0][1] == 4);   // relative classes, d = 0
    // degrees of the relative classes
    CHECK(D.gens[D.find("<z")].degree == 1);
    CHECK(D.gens[D.find("<yz")].degree == 2);
    CHECK(D.gens[D.find("<w")].degree == 1);
    CHECK(D.gens[D.find("<xw")].degree == 2);
    // d(x1) = z1 in the first summand
    CHECK(D.d_of(single(D, "x1")) == single(D, "z1"));
}

TEST_CASE("builtin model passes validation") {
    const auto& [D, H] = builtin();
    DgValidationReport rep = validate_dg_data(D, H);
    for (const auto& v : rep.violations) MESSAGE(v);
    CHECK(rep.pass());
    CHECK(rep.checks > 2000);
}

TEST_CASE("validation flags removed homotopy entries") {
    auto [D, H] = builtin();
    H.qMap.erase(D.find("z_0"));  // break id - [d,Q] = P on x_0/z_0
    DgValidationReport rep = validate_dg_data(D, H);
    CHECK_FALSE(rep.pass());
}

TEST_CASE("validation flags a broken differential") {
    auto [D, H] = builtin();
    D.differential[D.find("z_0")] = single(D, "yz_0");  // d^2 != 0 via x_0
    DgValidationReport rep = validate_dg_data(D, H);
    CHECK_FALSE(rep.pass());
}

TEST_CASE("the product facts used by the transfer computation") {
    const auto& [D, H] = builtin();
    CHECK(D.prod(single(D, "u1"), single(D, "<z")) == single(D, "z_0"));
    CHECK(D.prod(single(D, "<z"), single(D, "u2")).is_zero());
    CHECK(D.prod(single(D, "x_0"), single(D, "u2")) == single(D, "x2"));
    CHECK(H.q_of(single(D, "z_0")) == single(D, "x_0"));
}

TEST_CASE("lambda values from the recursion") {
    const auto& [D, H] = builtin();
    LambdaCalculator calc(D, H);
    // lambda2(u1, <z) = z
    CHECK(calc.lambda({D.find("u1"), D.find("<z")}) == single(D, "z_0"));
    // lambda2(<z, u2) = 0
    CHECK(calc.lambda({D.find("<z"), D.find("u2")}).is_zero());
    // lambda3(u1, <z, u2) = x2 at chain level
    CHECK(calc.lambda({D.find("u1"), D.find("<z"), D.find("u2")}) == single(D, "x2"));
}

TEST_CASE("transferred m3 equals the four stated values") {
    const auto& [D, H] = builtin();
    TransferResult t = merkulov_transfer(D, H, 3);
    const auto& P = t.presentation;
    auto rep = [&](const char* n) { return P.find_gen(std::string("[") + n + "]"); };
    auto raw = [&](std::initializer_list<const char*> names) {
        std::vector<int> tuple;
        for (const char* n : names) tuple.push_back(rep(n));
        auto it = t.rawOps.find(tuple);
        return it == t.rawOps.end() ? LinearCombination<int>() : it->second;
    };
    CHECK(raw({"u1", "<z", "u2"}) == LinearCombination<int>(rep("x2")));
    CHECK(raw({"<w", "u1", "<z"}) == LinearCombination<int>(rep("<yz")));
    CHECK(raw({"u2", "<w", "u1"}) == LinearCombination<int>(rep("y1"), Rational(-1)));
    CHECK(raw({"<z", "u2", "<w"}) == LinearCombination<int>(rep("<xw"), Rational(-1)));
}

TEST_CASE("transferred m2 is the induced product on cohomology") {
    const auto& [D, H] = builtin();
    TransferResult t = merkulov_transfer(D, H, 2);
    // representatives are P-fixed, so m2 = P(rep * rep); check against an
    // independent recomputation
    for (const auto& [tuple, val] : t.rawOps) {
        if (tuple.size() != 2) continue;
        Chain direct = p_of(D, H, D.prod(H.representatives[tuple[0]],
                                         H.representatives[tuple[1]]));
        Chain viaOps;
        for (const auto& [r, c] : val.terms()) viaOps.add(H.representatives[r], c);
        CHECK(direct == viaOps);
    }
}

TEST_CASE("higher transferred operations vanish up to arity 8") {
    const auto& [D, H] = builtin();
    TransferResult t = merkulov_transfer(D, H, 8);
    std::vector<std::string> bad = nonvanishing_higher_ops(t, 4, 8);
    for (const auto& s : bad) MESSAGE(s);
    CHECK(bad.empty());
}

TEST_CASE("redressed transferred structure passes the relation checker") {
    const auto& [D, H] = builtin();
    TransferResult t = merkulov_transfer(D, H, 8);
    AInfCheckReport rep = check_ainfinity_relations(t.presentation, 8);
    for (const auto& v : rep.violations) MESSAGE(v.what);
    CHECK(rep.pass());
}

TEST_CASE("transfer is stable under rescaling a chain generator") {
    auto [D, H] = builtin();
    TransferResult before = merkulov_transfer(D, H, 3);

    // change basis e_z' = lam * e_z for z_0: coefficients gain lam per
    // z-input and 1/lam on a z-output
    const int gz = D.find("z_0");
    const Rational lam(3);
    auto outFix = [&](const Chain& v) {
        Chain out;
        for (const auto& [g, c] : v.terms()) out.add(g, g == gz ? c / lam : c);
        return out;
    };
    auto inFactor = [&](int g) { return g == gz ? lam : Rational(1); };

    std::map<int, Chain> newDiff;
    for (const auto& [g, v] : D.differential) newDiff[g] = inFactor(g) * outFix(v);
    D.differential = newDiff;
    std::map<std::pair<int, int>, Chain> newProd;
    for (const auto& [gf, v] : D.product)
        newProd[gf] = (inFactor(gf.first) * inFactor(gf.second)) * outFix(v);
    D.product = newProd;
    std::map<int, Chain> newQ;
    for (const auto& [g, v] : H.qMap) newQ[g] = inFactor(g) * outFix(v);
    H.qMap = newQ;
    for (auto& r : H.representatives) r = outFix(r);

    DgValidationReport val = validate_dg_data(D, H);
    for (const auto& v : val.violations) MESSAGE(v);
    REQUIRE(val.pass());
    TransferResult after = merkulov_transfer(D, H, 3);
    // z_0 is not a representative, so the transferred constants are unchanged
    CHECK(before.rawOps == after.rawOps);
}
