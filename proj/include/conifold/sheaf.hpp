#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "conifold/lincomb.hpp"
#include "conifold/novikov.hpp"
#include "conifold/rational.hpp"

namespace conifold {

// Objects of the two-object category: 0 = O, 1 = O(1).
// Hom sectors between them. PP is also used for the localized algebra on X0.
enum class Sector : uint8_t {
    PP = 0,   // O -> O
    PpPp = 1, // O(1) -> O(1)
    Q = 2,    // O -> O(1)
    R = 3,    // O(1) -> O
};

int sector_source(Sector s);
int sector_target(Sector s);
Sector sector_of(int source, int target);
std::string sector_name(Sector s);

// Monomial basis element of one of the four Hom spaces, indexed by
// (a, i1, i2). a is an integer for PP/P'P' and a half-integer (odd multiple
// of 1/2) for Q/R; twoA stores 2a so everything stays integral. In the
// standard ring i1, i2 >= 0; the localized algebra on X0 allows i1, i2 in Z.
struct BasisMorphism {
    Sector sector;
    long long twoA;
    long long i1;
    long long i2;

    Rational a() const { return Rational(twoA, 2); }
    friend auto operator<=>(const BasisMorphism&, const BasisMorphism&) = default;
    std::string str() const;
};

using SheafElement = LinearCombination<BasisMorphism>;

// Polynomial in the homogeneous coordinates (x, y, t1, t2) of the resolved
// conifold, graded by the torus weight (x, y count +1 and t1, t2 count -1).
struct Monomial {
    long long x, y, t1, t2;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

struct CoordinatePolynomial {
    long long weight = 0;
    std::map<Monomial, Rational> coeffs;

    void add(const Monomial& m, const Rational& c);
    bool is_zero() const { return coeffs.empty(); }
    friend bool operator==(const CoordinatePolynomial&, const CoordinatePolynomial&) = default;
    std::string str() const;
};

CoordinatePolynomial poly_mul(const CoordinatePolynomial& a, const CoordinatePolynomial& b);

// b as a section in coordinates; requires i1, i2 >= 0.
CoordinatePolynomial basis_to_polynomial(const BasisMorphism& b);

// Inverse of basis_to_polynomial extended linearly: rewrites each monomial
// as (prefactor) u^alpha v^beta (1+w1)^gamma (1+w2)^delta, removes mixed
// u*v via u v = (1+w1)(1+w2) and expands binomially. Throws on a weight
// mismatch with the requested sector.
SheafElement expand_in_basis(const CoordinatePolynomial& poly, Sector sector);

// Ground-truth product: multiply coordinate polynomials, then expand.
SheafElement compose_oracle(const BasisMorphism& g, const BasisMorphism& f);

// Same product in the localized ring (i1, i2 in Z): the oracle works with
// Laurent exponents of w1, w2 and positive powers of (1+w1), (1+w2).
SheafElement compose_oracle_localized(const BasisMorphism& g, const BasisMorphism& f);

// Closed-form composition. The same-sector case is eq. P*P with
// k = min(|a|,|b|) for opposite signs; mixed sectors use the asymmetric
// (k1, k2) pair fixed by the coordinate ring (see closed_form_k).
SheafElement compose_closed_form(const BasisMorphism& g, const BasisMorphism& f);
SheafElement compose_closed_form(const SheafElement& g, const SheafElement& f);

// The (k1, k2) binomial depths used by compose_closed_form, exposed for the
// cross-checks. k1 feeds the i1 shift, k2 the i2 shift.
std::pair<Rational, Rational> closed_form_k(Sector fs, Sector gs, const Rational& a,
                                            const Rational& b);
// Binomial depths of the composition formula as printed (one k for both
// sums in the mixed P-Q / P-R case). Differences against closed_form_k are
// reported, never asserted.
std::pair<Rational, Rational> printed_form_k(Sector fs, Sector gs, const Rational& a,
                                             const Rational& b);

bool sectors_composable(Sector fs, Sector gs);
Sector composed_sector(Sector fs, Sector gs);

// Quiver generators of End(O + O(1)).
BasisMorphism arrow_x();   // Q_{-1/2,0,0}
BasisMorphism arrow_y();   // Q_{+1/2,0,0}
BasisMorphism arrow_t1();  // R_{-1/2,0,0}
BasisMorphism arrow_t2();  // R_{+1/2,0,0}

struct RelationReport {
    struct Entry {
        std::string name;
        bool pass;
        std::string lhs, rhs;
    };
    std::vector<Entry> entries;
    bool all_pass() const;
};

// Checks the four quiver relations (x t1 y = y t1 x, ...) by evaluating both
// path words through compose_closed_form.
RelationReport relation_check();

// The point p_{lambda,alpha} = (u,v,w1,w2,[x:y]) = (0,0,-1,alpha T^lambda,[0:1]).
struct SkyscraperPoint {
    Rational lambda;  // > 0
};

// Evaluation of a morphism at p_{lambda,alpha} in the chart y = 1, where
// t1 = 1 + alpha T^lambda and x = t2 = 0.
NovikovScalar skyscraper_action(const BasisMorphism& b, const SkyscraperPoint& p);
NovikovScalar skyscraper_action(const SheafElement& e, const SkyscraperPoint& p);

}  // namespace conifold
