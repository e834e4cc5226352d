#pragma once

#include <string>
#include <vector>

#include "conifold/rational.hpp"
#include "conifold/sheaf.hpp"

namespace conifold {

// Wrapped chords between (wrapped images of) L0 and L1, labeled like the
// sheaf-side basis: sector, index a (integer or half-integer as 2a), and
// fiber indices i1, i2. The slope context is carried separately.
struct ChordLabel {
    Sector sector;
    long long twoA;
    long long i1;
    long long i2;
    Rational a() const { return Rational(twoA, 2); }
    friend auto operator<=>(const ChordLabel&, const ChordLabel&) = default;
    std::string str() const;
};

using ChordElement = LinearCombination<ChordLabel>;

// All chords of the given sector for wrapping slope n >= 1:
// a in [-n+1, n-1] (shifted into Z + 1/2 for mixed sectors),
// i1, i2 in [0, floor((n - |a|)/2)].
std::vector<ChordLabel> chord_labels(Sector sector, long long n);

// Triangle in the universal cover of the cylinder, the strip [-1,1] x R.
struct StripTriangle {
    // vertex = (s, t) with exact rational coordinates
    std::array<std::pair<Rational, Rational>, 3> v;
    StripTriangle(std::array<std::pair<Rational, Rational>, 3> vertices);
};

// Lift of the composition triangle: the target line at height eps_tgt/2,
// the middle line with slope n through the g-chord, the source line with
// slope m + n. Vertices: (b/n, h), (a/m, n a/m - b + h), ((a+b)/(m+n), h)
// with h = eps_tgt/2. Throws when the three points are collinear.
StripTriangle triangle_vertices(long long m, long long n, const Rational& a, const Rational& b,
                                Sector fs, Sector gs);

struct HitCount {
    long long d1 = 0;  // lattice (0, -1/4 + Z), paired with the i1 index
    long long d2 = 0;  // lattice (0, +1/4 + Z), paired with i2
    friend bool operator==(const HitCount&, const HitCount&) = default;
};

// Exact number of points of the two discriminant lattices inside the closed
// triangle minus its vertices. A lattice point at a vertex is an error.
HitCount count_discriminant_hits(const StripTriangle& t);

// Piecewise closed form for the hit counts, fixed by the slice analysis of
// the triangle: zero for a b >= 0, otherwise counts of theta + Z in an
// interval of length min(|a|,|b|) anchored at the middle line's height class.
HitCount closed_form_hits(const Rational& a, const Rational& b, Sector fs, Sector gs);

// Triangle product of chords: the binomial sum over the hit counts of the
// unique triangle, with output index a + b.
ChordElement pascaleff_product(const ChordLabel& g, const ChordLabel& f);

struct RingIsomReport {
    long long affineOffset = 0;  // twoA shift applied to Q (and -shift to R)
    long long pairsChecked = 0;
    long long mismatches = 0;
    bool localized = false;
    std::vector<std::string> failures;  // capped sample
    bool pass() const { return mismatches == 0; }
};

// Exhaustive comparison of the wrapped triangle products against the
// sheaf-side closed form under p -> P, q -> Q, r -> R, over all composable
// chord pairs with slopes <= maxSlope. The affine offset between mixed-
// sector labels is determined by scan and reported. The localized variant
// repeats the comparison on the index window i1, i2 in [-2, 3] against both
// the closed form and the Laurent oracle.
RingIsomReport verify_ring_isomorphism(long long maxSlope, bool localized);

}  // namespace conifold
