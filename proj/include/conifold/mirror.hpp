#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "conifold/rational.hpp"

namespace conifold {

// Laurent polynomials over the wall-crossing variables
//   u, v, z1, z2, z3, z4, zh1, zh3, w1, w2   (zh = z-hat)
namespace wc {

constexpr int kNumVars = 10;
enum Var { U = 0, V, Z1, Z2, Z3, Z4, ZH1, ZH3, W1, W2 };
extern const std::array<const char*, kNumVars> kVarNames;

using Exponents = std::array<int, kNumVars>;

class LaurentExpression {
  public:
    LaurentExpression() = default;
    static LaurentExpression constant(const Rational& c);
    static LaurentExpression variable(Var v, int power = 1);

    void add(const Exponents& e, const Rational& c);
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    friend LaurentExpression operator+(const LaurentExpression& a, const LaurentExpression& b);
    friend LaurentExpression operator-(const LaurentExpression& a, const LaurentExpression& b);
    friend LaurentExpression operator*(const LaurentExpression& a, const LaurentExpression& b);
    LaurentExpression operator-() const;
    friend bool operator==(const LaurentExpression&, const LaurentExpression&) = default;

    LaurentExpression pow(int k) const;  // negative k only for single-term units
    std::string str() const;

  private:
    std::map<Exponents, Rational> terms_;
};

struct SubstitutionMap {
    std::string name;
    std::map<Var, LaurentExpression> images;
};

// Applies s to every variable of e (variables not in the map stay fixed).
// Negative powers of an image are formed by inverting it, which requires the
// image to be a single Laurent term; otherwise the substitution leaves the
// Laurent ring and an exception is thrown.
LaurentExpression substitute(const LaurentExpression& e, const SubstitutionMap& s);

// Wall-crossing data: wall I sends u -> zh1 (1 + w1) with w1 = zh3/zh1;
// wall II sends zh1 -> z1 (1 + w2), zh3 -> z3 (1 + w2) with w2 = z2/z1.
SubstitutionMap wall_crossing_I();
SubstitutionMap wall_crossing_II();
// Expansion of the auxiliary variables w1, w2 into hatted/unhatted z's.
SubstitutionMap w_expansions();

struct WallCrossReport {
    struct Check {
        std::string name;
        bool pass;
        std::string detail;
    };
    std::vector<Check> checks;
    bool all_pass() const;
};

// (i) the composed image of u is z1 + z2 + z3 + z2 z3/z1, (ii) that image
// equals the four-term superpotential after z2 z3 / z1 = z4, and (iii) the
// small-r superpotential W = u becomes the large-r one. Also records that
// composing the walls in the other order does not reproduce the display.
WallCrossReport verify_wall_crossing();

}  // namespace wc
}  // namespace conifold
