#pragma once

#include <map>
#include <string>
#include <utility>

#include "conifold/rational.hpp"

namespace conifold {

// Finite formal sum  sum c * alpha^m * T^e  with c rational, m an integer
// power of the formal unit symbol alpha, and e a rational T-exponent.
// Normal form: no zero coefficients, keys pairwise distinct.
class NovikovScalar {
  public:
    // (alpha exponent, T exponent) -> coefficient
    using Key = std::pair<long long, Rational>;

    NovikovScalar() = default;
    NovikovScalar(const Rational& c) {
        if (!c.is_zero()) terms_[{0, Rational(0)}] = c;
    }
    static NovikovScalar monomial(const Rational& c, long long alphaExp, const Rational& tExp) {
        NovikovScalar s;
        if (!c.is_zero()) s.terms_[{alphaExp, tExp}] = c;
        return s;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Rational>& terms() const { return terms_; }

    friend NovikovScalar operator+(const NovikovScalar& a, const NovikovScalar& b);
    friend NovikovScalar operator*(const NovikovScalar& a, const NovikovScalar& b);
    NovikovScalar operator-() const;
    friend NovikovScalar operator-(const NovikovScalar& a, const NovikovScalar& b) {
        return a + (-b);
    }
    friend bool operator==(const NovikovScalar& a, const NovikovScalar& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const NovikovScalar& a, const NovikovScalar& b) { return !(a == b); }

    NovikovScalar pow(long long k) const;  // k >= 0

    std::string str() const;

  private:
    std::map<Key, Rational> terms_;
};

std::ostream& operator<<(std::ostream& os, const NovikovScalar& s);

}  // namespace conifold
