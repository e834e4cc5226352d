#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <functional>
#include <iosfwd>

namespace conifold {

struct ExactOverflow : std::runtime_error {
    explicit ExactOverflow(const std::string& what) : std::runtime_error(what) {}
};

// Exact rational with 64-bit numerator/denominator, always reduced, den > 0.
// Every operation checks for overflow through 128-bit intermediates and
// throws ExactOverflow instead of silently wrapping. Coefficients in this
// project are tiny (binomial products); the wide-integer path geometry uses
// BigRat instead.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    Rational operator-() const { return Rational(unchecked{}, -num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { *this = *this + o; return *this; }
    Rational& operator-=(const Rational& o) { *this = *this - o; return *this; }
    Rational& operator*=(const Rational& o) { *this = *this * o; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator<=(const Rational& a, const Rational& b) { return a < b || a == b; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    // Largest integer <= value.
    long long floor() const;
    std::string str() const;

  private:
    struct unchecked {};
    Rational(unchecked, long long n, long long d) : num_(n), den_(d) {}
    void normalize();
    long long num_;
    long long den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// n choose k as an exact Rational (integer-valued), 0 if k < 0 or k > n.
Rational binomial(long long n, long long k);

}  // namespace conifold

template <>
struct std::hash<conifold::Rational> {
    size_t operator()(const conifold::Rational& r) const {
        size_t h = std::hash<long long>()(r.num());
        return h ^ (std::hash<long long>()(r.den()) + 0x9e3779b97f4a7c15ULL + (h << 6));
    }
};
