#include "conifold/rational.hpp"

#include <ostream>

namespace conifold {

namespace {

using int128 = __int128;

long long narrow(int128 v, const char* ctx) {
    if (v > int128(INT64_MAX) || v < int128(INT64_MIN))
        throw ExactOverflow(std::string("rational overflow in ") + ctx);
    return static_cast<long long>(v);
}

int128 gcd128(int128 a, int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

void Rational::normalize() {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        if (num_ == INT64_MIN || den_ == INT64_MIN)
            throw ExactOverflow("rational normalize");
        num_ = -num_;
        den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    num_ /= g;
    den_ /= g;
}

Rational operator+(const Rational& a, const Rational& b) {
    int128 n = int128(a.num_) * b.den_ + int128(b.num_) * a.den_;
    int128 d = int128(a.den_) * b.den_;
    int128 g = gcd128(n, d);
    if (g == 0) return Rational(0);
    return Rational(narrow(n / g, "add"), narrow(d / g, "add"));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    int128 n = int128(a.num_) * b.num_;
    int128 d = int128(a.den_) * b.den_;
    int128 g = gcd128(n, d);
    if (g == 0) return Rational(0);
    return Rational(narrow(n / g, "mul"), narrow(d / g, "mul"));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    int128 n = int128(a.num_) * b.den_;
    int128 d = int128(a.den_) * b.num_;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    int128 g = gcd128(n, d);
    if (g == 0) return Rational(0);
    return Rational(narrow(n / g, "div"), narrow(d / g, "div"));
}

bool operator<(const Rational& a, const Rational& b) {
    return int128(a.num_) * b.den_ < int128(b.num_) * a.den_;
}

long long Rational::floor() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return Rational(0);
    if (k > n - k) k = n - k;
    Rational acc(1);
    for (long long i = 0; i < k; ++i)
        acc = acc * Rational(n - i) / Rational(i + 1);
    return acc;
}

}  // namespace conifold
