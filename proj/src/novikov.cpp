#include "conifold/novikov.hpp"

#include <ostream>
#include <sstream>

namespace conifold {

NovikovScalar operator+(const NovikovScalar& a, const NovikovScalar& b) {
    NovikovScalar r = a;
    for (const auto& [k, c] : b.terms_) {
        auto it = r.terms_.find(k);
        if (it == r.terms_.end()) {
            r.terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

NovikovScalar operator*(const NovikovScalar& a, const NovikovScalar& b) {
    NovikovScalar r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            NovikovScalar::Key k{ka.first + kb.first, ka.second + kb.second};
            auto it = r.terms_.find(k);
            if (it == r.terms_.end()) {
                Rational c = ca * cb;
                if (!c.is_zero()) r.terms_.emplace(k, c);
            } else {
                it->second += ca * cb;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    return r;
}

NovikovScalar NovikovScalar::operator-() const {
    NovikovScalar r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

NovikovScalar NovikovScalar::pow(long long k) const {
    NovikovScalar acc(Rational(1));
    for (long long i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

std::string NovikovScalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Rational coeff = c;
        if (!first) {
            os << (coeff.sign() < 0 ? " - " : " + ");
            if (coeff.sign() < 0) coeff = -coeff;
        }
        first = false;
        bool unitAlpha = (k.first == 0);
        bool unitT = k.second.is_zero();
        bool wroteCoeff = false;
        if (!(coeff == Rational(1)) || (unitAlpha && unitT)) {
            os << coeff.str();
            wroteCoeff = true;
        }
        if (!unitAlpha) {
            if (wroteCoeff) os << "*";
            os << "alpha";
            if (k.first != 1) os << "^" << k.first;
            wroteCoeff = true;
        }
        if (!unitT) {
            if (wroteCoeff) os << "*";
            os << "T^" << k.second.str();
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const NovikovScalar& s) { return os << s.str(); }

}  // namespace conifold
