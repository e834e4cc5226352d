#pragma once

#include <map>
#include <sstream>
#include <string>

#include "conifold/rational.hpp"

namespace conifold {

// Finite formal sum of basis labels with exact coefficients. Labels are any
// ordered value type; zero coefficients are never stored, so operator== is
// exact equality of normal forms.
template <typename Label, typename Coeff = Rational>
class LinearCombination {
  public:
    LinearCombination() = default;
    LinearCombination(const Label& l, const Coeff& c = Coeff(1)) { add(l, c); }

    void add(const Label& l, const Coeff& c) {
        if (c == Coeff(0)) return;
        auto it = terms_.find(l);
        if (it == terms_.end()) {
            terms_.emplace(l, c);
        } else {
            it->second += c;
            if (it->second == Coeff(0)) terms_.erase(it);
        }
    }

    void add(const LinearCombination& o, const Coeff& scale = Coeff(1)) {
        if (scale == Coeff(0)) return;
        for (const auto& [l, c] : o.terms_) add(l, c * scale);
    }

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const std::map<Label, Coeff>& terms() const { return terms_; }

    Coeff coeff(const Label& l) const {
        auto it = terms_.find(l);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    LinearCombination operator-() const {
        LinearCombination r;
        for (const auto& [l, c] : terms_) r.terms_.emplace(l, Coeff(0) - c);
        return r;
    }
    friend LinearCombination operator+(const LinearCombination& a, const LinearCombination& b) {
        LinearCombination r = a;
        r.add(b);
        return r;
    }
    friend LinearCombination operator-(const LinearCombination& a, const LinearCombination& b) {
        LinearCombination r = a;
        r.add(-b);
        return r;
    }
    friend LinearCombination operator*(const Coeff& c, const LinearCombination& a) {
        LinearCombination r;
        r.add(a, c);
        return r;
    }
    friend bool operator==(const LinearCombination& a, const LinearCombination& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LinearCombination& a, const LinearCombination& b) {
        return !(a == b);
    }

    template <typename Fmt>
    std::string str(Fmt&& fmt) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [l, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            std::ostringstream cs;
            cs << c;
            if (cs.str() != "1") os << cs.str() << "*";
            os << fmt(l);
        }
        return os.str();
    }

  private:
    std::map<Label, Coeff> terms_;
};

}  // namespace conifold
