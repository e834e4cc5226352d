#include "conifold/sheaf.hpp"

#include <sstream>
#include <stdexcept>

namespace conifold {

int sector_source(Sector s) { return (s == Sector::PP || s == Sector::Q) ? 0 : 1; }
int sector_target(Sector s) { return (s == Sector::PP || s == Sector::R) ? 0 : 1; }

Sector sector_of(int source, int target) {
    if (source == 0) return target == 0 ? Sector::PP : Sector::Q;
    return target == 1 ? Sector::PpPp : Sector::R;
}

std::string sector_name(Sector s) {
    switch (s) {
        case Sector::PP: return "P";
        case Sector::PpPp: return "P'";
        case Sector::Q: return "Q";
        case Sector::R: return "R";
    }
    return "?";
}

std::string BasisMorphism::str() const {
    std::ostringstream os;
    os << sector_name(sector) << "_{" << a().str() << "," << i1 << "," << i2 << "}";
    return os.str();
}

void CoordinatePolynomial::add(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = coeffs.find(m);
    if (it == coeffs.end()) {
        coeffs.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs.erase(it);
    }
}

std::string CoordinatePolynomial::str() const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : coeffs) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        if (m.x) os << "*x^" << m.x;
        if (m.y) os << "*y^" << m.y;
        if (m.t1) os << "*t1^" << m.t1;
        if (m.t2) os << "*t2^" << m.t2;
    }
    return os.str();
}

CoordinatePolynomial poly_mul(const CoordinatePolynomial& a, const CoordinatePolynomial& b) {
    CoordinatePolynomial r;
    r.weight = a.weight + b.weight;
    for (const auto& [ma, ca] : a.coeffs)
        for (const auto& [mb, cb] : b.coeffs)
            r.add({ma.x + mb.x, ma.y + mb.y, ma.t1 + mb.t1, ma.t2 + mb.t2}, ca * cb);
    return r;
}

namespace {

CoordinatePolynomial poly_one(long long weight = 0) {
    CoordinatePolynomial p;
    p.weight = weight;
    p.add({0, 0, 0, 0}, Rational(1));
    return p;
}

CoordinatePolynomial poly_var(int which) {
    CoordinatePolynomial p;
    Monomial m{0, 0, 0, 0};
    switch (which) {
        case 0: m.x = 1; p.weight = 1; break;
        case 1: m.y = 1; p.weight = 1; break;
        case 2: m.t1 = 1; p.weight = -1; break;
        case 3: m.t2 = 1; p.weight = -1; break;
    }
    p.add(m, Rational(1));
    return p;
}

CoordinatePolynomial poly_pow(const CoordinatePolynomial& p, long long k) {
    CoordinatePolynomial r = poly_one(0);
    for (long long i = 0; i < k; ++i) r = poly_mul(r, p);
    return r;
}

// u = x t1, v = y t2, w1 = x t2 - 1, w2 = y t1 - 1
CoordinatePolynomial poly_u() { return poly_mul(poly_var(0), poly_var(2)); }
CoordinatePolynomial poly_v() { return poly_mul(poly_var(1), poly_var(3)); }
CoordinatePolynomial poly_w1() {
    CoordinatePolynomial p = poly_mul(poly_var(0), poly_var(3));
    p.add({0, 0, 0, 0}, Rational(-1));
    return p;
}
CoordinatePolynomial poly_w2() {
    CoordinatePolynomial p = poly_mul(poly_var(1), poly_var(2));
    p.add({0, 0, 0, 0}, Rational(-1));
    return p;
}

enum class Pref { One, X, Y, T1, T2 };

// Normal form (pref) u^uExp v^vExp (1+w1)^c1 (1+w2)^c2 w1^i1 w2^i2 with the
// mixed u*v pairs removed and the prefactor aligned with the residual u/v
// direction. Emits the binomial expansion into basis elements.
void emit_basis_terms(Sector sector, Pref pref, long long uExp, long long vExp, long long c1,
                      long long c2, long long i1, long long i2, const Rational& scale,
                      SheafElement& out) {
    long long red = std::min(uExp, vExp);
    uExp -= red;
    vExp -= red;
    c1 += red;
    c2 += red;
    if (pref == Pref::X && vExp > 0) {
        pref = Pref::Y;
        --vExp;
        ++c1;
    } else if (pref == Pref::Y && uExp > 0) {
        pref = Pref::X;
        --uExp;
        ++c2;
    } else if (pref == Pref::T1 && vExp > 0) {
        pref = Pref::T2;
        --vExp;
        ++c2;
    } else if (pref == Pref::T2 && uExp > 0) {
        pref = Pref::T1;
        --uExp;
        ++c1;
    }
    long long twoA = 0;
    switch (pref) {
        case Pref::One: twoA = 2 * (vExp - uExp); break;
        case Pref::X:
        case Pref::T1: twoA = -2 * uExp - 1; break;
        case Pref::Y:
        case Pref::T2: twoA = 2 * vExp + 1; break;
    }
    for (long long s1 = 0; s1 <= c1; ++s1) {
        Rational b1 = binomial(c1, s1);
        for (long long s2 = 0; s2 <= c2; ++s2)
            out.add(BasisMorphism{sector, twoA, i1 + s1, i2 + s2},
                    scale * b1 * binomial(c2, s2));
    }
}

}  // namespace

CoordinatePolynomial basis_to_polynomial(const BasisMorphism& b) {
    if (b.i1 < 0 || b.i2 < 0)
        throw std::invalid_argument("basis_to_polynomial requires the standard ring (i1, i2 >= 0)");
    bool half = (b.twoA % 2) != 0;
    bool mixed = (b.sector == Sector::Q || b.sector == Sector::R);
    if (half != mixed) throw std::invalid_argument("sector and index parity disagree");
    CoordinatePolynomial core;
    if (!mixed) {
        long long a = b.twoA / 2;
        core = a < 0 ? poly_pow(poly_u(), -a) : poly_pow(poly_v(), a);
    } else {
        CoordinatePolynomial pref =
            b.sector == Sector::Q ? (b.twoA < 0 ? poly_var(0) : poly_var(1))
                                  : (b.twoA < 0 ? poly_var(2) : poly_var(3));
        long long power = b.twoA < 0 ? (-b.twoA - 1) / 2 : (b.twoA - 1) / 2;
        core = poly_mul(pref, poly_pow(b.twoA < 0 ? poly_u() : poly_v(), power));
    }
    return poly_mul(core, poly_mul(poly_pow(poly_w1(), b.i1), poly_pow(poly_w2(), b.i2)));
}

SheafElement expand_in_basis(const CoordinatePolynomial& poly, Sector sector) {
    long long expected = 0;
    if (sector == Sector::Q) expected = 1;
    if (sector == Sector::R) expected = -1;
    if (poly.weight != expected && !poly.is_zero())
        throw std::invalid_argument("polynomial weight does not match sector");
    SheafElement out;
    for (const auto& [m, c] : poly.coeffs) {
        long long p = m.x, q = m.y, r = m.t1, s = m.t2;
        if (p + q - r - s != expected)
            throw std::invalid_argument("monomial weight does not match sector");
        Pref pref = Pref::One;
        if (sector == Sector::Q) {
            if (p >= 1) {
                pref = Pref::X;
                --p;
            } else {
                pref = Pref::Y;
                --q;
            }
        } else if (sector == Sector::R) {
            if (r >= 1) {
                pref = Pref::T1;
                --r;
            } else {
                pref = Pref::T2;
                --s;
            }
        }
        if (p < 0 || q < 0 || r < 0 || s < 0)
            throw std::invalid_argument("monomial not expressible in the requested sector");
        // x^p y^q t1^r t2^s = u^alpha v^beta (1+w1)^gamma (1+w2)^delta
        long long gamma = std::min(p, s);
        long long alpha = p - gamma;
        long long beta = s - gamma;
        long long delta = q - beta;
        if (delta < 0 || alpha + delta != r)
            throw std::invalid_argument("monomial decomposition failed");
        emit_basis_terms(sector, pref, alpha, beta, gamma, delta, 0, 0, c, out);
    }
    return out;
}

bool sectors_composable(Sector fs, Sector gs) {
    return sector_target(fs) == sector_source(gs);
}

Sector composed_sector(Sector fs, Sector gs) {
    return sector_of(sector_source(fs), sector_target(gs));
}

SheafElement compose_oracle(const BasisMorphism& g, const BasisMorphism& f) {
    if (!sectors_composable(f.sector, g.sector))
        throw std::invalid_argument("sector mismatch in compose_oracle");
    return expand_in_basis(poly_mul(basis_to_polynomial(g), basis_to_polynomial(f)),
                           composed_sector(f.sector, g.sector));
}

namespace {

struct LaurentForm {
    Pref pref = Pref::One;
    long long uExp = 0, vExp = 0;  // at most one nonzero
    long long i1 = 0, i2 = 0;      // Laurent shifts of w1, w2
};

LaurentForm laurent_of(const BasisMorphism& b) {
    LaurentForm l;
    l.i1 = b.i1;
    l.i2 = b.i2;
    if (b.sector == Sector::PP || b.sector == Sector::PpPp) {
        long long a = b.twoA / 2;
        (a < 0 ? l.uExp : l.vExp) = a < 0 ? -a : a;
    } else {
        long long power = b.twoA < 0 ? (-b.twoA - 1) / 2 : (b.twoA - 1) / 2;
        (b.twoA < 0 ? l.uExp : l.vExp) = power;
        if (b.sector == Sector::Q) l.pref = b.twoA < 0 ? Pref::X : Pref::Y;
        else l.pref = b.twoA < 0 ? Pref::T1 : Pref::T2;
    }
    return l;
}

}  // namespace

SheafElement compose_oracle_localized(const BasisMorphism& g, const BasisMorphism& f) {
    if (!sectors_composable(f.sector, g.sector))
        throw std::invalid_argument("sector mismatch in compose_oracle_localized");
    LaurentForm a = laurent_of(f), b = laurent_of(g);
    long long uExp = a.uExp + b.uExp, vExp = a.vExp + b.vExp;
    long long c1 = 0, c2 = 0;
    Pref pref = Pref::One;
    // combine prefactors inside the coordinate ring
    auto both = [&](Pref p1, Pref p2) {
        return (a.pref == p1 && b.pref == p2) || (a.pref == p2 && b.pref == p1);
    };
    if (a.pref == Pref::One) {
        pref = b.pref;
    } else if (b.pref == Pref::One) {
        pref = a.pref;
    } else if (both(Pref::X, Pref::T1)) {
        ++uExp;  // t1 * x = u
    } else if (both(Pref::Y, Pref::T2)) {
        ++vExp;  // t2 * y = v
    } else if (both(Pref::X, Pref::T2)) {
        ++c1;  // t2 * x = 1 + w1
    } else if (both(Pref::Y, Pref::T1)) {
        ++c2;  // t1 * y = 1 + w2
    } else {
        throw std::logic_error("impossible prefactor combination");
    }
    SheafElement out;
    emit_basis_terms(composed_sector(f.sector, g.sector), pref, uExp, vExp, c1, c2, a.i1 + b.i1,
                     a.i2 + b.i2, Rational(1), out);
    return out;
}

std::pair<Rational, Rational> closed_form_k(Sector fs, Sector gs, const Rational& a,
                                            const Rational& b) {
    const Rational zero(0), half(1, 2);
    if (a.sign() * b.sign() >= 0) return {zero, zero};
    Rational absA = a.sign() < 0 ? -a : a;
    Rational absB = b.sign() < 0 ? -b : b;
    auto rmin = [](const Rational& x, const Rational& y) { return x < y ? x : y; };
    bool fNeg = a.sign() < 0;  // the other case is b < 0
    if (fs == gs && (fs == Sector::PP || fs == Sector::PpPp)) {
        Rational k = rmin(absA, absB);
        return {k, k};
    }
    if (fs == Sector::PP && gs == Sector::Q) {
        Rational lo = rmin(absA, absB - half), hi = rmin(absA, absB + half);
        return fNeg ? std::make_pair(lo, hi) : std::make_pair(hi, lo);
    }
    if (fs == Sector::Q && gs == Sector::PpPp) {
        Rational lo = rmin(absB, absA - half), hi = rmin(absB, absA + half);
        return fNeg ? std::make_pair(hi, lo) : std::make_pair(lo, hi);
    }
    if (fs == Sector::PpPp && gs == Sector::R) {
        Rational lo = rmin(absA, absB - half), hi = rmin(absA, absB + half);
        return fNeg ? std::make_pair(hi, lo) : std::make_pair(lo, hi);
    }
    if (fs == Sector::R && gs == Sector::PP) {
        Rational lo = rmin(absB, absA - half), hi = rmin(absB, absA + half);
        return fNeg ? std::make_pair(lo, hi) : std::make_pair(hi, lo);
    }
    if (fs == Sector::Q && gs == Sector::R) {
        Rational mu = rmin(absA, absB) - half;
        return fNeg ? std::make_pair(mu + Rational(1), mu) : std::make_pair(mu, mu + Rational(1));
    }
    if (fs == Sector::R && gs == Sector::Q) {
        Rational mu = rmin(absA, absB) - half;
        return fNeg ? std::make_pair(mu, mu + Rational(1)) : std::make_pair(mu + Rational(1), mu);
    }
    throw std::invalid_argument("sector mismatch in closed_form_k");
}

std::pair<Rational, Rational> printed_form_k(Sector fs, Sector gs, const Rational& a,
                                             const Rational& b) {
    const Rational zero(0), half(1, 2);
    if (a.sign() * b.sign() >= 0) return {zero, zero};
    Rational absA = a.sign() < 0 ? -a : a;
    Rational absB = b.sign() < 0 ? -b : b;
    auto rmin = [](const Rational& x, const Rational& y) { return x < y ? x : y; };
    bool mixedF = (fs == Sector::Q || fs == Sector::R);
    bool mixedG = (gs == Sector::Q || gs == Sector::R);
    if (mixedF && mixedG) return closed_form_k(fs, gs, a, b);  // eq. for R*Q as printed
    if (!mixedF && !mixedG) {
        Rational k = rmin(absA, absB);
        return {k, k};
    }
    // one whole index, one half index: single k = min(whole, half - 1/2)
    Rational k = mixedF ? rmin(absB, absA - half) : rmin(absA, absB - half);
    return {k, k};
}

SheafElement compose_closed_form(const BasisMorphism& g, const BasisMorphism& f) {
    if (!sectors_composable(f.sector, g.sector))
        throw std::invalid_argument("sector mismatch in compose_closed_form");
    auto [k1, k2] = closed_form_k(f.sector, g.sector, f.a(), g.a());
    long long kk1 = k1.num(), kk2 = k2.num();
    if (!k1.is_integer() || !k2.is_integer() || kk1 < 0 || kk2 < 0)
        throw std::logic_error("non-integral binomial depth");
    SheafElement out;
    BasisMorphism base{composed_sector(f.sector, g.sector), f.twoA + g.twoA, 0, 0};
    for (long long s1 = 0; s1 <= kk1; ++s1) {
        Rational b1 = binomial(kk1, s1);
        for (long long s2 = 0; s2 <= kk2; ++s2)
            out.add(BasisMorphism{base.sector, base.twoA, f.i1 + g.i1 + s1, f.i2 + g.i2 + s2},
                    b1 * binomial(kk2, s2));
    }
    return out;
}

SheafElement compose_closed_form(const SheafElement& g, const SheafElement& f) {
    SheafElement out;
    for (const auto& [bg, cg] : g.terms())
        for (const auto& [bf, cf] : f.terms())
            out.add(compose_closed_form(bg, bf), cg * cf);
    return out;
}

BasisMorphism arrow_x() { return {Sector::Q, -1, 0, 0}; }
BasisMorphism arrow_y() { return {Sector::Q, 1, 0, 0}; }
BasisMorphism arrow_t1() { return {Sector::R, -1, 0, 0}; }
BasisMorphism arrow_t2() { return {Sector::R, 1, 0, 0}; }

bool RelationReport::all_pass() const {
    for (const auto& e : entries)
        if (!e.pass) return false;
    return true;
}

namespace {

SheafElement eval_word(const std::vector<BasisMorphism>& word) {
    // composition order: the last entry acts first
    SheafElement acc(word.back());
    for (size_t i = word.size() - 1; i-- > 0;) acc = compose_closed_form(SheafElement(word[i]), acc);
    return acc;
}

}  // namespace

RelationReport relation_check() {
    BasisMorphism x = arrow_x(), y = arrow_y(), t1 = arrow_t1(), t2 = arrow_t2();
    struct Rel {
        std::string name;
        std::vector<BasisMorphism> lhs, rhs;
    };
    std::vector<Rel> rels = {
        {"x t1 y = y t1 x", {x, t1, y}, {y, t1, x}},
        {"x t2 y = y t2 x", {x, t2, y}, {y, t2, x}},
        {"t1 x t2 = t2 x t1", {t1, x, t2}, {t2, x, t1}},
        {"t1 y t2 = t2 y t1", {t1, y, t2}, {t2, y, t1}},
    };
    RelationReport rep;
    auto fmt = [](const BasisMorphism& b) { return b.str(); };
    for (const auto& r : rels) {
        SheafElement l = eval_word(r.lhs), rr = eval_word(r.rhs);
        rep.entries.push_back({r.name, l == rr, l.str(fmt), rr.str(fmt)});
    }
    return rep;
}

NovikovScalar skyscraper_action(const BasisMorphism& b, const SkyscraperPoint& p) {
    if (!(Rational(0) < p.lambda)) throw std::invalid_argument("skyscraper point needs lambda > 0");
    CoordinatePolynomial poly = basis_to_polynomial(b);
    // evaluate at x = 0, y = 1, t1 = 1 + alpha T^lambda, t2 = 0
    NovikovScalar one(Rational(1));
    NovikovScalar t1val = one + NovikovScalar::monomial(Rational(1), 1, p.lambda);
    NovikovScalar acc;
    for (const auto& [m, c] : poly.coeffs) {
        if (m.x > 0 || m.t2 > 0) continue;
        acc = acc + NovikovScalar(c) * t1val.pow(m.t1);
    }
    return acc;
}

NovikovScalar skyscraper_action(const SheafElement& e, const SkyscraperPoint& p) {
    NovikovScalar acc;
    for (const auto& [b, c] : e.terms()) acc = acc + NovikovScalar(c) * skyscraper_action(b, p);
    return acc;
}

}  // namespace conifold
