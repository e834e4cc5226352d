#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace conifold {

// Exact point of the z-plane with rational coordinates of arbitrary size.
struct GaussRat {
    mpq_class re, im;

    GaussRat() : re(0), im(0) {}
    GaussRat(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    mpq_class normSq() const { return re * re + im * im; }
    bool is_zero() const { return re == 0 && im == 0; }
    std::string str() const;
};

inline mpq_class dot(const GaussRat& a, const GaussRat& b) { return a.re * b.re + a.im * b.im; }
inline mpq_class cross(const GaussRat& a, const GaussRat& b) { return a.re * b.im - a.im * b.re; }

enum class PathKind { Section, Bounded };

// Piecewise-linear path. Section paths run from |z| -> 0 to |z| -> infinity;
// the two ends are radial (the segment from the origin to the first vertex
// and the outward ray through the last vertex). Bounded paths run from the
// puncture b to the puncture a literally (first/last vertex are b and a).
struct PLPath {
    PathKind kind = PathKind::Section;
    std::vector<GaussRat> vertices;
};

struct PuncturedPlane {
    GaussRat a, b;          // distinct, nonzero; the segment [a, b] is epsilon
    PLPath referenceBounded;  // sigma_0, used by the bounded winding number
};

struct AdmissibilityResult {
    bool admissible = false;
    std::string diagnostic;  // empty when admissible
};

// A section path is admissible when every piece either misses [a, b] or
// crosses it transversally, and the path avoids the punctures.
AdmissibilityResult is_admissible(const PLPath& path, const PuncturedPlane& pp);

// |z| strictly increasing along the whole parametrization, decided segment
// by segment from the sign of <p, q - p> (the derivative of |z|^2 at the
// segment start; the quadratic has positive leading coefficient).
bool is_strongly_admissible(const PLPath& path);

// Bounded-path admissibility: endpoints exactly b and a, interior vertices
// off the punctures, |z| strictly increasing, and transversal crossings of
// the mirrored segment [-b, -a].
AdmissibilityResult is_bounded_admissible(const PLPath& path, const PuncturedPlane& pp);

// Signed count of transversal crossings of [a, b]; a counterclockwise
// crossing (position x velocity > 0) counts +1.
long long winding_number(const PLPath& path, const PuncturedPlane& pp);

// Winding of the loop (reverse of sigma_0) o sigma around the origin.
long long winding_number_bounded(const PLPath& sigma, const PuncturedPlane& pp);

struct BundleLabel {
    enum class Carrier { X0, ExceptionalCurve };
    Carrier carrier;
    long long degree;
    std::string str() const;
    friend bool operator==(const BundleLabel&, const BundleLabel&) = default;
};

// Section path gamma -> O_{X0}(-w(gamma)); bounded path sigma -> O_E(-w(sigma)).
BundleLabel syz_transform_label(const PLPath& path, const PuncturedPlane& pp);

// Standard fixtures on the plane with punctures a = -2, b = -1.
PuncturedPlane conifold_plane();
PLPath gamma0();
PLPath gamma1();
PLPath sigma0();
PLPath sigma1();
// Admissible section path with winding exactly w (square loops in the
// annulus 1 < |z| < 2 around the crossing segment).
PLPath path_with_winding(long long w);

// SYZ fibration chart. Points are exact quintuples (z, u1, v1, u2, v2)
// subject to u1 v1 = z - a and u2 v2 = z - b.
struct FibrationPoint {
    GaussRat z, u1, v1, u2, v2;
};
struct BaseTriple {
    mpq_class rSq;      // |z|^2, kept as an exact square
    mpq_class lambda1;  // (|u1|^2 - |v1|^2)/2
    mpq_class lambda2;
};
BaseTriple fibration_coordinates(const FibrationPoint& y, const PuncturedPlane& pp);
bool discriminant_test(const BaseTriple& base, const PuncturedPlane& pp);

// JSON round-trip for paths; numbers are decimal strings so arbitrarily
// large exact coordinates survive.
std::string path_to_json(const PLPath& path);
PLPath path_from_json(const std::string& text);
// Optional "punctures" block of a path file: {"a":[...], "b":[...]}.
std::optional<std::pair<GaussRat, GaussRat>> punctures_from_json(const std::string& text);

}  // namespace conifold
