#include "conifold/pathgeom.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace conifold {

namespace {

// One straight piece of a path: points p + s*d for s in [0, sMax], or a ray
// when sMax is absent.
struct Piece {
    GaussRat p, d;
    std::optional<mpq_class> sMax;

    bool contains_param(const mpq_class& s) const {
        if (s < 0) return false;
        return !sMax || s <= *sMax;
    }
    bool interior_param(const mpq_class& s) const {
        if (s <= 0) return false;
        return !sMax || s < *sMax;
    }
};

std::vector<Piece> pieces_of(const PLPath& path) {
    if (path.vertices.empty()) throw std::invalid_argument("empty path");
    for (size_t i = 0; i + 1 < path.vertices.size(); ++i)
        if (path.vertices[i] == path.vertices[i + 1])
            throw std::invalid_argument("degenerate path: repeated consecutive vertex");
    std::vector<Piece> ps;
    if (path.kind == PathKind::Section) {
        const GaussRat& v0 = path.vertices.front();
        if (v0.is_zero()) throw std::invalid_argument("degenerate path: vertex at the origin");
        ps.push_back({GaussRat(), v0, mpq_class(1)});  // radial approach from |z| -> 0
    }
    for (size_t i = 0; i + 1 < path.vertices.size(); ++i)
        ps.push_back({path.vertices[i], path.vertices[i + 1] - path.vertices[i], mpq_class(1)});
    if (path.kind == PathKind::Section) {
        const GaussRat& vn = path.vertices.back();
        if (vn.is_zero()) throw std::invalid_argument("degenerate path: vertex at the origin");
        ps.push_back({vn, vn, std::nullopt});  // radial escape to |z| -> infinity
    }
    return ps;
}

struct Crossing {
    GaussRat point;
    GaussRat dir;
};

// Collects transversal crossings of [e1, e2]; fills `why` and returns false
// on any non-transversal configuration (vertex on the segment, collinear
// overlap, or passing through an endpoint of the segment).
bool collect_crossings(const std::vector<Piece>& pieces, const GaussRat& e1, const GaussRat& e2,
                       std::vector<Crossing>& out, std::string& why) {
    GaussRat de = e2 - e1;
    for (const auto& pc : pieces) {
        mpq_class det = cross(pc.d, de);
        if (det == 0) {
            if (cross(e1 - pc.p, pc.d) == 0) {
                // same line: any overlap with [e1, e2] is non-transversal
                mpq_class dd = pc.d.normSq();
                mpq_class s1 = dot(e1 - pc.p, pc.d) / dd;
                mpq_class s2 = dot(e2 - pc.p, pc.d) / dd;
                if (s1 > s2) std::swap(s1, s2);
                bool disjoint = (pc.sMax && s1 > *pc.sMax) || s2 < 0;
                if (!disjoint) {
                    why = "piece collinear with the segment";
                    return false;
                }
            }
            continue;
        }
        mpq_class s = cross(e1 - pc.p, de) / det;
        mpq_class t = cross(e1 - pc.p, pc.d) / det;
        if (t < 0 || t > 1 || !pc.contains_param(s)) continue;
        if (t == 0 || t == 1) {
            why = "path passes through an endpoint of the segment";
            return false;
        }
        if (!pc.interior_param(s)) {
            why = "path vertex lies on the segment";
            return false;
        }
        out.push_back({pc.p + GaussRat(s * pc.d.re, s * pc.d.im), pc.d});
    }
    return true;
}

bool hits_point(const std::vector<Piece>& pieces, const GaussRat& pt) {
    for (const auto& pc : pieces) {
        GaussRat rel = pt - pc.p;
        if (cross(rel, pc.d) != 0) continue;
        mpq_class s = dot(rel, pc.d) / pc.d.normSq();
        if (pc.contains_param(s)) return true;
    }
    return false;
}

}  // namespace

std::string GaussRat::str() const {
    std::ostringstream os;
    os << "(" << re.get_str() << ", " << im.get_str() << ")";
    return os.str();
}

AdmissibilityResult is_admissible(const PLPath& path, const PuncturedPlane& pp) {
    if (path.kind != PathKind::Section) return {false, "not a section path"};
    std::vector<Piece> pieces;
    try {
        pieces = pieces_of(path);
    } catch (const std::exception& e) {
        return {false, e.what()};
    }
    if (hits_point(pieces, pp.a) || hits_point(pieces, pp.b))
        return {false, "path meets the discriminant"};
    std::vector<Crossing> xs;
    std::string why;
    if (!collect_crossings(pieces, pp.a, pp.b, xs, why)) return {false, why};
    for (const auto& c : xs)
        if (cross(c.point, c.dir) == 0)
            return {false, "radial crossing of the segment (degenerate orientation)"};
    return {true, ""};
}

bool is_strongly_admissible(const PLPath& path) {
    std::vector<Piece> pieces = pieces_of(path);
    for (const auto& pc : pieces) {
        if (pc.p.is_zero()) continue;  // the radial approach piece
        if (dot(pc.p, pc.d) < 0) return false;
    }
    return true;
}

AdmissibilityResult is_bounded_admissible(const PLPath& path, const PuncturedPlane& pp) {
    if (path.kind != PathKind::Bounded) return {false, "not a bounded path"};
    if (path.vertices.size() < 2) return {false, "bounded path needs two endpoints"};
    if (!(path.vertices.front() == pp.b) || !(path.vertices.back() == pp.a))
        return {false, "bounded path must run from b to a"};
    for (size_t i = 1; i + 1 < path.vertices.size(); ++i)
        if (path.vertices[i] == pp.a || path.vertices[i] == pp.b)
            return {false, "interior vertex at a puncture"};
    std::vector<Piece> pieces;
    try {
        pieces = pieces_of(path);
    } catch (const std::exception& e) {
        return {false, e.what()};
    }
    if (!is_strongly_admissible(path)) return {false, "|z| not strictly increasing"};
    // transversality against the mirrored segment [-b, -a]
    GaussRat mb(-pp.b.re, -pp.b.im), ma(-pp.a.re, -pp.a.im);
    std::vector<Crossing> xs;
    std::string why;
    if (!collect_crossings(pieces, mb, ma, xs, why)) return {false, why};
    return {true, ""};
}

long long winding_number(const PLPath& path, const PuncturedPlane& pp) {
    AdmissibilityResult adm = is_admissible(path, pp);
    if (!adm.admissible)
        throw std::invalid_argument("winding number of an inadmissible path: " + adm.diagnostic);
    std::vector<Piece> pieces = pieces_of(path);
    std::vector<Crossing> xs;
    std::string why;
    if (!collect_crossings(pieces, pp.a, pp.b, xs, why)) throw std::logic_error(why);
    long long w = 0;
    for (const auto& c : xs) {
        mpq_class orient = cross(c.point, c.dir);
        if (orient == 0) throw std::logic_error("degenerate crossing orientation");
        w += orient > 0 ? 1 : -1;
    }
    return w;
}

namespace {

// Winding of a closed rational polygon around the origin, as the signed
// count of crossings of the positive real axis; points with im == 0 are
// treated as lying just above the axis.
long long loop_winding(const std::vector<GaussRat>& loop) {
    auto above = [](const GaussRat& p) { return p.im >= 0; };
    long long w = 0;
    for (size_t i = 0; i < loop.size(); ++i) {
        const GaussRat& p = loop[i];
        const GaussRat& q = loop[(i + 1) % loop.size()];
        if (p == q) continue;
        if (above(p) == above(q)) continue;
        mpq_class t = p.im / (p.im - q.im);
        mpq_class xstar = p.re + t * (q.re - p.re);
        if (xstar == 0) throw std::invalid_argument("loop passes through the origin");
        if (xstar > 0) w += above(q) ? 1 : -1;
    }
    return w;
}

}  // namespace

long long winding_number_bounded(const PLPath& sigma, const PuncturedPlane& pp) {
    AdmissibilityResult adm = is_bounded_admissible(sigma, pp);
    if (!adm.admissible)
        throw std::invalid_argument("bounded winding of an inadmissible path: " + adm.diagnostic);
    std::vector<GaussRat> loop = sigma.vertices;
    const auto& ref = pp.referenceBounded.vertices;
    for (auto it = ref.rbegin(); it != ref.rend(); ++it) loop.push_back(*it);
    return loop_winding(loop);
}

std::string BundleLabel::str() const {
    std::ostringstream os;
    os << (carrier == Carrier::X0 ? "O_{X0}" : "O_E");
    if (degree != 0) os << "(" << degree << ")";
    return os.str();
}

BundleLabel syz_transform_label(const PLPath& path, const PuncturedPlane& pp) {
    if (path.kind == PathKind::Section)
        return {BundleLabel::Carrier::X0, -winding_number(path, pp)};
    return {BundleLabel::Carrier::ExceptionalCurve, -winding_number_bounded(path, pp)};
}

namespace {

GaussRat pt(long reN, long reD, long imN, long imD) {
    return GaussRat(mpq_class(reN, reD), mpq_class(imN, imD));
}

// Exact spiral from b to a: repeated (rotate by the Pythagorean angle,
// scale by lambda), every step keeping <p, q - p> > 0, closed by one final
// hop to a.
PLPath spiral_bounded(const GaussRat& b, const GaussRat& a, const mpq_class& cosT,
                      const mpq_class& sinT, const mpq_class& lambda, int steps) {
    PLPath p;
    p.kind = PathKind::Bounded;
    GaussRat v = b;
    p.vertices.push_back(v);
    for (int i = 0; i < steps; ++i) {
        GaussRat rotated(cosT * v.re - sinT * v.im, sinT * v.re + cosT * v.im);
        v = GaussRat(lambda * rotated.re, lambda * rotated.im);
        p.vertices.push_back(v);
    }
    p.vertices.push_back(a);
    return p;
}

}  // namespace

PuncturedPlane conifold_plane() {
    PuncturedPlane pp;
    pp.a = pt(-2, 1, 0, 1);
    pp.b = pt(-1, 1, 0, 1);
    pp.referenceBounded = sigma0();
    return pp;
}

PLPath gamma0() {
    PLPath p;
    p.kind = PathKind::Section;
    p.vertices = {pt(1, 1, 0, 1)};
    return p;
}

PLPath gamma1() {
    PLPath p;
    p.kind = PathKind::Section;
    p.vertices = {pt(1, 2, 0, 1), pt(0, 1, -5, 4), pt(-2, 1, 1, 1)};
    return p;
}

PLPath sigma0() {
    // rotation angle ~6.026 deg (cos, sin) = (180, 19)/181, growth 2023/2000
    return spiral_bounded(pt(-1, 1, 0, 1), pt(-2, 1, 0, 1), mpq_class(180, 181),
                          mpq_class(19, 181), mpq_class(2023, 2000), 60);
}

PLPath sigma1() {
    // two full turns: angle ~3.015 deg (1443, 76)/1445, growth 50143/50000
    return spiral_bounded(pt(-1, 1, 0, 1), pt(-2, 1, 0, 1), mpq_class(1443, 1445),
                          mpq_class(76, 1445), mpq_class(50143, 50000), 239);
}

PLPath path_with_winding(long long w) {
    PLPath p;
    p.kind = PathKind::Section;
    p.vertices.push_back(pt(1, 2, 1, 2));
    long long loops = w < 0 ? -w : w;
    GaussRat ne = pt(3, 2, 3, 2), nw = pt(-3, 2, 3, 2), sw = pt(-3, 2, -3, 2), se = pt(3, 2, -3, 2);
    for (long long i = 0; i < loops; ++i) {
        p.vertices.push_back(ne);
        if (w > 0) {  // counterclockwise: the left edge crosses [a, b] downward
            p.vertices.push_back(nw);
            p.vertices.push_back(sw);
            p.vertices.push_back(se);
        } else {
            p.vertices.push_back(se);
            p.vertices.push_back(sw);
            p.vertices.push_back(nw);
        }
    }
    p.vertices.push_back(ne);
    return p;
}

BaseTriple fibration_coordinates(const FibrationPoint& y, const PuncturedPlane& pp) {
    if (!(y.u1 * y.v1 == y.z - pp.a) || !(y.u2 * y.v2 == y.z - pp.b))
        throw std::invalid_argument("point does not satisfy the defining equations of Y0");
    if (y.z.is_zero()) throw std::invalid_argument("point lies over z = 0");
    BaseTriple b;
    b.rSq = y.z.normSq();
    b.lambda1 = (y.u1.normSq() - y.v1.normSq()) / 2;
    b.lambda2 = (y.u2.normSq() - y.v2.normSq()) / 2;
    return b;
}

bool discriminant_test(const BaseTriple& base, const PuncturedPlane& pp) {
    return (base.rSq == pp.a.normSq() && base.lambda1 == 0) ||
           (base.rSq == pp.b.normSq() && base.lambda2 == 0);
}

std::string path_to_json(const PLPath& path) {
    nlohmann::json j;
    j["kind"] = path.kind == PathKind::Section ? "section" : "bounded";
    nlohmann::json verts = nlohmann::json::array();
    for (const auto& v : path.vertices) {
        verts.push_back({v.re.get_num().get_str(), v.re.get_den().get_str(),
                         v.im.get_num().get_str(), v.im.get_den().get_str()});
    }
    j["vertices"] = verts;
    return j.dump(2);
}

namespace {

GaussRat vertex_from_json(const nlohmann::json& v) {
    auto num = [](const nlohmann::json& x) -> mpz_class {
        if (x.is_string()) return mpz_class(x.get<std::string>());
        return mpz_class(std::to_string(x.get<long long>()));
    };
    if (!v.is_array() || v.size() != 4)
        throw std::invalid_argument("vertex must be [reNum, reDen, imNum, imDen]");
    mpq_class re(num(v[0]), num(v[1])), im(num(v[2]), num(v[3]));
    re.canonicalize();
    im.canonicalize();
    return GaussRat(re, im);
}

}  // namespace

PLPath path_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    PLPath p;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "section") p.kind = PathKind::Section;
    else if (kind == "bounded") p.kind = PathKind::Bounded;
    else throw std::invalid_argument("unknown path kind: " + kind);
    for (const auto& v : j.at("vertices")) p.vertices.push_back(vertex_from_json(v));
    return p;
}

std::optional<std::pair<GaussRat, GaussRat>> punctures_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("punctures")) return std::nullopt;
    const auto& p = j.at("punctures");
    return std::make_pair(vertex_from_json(p.at("a")), vertex_from_json(p.at("b")));
}

}  // namespace conifold
