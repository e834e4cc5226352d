#include "conifold/dgcat.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace conifold {

int DgCategoryPresentation::find(const std::string& name) const {
    for (size_t i = 0; i < gens.size(); ++i)
        if (gens[i].name == name) return (int)i;
    throw std::invalid_argument("unknown dg generator " + name);
}

Chain DgCategoryPresentation::d_of(const Chain& v) const {
    Chain out;
    for (const auto& [g, c] : v.terms()) {
        auto it = differential.find(g);
        if (it != differential.end()) out.add(it->second, c);
    }
    return out;
}

Chain DgCategoryPresentation::prod(const Chain& a, const Chain& b) const {
    Chain out;
    for (const auto& [ga, ca] : a.terms())
        for (const auto& [gb, cb] : b.terms()) {
            auto it = product.find({ga, gb});
            if (it != product.end()) out.add(it->second, ca * cb);
        }
    return out;
}

std::string DgCategoryPresentation::format(const Chain& v) const {
    return v.str([&](int g) { return gens[g].name; });
}

Chain HomotopyData::q_of(const Chain& v) const {
    Chain out;
    for (const auto& [g, c] : v.terms()) {
        auto it = qMap.find(g);
        if (it != qMap.end()) out.add(it->second, c);
    }
    return out;
}

Chain p_of(const DgCategoryPresentation& D, const HomotopyData& H, const Chain& v) {
    Chain out = v;
    out.add(D.d_of(H.q_of(v)), Rational(-1));
    out.add(H.q_of(D.d_of(v)), Rational(-1));
    return out;
}

namespace {

// reduces v against the row space of the representatives; returns the
// residual (zero iff v lies in the span)
Chain reduce_against_span(const std::vector<Chain>& span, const Chain& v) {
    // Gaussian elimination with the generator index as column order
    std::vector<Chain> rows = span;
    Chain r = v;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].is_zero()) continue;
        auto lead = rows[i].terms().begin();
        int col = lead->first;
        Rational pivot = lead->second;
        for (size_t j = 0; j < rows.size(); ++j) {
            if (j == i) continue;
            Rational c = rows[j].coeff(col);
            if (!c.is_zero()) rows[j].add(rows[i], Rational(0) - c / pivot);
        }
        Rational c = r.coeff(col);
        if (!c.is_zero()) r.add(rows[i], Rational(0) - c / pivot);
    }
    return r;
}

}  // namespace

DgValidationReport validate_dg_data(const DgCategoryPresentation& D, const HomotopyData& H) {
    DgValidationReport rep;
    auto fail = [&](const std::string& s) { rep.violations.push_back(s); };
    size_t n = D.gens.size();

    // degree and typing of d, products, Q
    for (const auto& [g, dv] : D.differential) {
        for (const auto& [t, c] : dv.terms()) {
            ++rep.checks;
            if (D.gens[t].degree != D.gens[g].degree + 1)
                fail("differential of " + D.gens[g].name + " not of degree +1");
            if (D.gens[t].source != D.gens[g].source || D.gens[t].target != D.gens[g].target)
                fail("differential of " + D.gens[g].name + " changes the hom pair");
        }
    }
    for (const auto& [gf, pv] : D.product) {
        auto [g, f] = gf;
        if (!D.composable(g, f)) fail("stored product of non-composable pair");
        for (const auto& [t, c] : pv.terms()) {
            ++rep.checks;
            if (D.gens[t].degree != D.gens[g].degree + D.gens[f].degree)
                fail("product " + D.gens[g].name + " o " + D.gens[f].name + " not additive in degree");
            if (D.gens[t].source != D.gens[f].source || D.gens[t].target != D.gens[g].target)
                fail("product " + D.gens[g].name + " o " + D.gens[f].name + " mistyped");
        }
    }
    for (const auto& [g, qv] : H.qMap)
        for (const auto& [t, c] : qv.terms()) {
            ++rep.checks;
            if (D.gens[t].degree != D.gens[g].degree - 1)
                fail("Q of " + D.gens[g].name + " not of degree -1");
        }

    // d^2 = 0
    for (size_t g = 0; g < n; ++g) {
        ++rep.checks;
        Chain dd = D.d_of(D.d_of(Chain((int)g)));
        if (!dd.is_zero()) fail("d^2 != 0 at " + D.gens[g].name + ": " + D.format(dd));
    }
    // Leibniz
    for (size_t g = 0; g < n; ++g)
        for (size_t f = 0; f < n; ++f) {
            if (!D.composable((int)g, (int)f)) continue;
            ++rep.checks;
            Chain lhs = D.d_of(D.prod(Chain((int)g), Chain((int)f)));
            Chain rhs = D.prod(D.d_of(Chain((int)g)), Chain((int)f));
            Rational sgn(D.gens[g].degree % 2 == 0 ? 1 : -1);
            rhs.add(D.prod(Chain((int)g), D.d_of(Chain((int)f))), sgn);
            if (lhs != rhs)
                fail("Leibniz fails at " + D.gens[g].name + " o " + D.gens[f].name);
        }
    // associativity
    for (size_t h = 0; h < n; ++h)
        for (size_t g = 0; g < n; ++g) {
            if (!D.composable((int)h, (int)g)) continue;
            Chain hg = D.prod(Chain((int)h), Chain((int)g));
            for (size_t f = 0; f < n; ++f) {
                if (!D.composable((int)g, (int)f)) continue;
                ++rep.checks;
                Chain left = D.prod(hg, Chain((int)f));
                Chain right = D.prod(Chain((int)h), D.prod(Chain((int)g), Chain((int)f)));
                if (left != right)
                    fail("associativity fails at " + D.gens[h].name + ", " + D.gens[g].name +
                         ", " + D.gens[f].name);
            }
        }
    // units
    for (size_t g = 0; g < n; ++g) {
        ++rep.checks;
        int ut = D.units[D.gens[g].target], us = D.units[D.gens[g].source];
        if (D.prod(Chain(ut), Chain((int)g)) != Chain((int)g) ||
            D.prod(Chain((int)g), Chain(us)) != Chain((int)g))
            fail("unit law fails at " + D.gens[g].name);
    }
    // homotopy data: d(rep) = 0, P(rep) = rep, P^2 = P, P lands in the span
    for (const auto& r : H.representatives) {
        ++rep.checks;
        if (!D.d_of(r).is_zero()) fail("representative " + D.format(r) + " is not closed");
        if (p_of(D, H, r) != r) fail("P does not fix representative " + D.format(r));
    }
    for (size_t g = 0; g < n; ++g) {
        ++rep.checks;
        Chain pg = p_of(D, H, Chain((int)g));
        if (p_of(D, H, pg) != pg) fail("P^2 != P at " + D.gens[g].name);
        if (!reduce_against_span(H.representatives, pg).is_zero())
            fail("P(" + D.gens[g].name + ") leaves the representative span");
    }
    return rep;
}

namespace {

struct Builder {
    DgCategoryPresentation D;
    HomotopyData H;
    std::map<std::string, int> idx;

    int add(const std::string& name, int deg, int src, int tgt) {
        idx[name] = (int)D.gens.size();
        D.gens.push_back({name, deg, src, tgt});
        return idx[name];
    }
    void d(const std::string& g, std::initializer_list<std::pair<const char*, int>> terms) {
        Chain v;
        for (auto& [t, c] : terms) v.add(idx.at(t), Rational(c));
        D.differential[idx.at(g)] = v;
    }
    void q(const std::string& g, const char* t, Rational c) {
        Chain v;
        v.add(idx.at(t), c);
        H.qMap[idx.at(g)] = v;
    }
    void p(const std::string& g, const std::string& f, const char* t, int c) {
        Chain v;
        if (c != 0) v.add(idx.at(t), Rational(c));
        D.product[{idx.at(g), idx.at(f)}] = v;
    }
};

}  // namespace

std::pair<DgCategoryPresentation, HomotopyData> builtin_vanishing_cycle_model() {
    Builder b{};
    b.D.objects = {"S0", "S1"};
    const char* anames[8] = {"1", "x", "y", "z", "w", "xy", "yz", "xw"};
    int adeg[8] = {0, 1, 1, 2, 2, 2, 3, 3};
    for (int obj = 0; obj < 2; ++obj)
        for (int i = 0; i < 8; ++i)
            b.add(std::string(anames[i]) + "_" + std::to_string(obj), adeg[i], obj, obj);
    // Hom(S1, S0): two solid-torus summands
    const char* m1[6] = {"u1", "x1", "y1", "z1", "xy1", "yz1"};
    const char* m2[6] = {"u2", "x2", "y2", "w2", "xy2", "xw2"};
    int mdeg[6] = {1, 2, 2, 3, 3, 4};
    for (int i = 0; i < 6; ++i) b.add(m1[i], mdeg[i], 1, 0);
    for (int i = 0; i < 6; ++i) b.add(m2[i], mdeg[i], 1, 0);
    // Hom(S0, S1): relative classes
    b.add("<z", 1, 0, 1);
    b.add("<xw", 2, 0, 1);
    b.add("<w", 1, 0, 1);
    b.add("<yz", 2, 0, 1);

    b.D.units = {b.idx.at("1_0"), b.idx.at("1_1")};

    for (int obj = 0; obj < 2; ++obj) {
        std::string s = "_" + std::to_string(obj);
        b.d("x" + s, {{("z" + s).c_str(), 1}});
        b.d("y" + s, {{("w" + s).c_str(), 1}});
        Chain dxy;
        dxy.add(b.idx.at("yz" + s), Rational(1));
        dxy.add(b.idx.at("xw" + s), Rational(1));
        b.D.differential[b.idx.at("xy" + s)] = dxy;
    }
    b.d("x1", {{"z1", 1}});
    b.d("xy1", {{"yz1", 1}});
    b.d("y2", {{"w2", 1}});
    b.d("xy2", {{"xw2", 1}});

    for (int obj = 0; obj < 2; ++obj) {
        std::string s = "_" + std::to_string(obj);
        b.q("z" + s, ("x" + s).c_str(), Rational(1));
        b.q("w" + s, ("y" + s).c_str(), Rational(1));
        b.q("yz" + s, ("xy" + s).c_str(), Rational(1, 2));
        b.q("xw" + s, ("xy" + s).c_str(), Rational(1, 2));
    }
    b.q("z1", "x1", Rational(1));
    b.q("yz1", "xy1", Rational(1));
    b.q("w2", "y2", Rational(1));
    b.q("xw2", "xy2", Rational(1));

    // units
    for (int g = 0; g < (int)b.D.gens.size(); ++g) {
        const auto& gen = b.D.gens[g];
        b.D.product[{b.D.units[gen.target], g}] = Chain(g);
        b.D.product[{g, b.D.units[gen.source]}] = Chain(g);
    }
    // internal products of both sphere algebras
    for (int obj = 0; obj < 2; ++obj) {
        std::string s = "_" + std::to_string(obj);
        b.p("x" + s, "y" + s, ("xy" + s).c_str(), -1);
        b.p("y" + s, "x" + s, ("xy" + s).c_str(), 1);
        b.p("y" + s, "z" + s, ("yz" + s).c_str(), -1);
        b.p("z" + s, "y" + s, ("yz" + s).c_str(), -1);
        b.p("x" + s, "w" + s, ("xw" + s).c_str(), 1);
        b.p("w" + s, "x" + s, ("xw" + s).c_str(), 1);
    }
    // solved action and pairing table (see the tests for the axioms that pin it)
    struct Row {
        const char* g;
        const char* f;
        const char* t;
        int c;
    };
    const Row rows[] = {
        // Hom(S0,S0) acting on Hom(S1,S0)
        {"x_0", "u1", "x1", 1},   {"y_0", "u1", "y1", 1},   {"z_0", "u1", "z1", 1},
        {"xy_0", "u1", "xy1", 1}, {"yz_0", "u1", "yz1", 1}, {"x_0", "y1", "xy1", -1},
        {"y_0", "x1", "xy1", 1},  {"y_0", "z1", "yz1", -1}, {"z_0", "y1", "yz1", -1},
        {"x_0", "u2", "x2", 1},   {"y_0", "u2", "y2", 1},   {"w_0", "u2", "w2", 1},
        {"xy_0", "u2", "xy2", 1}, {"xw_0", "u2", "xw2", 1}, {"x_0", "y2", "xy2", -1},
        {"y_0", "x2", "xy2", 1},  {"x_0", "w2", "xw2", 1},  {"w_0", "x2", "xw2", 1},
        // Hom(S1,S0) acted on the right by Hom(S1,S1)
        {"u1", "x_1", "x1", 1},   {"u1", "y_1", "y1", 1},   {"u1", "z_1", "z1", -1},
        {"u1", "xy_1", "xy1", 1}, {"u1", "yz_1", "yz1", -1},{"x1", "y_1", "xy1", -1},
        {"y1", "x_1", "xy1", 1},  {"y1", "z_1", "yz1", 1},  {"z1", "y_1", "yz1", -1},
        {"u2", "x_1", "x2", 1},   {"u2", "y_1", "y2", 1},   {"u2", "w_1", "w2", -1},
        {"u2", "xy_1", "xy2", 1}, {"u2", "xw_1", "xw2", -1},{"x2", "y_1", "xy2", -1},
        {"y2", "x_1", "xy2", 1},  {"x2", "w_1", "xw2", -1}, {"w2", "x_1", "xw2", 1},
        // Hom(S1,S1) acting on Hom(S0,S1)
        {"y_1", "<z", "<xw", 1},  {"x_1", "<w", "<yz", 1},
        // Hom(S0,S1) acted on the right by Hom(S0,S0)
        {"<z", "y_0", "<xw", 1},  {"<w", "x_0", "<yz", 1},
        // Hom(S1,S0) o Hom(S0,S1) -> Hom(S0,S0)
        {"u1", "<z", "z_0", 1},   {"u1", "<xw", "yz_0", -1}, {"y1", "<z", "yz_0", -1},
        {"u2", "<w", "w_0", -1},  {"u2", "<yz", "xw_0", -1}, {"x2", "<w", "xw_0", -1},
        // Hom(S0,S1) o Hom(S1,S0) -> Hom(S1,S1)
        {"<z", "u1", "z_1", -1},  {"<z", "y1", "yz_1", 1},   {"<xw", "u1", "yz_1", 1},
        {"<w", "u2", "w_1", 1},   {"<w", "x2", "xw_1", 1},   {"<yz", "u2", "xw_1", 1},
    };
    for (const auto& r : rows) b.p(r.g, r.f, r.t, r.c);

    // cohomology representatives: units, the degree-3 classes, and the
    // surviving generators of the torus summands and the relative complexes
    auto single = [&](const char* n) { return Chain(b.idx.at(n)); };
    for (int obj = 0; obj < 2; ++obj) {
        std::string s = "_" + std::to_string(obj);
        b.H.representatives.push_back(single(("1" + s).c_str()));
        Chain h;
        h.add(b.idx.at("yz" + s), Rational(1, 2));
        h.add(b.idx.at("xw" + s), Rational(-1, 2));
        b.H.representatives.push_back(h);
    }
    for (const char* n : {"u1", "y1", "u2", "x2", "<z", "<xw", "<w", "<yz"})
        b.H.representatives.push_back(single(n));

    return {b.D, b.H};
}

std::string dg_model_to_json(const DgCategoryPresentation& D, const HomotopyData& H) {
    nlohmann::json j;
    j["objects"] = D.objects;
    j["generators"] = nlohmann::json::array();
    for (const auto& g : D.gens)
        j["generators"].push_back({{"name", g.name},
                                   {"degree", g.degree},
                                   {"pair", {D.objects[g.source], D.objects[g.target]}}});
    j["units"] = nlohmann::json::array();
    for (int u : D.units) j["units"].push_back(D.gens[u].name);
    auto termsOf = [&](const Chain& v) {
        nlohmann::json t = nlohmann::json::array();
        for (const auto& [g, c] : v.terms())
            t.push_back({{"gen", D.gens[g].name}, {"coeff", c.str()}});
        return t;
    };
    j["differential"] = nlohmann::json::array();
    for (const auto& [g, v] : D.differential)
        if (!v.is_zero())
            j["differential"].push_back({{"gen", D.gens[g].name}, {"terms", termsOf(v)}});
    j["product"] = nlohmann::json::array();
    for (const auto& [gf, v] : D.product)
        if (!v.is_zero())
            j["product"].push_back({{"left", D.gens[gf.first].name},
                                    {"right", D.gens[gf.second].name},
                                    {"terms", termsOf(v)}});
    j["homotopy"]["q"] = nlohmann::json::array();
    for (const auto& [g, v] : H.qMap)
        if (!v.is_zero())
            j["homotopy"]["q"].push_back({{"gen", D.gens[g].name}, {"terms", termsOf(v)}});
    j["homotopy"]["representatives"] = nlohmann::json::array();
    for (const auto& r : H.representatives) j["homotopy"]["representatives"].push_back(termsOf(r));
    return j.dump(2);
}

namespace {

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

}  // namespace

std::pair<DgCategoryPresentation, HomotopyData> dg_model_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    DgCategoryPresentation D;
    HomotopyData H;
    D.objects = j.at("objects").get<std::vector<std::string>>();
    auto objIdx = [&](const std::string& o) {
        for (size_t i = 0; i < D.objects.size(); ++i)
            if (D.objects[i] == o) return (int)i;
        throw std::invalid_argument("unknown object " + o);
    };
    for (const auto& g : j.at("generators")) {
        auto pair = g.at("pair");
        D.gens.push_back({g.at("name").get<std::string>(), g.at("degree").get<int>(),
                          objIdx(pair.at(0).get<std::string>()),
                          objIdx(pair.at(1).get<std::string>())});
    }
    for (const auto& u : j.at("units")) D.units.push_back(D.find(u.get<std::string>()));
    if (D.units.size() != D.objects.size())
        throw std::invalid_argument("need one unit per object");
    auto chainOf = [&](const nlohmann::json& terms) {
        Chain v;
        for (const auto& t : terms)
            v.add(D.find(t.at("gen").get<std::string>()),
                  rational_from_string(t.at("coeff").get<std::string>()));
        return v;
    };
    for (const auto& e : j.at("differential"))
        D.differential[D.find(e.at("gen").get<std::string>())] = chainOf(e.at("terms"));
    for (const auto& e : j.at("product"))
        D.product[{D.find(e.at("left").get<std::string>()),
                   D.find(e.at("right").get<std::string>())}] = chainOf(e.at("terms"));
    for (const auto& e : j.at("homotopy").at("q"))
        H.qMap[D.find(e.at("gen").get<std::string>())] = chainOf(e.at("terms"));
    for (const auto& r : j.at("homotopy").at("representatives"))
        H.representatives.push_back(chainOf(r));
    return {D, H};
}

}  // namespace conifold
