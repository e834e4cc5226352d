#include "conifold/ainfinity.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <sstream>

namespace conifold {

int AInfinityPresentation::find_gen(const std::string& name) const {
    for (size_t i = 0; i < gens.size(); ++i)
        if (gens[i].name == name) return (int)i;
    throw std::invalid_argument("unknown generator " + name);
}

bool AInfinityPresentation::tuple_composable(const std::vector<int>& tuple) const {
    for (size_t i = 0; i + 1 < tuple.size(); ++i)
        if (gens[tuple[i + 1]].target != gens[tuple[i]].source) return false;
    return true;
}

LinearCombination<int> AInfinityPresentation::op(const std::vector<int>& tuple) const {
    auto it = ops.find(tuple);
    return it == ops.end() ? LinearCombination<int>() : it->second;
}

size_t AInfinityPresentation::max_op_arity() const {
    size_t m = 0;
    for (const auto& [t, v] : ops) m = std::max(m, t.size());
    return m;
}

std::string AInfinityPresentation::format(const LinearCombination<int>& v) const {
    return v.str([&](int g) { return gens[g].name; });
}

long long SignConvention::insertion_exponent(const std::vector<int>& degreesBefore) {
    long long e = 0;
    for (int d : degreesBefore) e += d - 1;
    return e;
}

std::string SignConvention::describe() {
    return "A-infinity relation sign (-1)^{sum_{i<=j} (deg a_i - 1)}; units: m2(id,g)=g, "
           "m2(g,id)=(-1)^{deg g} g; pairing ops m2(a,a*)=+id*, m2(a*,a)=-id*";
}

AInfinityPresentation dimer_ainfinity(const DimerModel& d) {
    Quiver q = dimer_to_quiver(d);
    AInfinityPresentation P;
    for (int v = 0; v < q.vertexCount; ++v) P.objects.push_back("v" + std::to_string(v));
    // identities, arrows, duals, co-identities
    std::vector<int> idOf(q.vertexCount), coidOf(q.vertexCount);
    for (int v = 0; v < q.vertexCount; ++v) {
        idOf[v] = (int)P.gens.size();
        P.gens.push_back({"id" + std::to_string(v), 0, v, v});
    }
    std::map<std::string, int> arrowGen, dualGen;
    for (const auto& a : q.arrows) {
        arrowGen[a.id] = (int)P.gens.size();
        // the arrow a: source -> target acts as a morphism target -> source
        P.gens.push_back({a.id, 1, a.target, a.source});
    }
    for (const auto& a : q.arrows) {
        dualGen[a.id] = (int)P.gens.size();
        P.gens.push_back({a.id + "*", 2, a.source, a.target});
    }
    for (int v = 0; v < q.vertexCount; ++v) {
        coidOf[v] = (int)P.gens.size();
        P.gens.push_back({"id" + std::to_string(v) + "*", 3, v, v});
    }

    // units: strict on the left, signed on the right
    for (int g = 0; g < (int)P.gens.size(); ++g) {
        const auto& gen = P.gens[g];
        LinearCombination<int> val(g);
        P.ops[{idOf[gen.target], g}] = val;
        if (gen.degree % 2 == 0)
            P.ops[{g, idOf[gen.source]}] = val;
        else
            P.ops[{g, idOf[gen.source]}] = -val;
    }
    // dual pairings
    for (const auto& a : q.arrows) {
        int ga = arrowGen[a.id], gd = dualGen[a.id];
        P.ops[{ga, gd}] = LinearCombination<int>(coidOf[a.source]);
        P.ops[{gd, ga}] = -LinearCombination<int>(coidOf[a.target]);
    }
    // node cycles: every rotation of the cycle (c_0, ..., c_k) around a node
    // gives m_k(c_{r+1}, ..., c_{r+k}) = sign * dual(c_r)
    NodeCycles cycles = node_cycles(d);
    auto addCycleOps = [&](const std::vector<std::string>& cyc, int sign) {
        size_t len = cyc.size();
        if (len < 2) throw DimerError("node cycle too short");
        for (size_t r = 0; r < len; ++r) {
            std::vector<int> tuple;
            for (size_t k = 1; k < len; ++k) tuple.push_back(arrowGen.at(cyc[(r + k) % len]));
            LinearCombination<int> val(dualGen.at(cyc[r]), Rational(sign));
            auto it = P.ops.find(tuple);
            if (it == P.ops.end())
                P.ops[tuple] = val;
            else
                it->second.add(val);
        }
    };
    for (const auto& c : cycles.whiteCycles) addCycleOps(c, +1);
    for (const auto& c : cycles.blackCycles) addCycleOps(c, -1);

    // cyclic pairing of dimension three
    for (const auto& a : q.arrows) {
        P.pairing[{dualGen[a.id], arrowGen[a.id]}] = Rational(1);
        P.pairing[{arrowGen[a.id], dualGen[a.id]}] = Rational(1);
    }
    for (int v = 0; v < q.vertexCount; ++v) {
        P.pairing[{coidOf[v], idOf[v]}] = Rational(1);
        P.pairing[{idOf[v], coidOf[v]}] = Rational(1);
    }
    P.dimension = 3;
    return P;
}

AInfCheckReport check_ainfinity_relations(const AInfinityPresentation& A, int maxArity) {
    if (maxArity < 2) throw std::invalid_argument("maxArity must be >= 2");
    AInfCheckReport rep;
    size_t support = A.max_op_arity();

    std::vector<int> tuple;
    std::function<void(int)> recurse = [&](int n) {
        if ((int)tuple.size() == n) {
            ++rep.tuplesChecked;
            LinearCombination<int> residual;
            for (int k = 1; k <= n; ++k) {
                if ((size_t)k > support && k != n) continue;
                for (int j = 0; j + k <= n; ++j) {
                    std::vector<int> inner(tuple.begin() + j, tuple.begin() + j + k);
                    LinearCombination<int> innerVal = A.op(inner);
                    if (innerVal.is_zero()) continue;
                    long long e = 0;
                    for (int i = 0; i < j; ++i) e += A.gens[tuple[i]].degree - 1;
                    Rational sign((e % 2 + 2) % 2 == 0 ? 1 : -1);
                    for (const auto& [t, c] : innerVal.terms()) {
                        std::vector<int> outer(tuple.begin(), tuple.begin() + j);
                        outer.push_back(t);
                        for (int i = j + k; i < n; ++i) outer.push_back(tuple[i]);
                        residual.add(A.op(outer), sign * c);
                    }
                }
            }
            if (!residual.is_zero()) {
                std::ostringstream os;
                os << "tuple (";
                for (size_t i = 0; i < tuple.size(); ++i)
                    os << (i ? ", " : "") << A.gens[tuple[i]].name;
                os << ") has residual " << A.format(residual);
                rep.violations.push_back({os.str()});
            }
            return;
        }
        if (tuple.empty()) {
            for (int g = 0; g < (int)A.gens.size(); ++g) {
                tuple.push_back(g);
                recurse(n);
                tuple.pop_back();
            }
        } else {
            // tuples are display-ordered: extend on the right with a
            // generator whose target equals the current rightmost source
            for (int g = 0; g < (int)A.gens.size(); ++g) {
                if (A.gens[g].target != A.gens[tuple.back()].source) continue;
                tuple.push_back(g);
                recurse(n);
                tuple.pop_back();
            }
        }
    };
    for (int n = 1; n <= maxArity; ++n) {
        // a term needs k <= support and n - k + 1 <= support
        if (n > 2 * (int)support - 1) continue;
        tuple.clear();
        recurse(n);
    }
    return rep;
}

CyclicityReport check_cyclicity(const AInfinityPresentation& A) {
    CyclicityReport rep;
    if (A.pairing.empty()) {
        rep.nondegenerate = false;
        return rep;
    }
    // non-degeneracy per ordered object pair: the pairing matrix between
    // Hom(v,w) and Hom(w,v) must have full rank both ways
    rep.nondegenerate = true;
    size_t nObj = A.objects.size();
    for (size_t v = 0; v < nObj; ++v)
        for (size_t w = 0; w < nObj; ++w) {
            std::vector<int> rows, cols;
            for (int g = 0; g < (int)A.gens.size(); ++g) {
                if (A.gens[g].source == (int)v && A.gens[g].target == (int)w) rows.push_back(g);
                if (A.gens[g].source == (int)w && A.gens[g].target == (int)v) cols.push_back(g);
            }
            if (rows.empty() && cols.empty()) continue;
            if (rows.size() != cols.size()) {
                rep.nondegenerate = false;
                continue;
            }
            // exact rank by Gaussian elimination on the small dense matrix
            std::vector<std::vector<Rational>> m(rows.size(),
                                                 std::vector<Rational>(cols.size(), Rational(0)));
            for (size_t i = 0; i < rows.size(); ++i)
                for (size_t j = 0; j < cols.size(); ++j) {
                    auto it = A.pairing.find({rows[i], cols[j]});
                    if (it != A.pairing.end()) m[i][j] = it->second;
                }
            size_t rank = 0;
            for (size_t c = 0; c < cols.size() && rank < rows.size(); ++c) {
                size_t p = rank;
                while (p < rows.size() && m[p][c].is_zero()) ++p;
                if (p == rows.size()) continue;
                std::swap(m[rank], m[p]);
                for (size_t r = 0; r < rows.size(); ++r) {
                    if (r == rank || m[r][c].is_zero()) continue;
                    Rational f = m[r][c] / m[rank][c];
                    for (size_t cc = c; cc < cols.size(); ++cc) m[r][cc] -= f * m[rank][cc];
                }
                ++rank;
            }
            if (rank != rows.size()) rep.nondegenerate = false;
        }

    auto pairingOf = [&](const LinearCombination<int>& val, int g) {
        Rational acc(0);
        for (const auto& [t, c] : val.terms()) {
            auto it = A.pairing.find({t, g});
            if (it != A.pairing.end()) acc += c * it->second;
        }
        return acc;
    };
    auto absR = [](const Rational& r) { return r.sign() < 0 ? -r : r; };

    for (const auto& [tuple, val] : A.ops) {
        for (int a0 = 0; a0 < (int)A.gens.size(); ++a0) {
            // <m_k(a_1..a_k), a_0> is defined when a_0 closes the loop
            if (A.gens[a0].target != A.gens[tuple.back()].source) continue;
            if (A.gens[a0].source != A.gens[tuple.front()].target) continue;
            Rational lhs = pairingOf(val, a0);
            std::vector<int> rotated;
            rotated.push_back(a0);
            rotated.insert(rotated.end(), tuple.begin(), tuple.end() - 1);
            Rational rhs = pairingOf(A.op(rotated), tuple.back());
            ++rep.unsignedChecked;
            if (absR(lhs) != absR(rhs)) {
                std::ostringstream os;
                os << "|<m(";
                for (size_t i = 0; i < tuple.size(); ++i)
                    os << (i ? "," : "") << A.gens[tuple[i]].name;
                os << "), " << A.gens[a0].name << ">| = " << absR(lhs).str() << " vs rotated "
                   << absR(rhs).str();
                rep.unsignedViolations.push_back(os.str());
            } else if (!lhs.is_zero()) {
                // signed comparison under the cyclic convention
                long long red0 = A.gens[a0].degree - 1, redRest = 0;
                for (int g : tuple) redRest += A.gens[g].degree - 1;
                redRest -= 0;  // all inputs of the rotated tuple except a_0
                long long expo = red0 * (redRest);
                Rational expected = (expo % 2 == 0) ? rhs : -rhs;
                if (lhs != expected) {
                    std::ostringstream os;
                    os << "sign mismatch at <m(";
                    for (size_t i = 0; i < tuple.size(); ++i)
                        os << (i ? "," : "") << A.gens[tuple[i]].name;
                    os << "), " << A.gens[a0].name << ">";
                    rep.signMismatches.push_back(os.str());
                }
            }
        }
    }
    return rep;
}

std::string StructureDictionary::str(const AInfinityPresentation& A,
                                     const AInfinityPresentation& B) const {
    std::ostringstream os;
    for (size_t v = 0; v < objectMap.size(); ++v)
        os << A.objects[v] << " -> " << B.objects[objectMap[v]] << "; ";
    for (size_t g = 0; g < genMap.size(); ++g) {
        os << A.gens[g].name << " -> ";
        if (genMap[g].second.sign() < 0) os << "-";
        os << B.gens[genMap[g].first].name << "; ";
    }
    return os.str();
}

namespace {

bool tables_match(const AInfinityPresentation& A, const AInfinityPresentation& B,
                  const std::vector<int>& genMap, const std::vector<Rational>& sign,
                  std::string* firstFailure) {
    for (const auto& [tuple, val] : A.ops) {
        std::vector<int> mapped(tuple.size());
        Rational scale(1);
        for (size_t i = 0; i < tuple.size(); ++i) {
            mapped[i] = genMap[tuple[i]];
            scale *= sign[tuple[i]];
        }
        LinearCombination<int> expected;
        for (const auto& [t, c] : val.terms()) expected.add(genMap[t], c * sign[t]);
        LinearCombination<int> got = B.op(mapped);
        // m(phi a_1, ..., phi a_k) must equal phi(m(a_1...a_k)) * prod signs
        LinearCombination<int> scaledGot;
        scaledGot.add(got, scale);
        if (scaledGot != expected) {
            if (firstFailure) {
                std::ostringstream os;
                os << "op mismatch on (";
                for (size_t i = 0; i < tuple.size(); ++i)
                    os << (i ? "," : "") << A.gens[tuple[i]].name;
                os << ")";
                *firstFailure = os.str();
            }
            return false;
        }
    }
    // also require that B has no extra nonzero ops outside the image
    if (A.ops.size() != B.ops.size()) {
        if (firstFailure) *firstFailure = "operation tables have different supports";
        return false;
    }
    return true;
}

}  // namespace

CompareResult compare_structures(const AInfinityPresentation& A, const AInfinityPresentation& B,
                                 std::optional<std::vector<int>> objectMap) {
    CompareResult result;
    if (A.objects.size() != B.objects.size() || A.gens.size() != B.gens.size()) {
        result.failure = "object or generator counts differ";
        return result;
    }
    size_t nObj = A.objects.size();
    std::vector<std::vector<int>> objectMaps;
    if (objectMap) {
        objectMaps.push_back(*objectMap);
    } else {
        std::vector<int> perm(nObj);
        for (size_t i = 0; i < nObj; ++i) perm[i] = (int)i;
        do {
            objectMaps.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    for (const auto& om : objectMaps) {
        // group A generators by (degree, mapped source, mapped target)
        std::map<std::tuple<int, int, int>, std::vector<int>> groupsA, groupsB;
        for (int g = 0; g < (int)A.gens.size(); ++g)
            groupsA[{A.gens[g].degree, om[A.gens[g].source], om[A.gens[g].target]}].push_back(g);
        for (int g = 0; g < (int)B.gens.size(); ++g)
            groupsB[{B.gens[g].degree, B.gens[g].source, B.gens[g].target}].push_back(g);
        bool shapeOk = groupsA.size() == groupsB.size();
        for (const auto& [key, ga] : groupsA) {
            auto it = groupsB.find(key);
            if (it == groupsB.end() || it->second.size() != ga.size()) shapeOk = false;
        }
        if (!shapeOk) {
            result.failure = "hom space shapes differ";
            continue;
        }
        // iterate all per-group bijections
        std::vector<std::pair<std::vector<int>, std::vector<int>>> blocks;
        for (const auto& [key, ga] : groupsA) blocks.push_back({ga, groupsB.at(key)});
        std::vector<std::vector<int>> perms(blocks.size());
        std::function<bool(size_t, std::vector<int>&)> tryBlocks = [&](size_t bi,
                                                                       std::vector<int>& genMap) {
            if (bi == blocks.size()) {
                // try sign vectors; degree-0 generators stay +1
                std::vector<int> flex;
                for (int g = 0; g < (int)A.gens.size(); ++g)
                    if (A.gens[g].degree != 0) flex.push_back(g);
                size_t total = size_t(1) << flex.size();
                for (size_t mask = 0; mask < total; ++mask) {
                    std::vector<Rational> sign(A.gens.size(), Rational(1));
                    for (size_t i = 0; i < flex.size(); ++i)
                        if (mask & (size_t(1) << i)) sign[flex[i]] = Rational(-1);
                    std::string why;
                    if (tables_match(A, B, genMap, sign, &why)) {
                        StructureDictionary dict;
                        dict.objectMap = om;
                        for (int g = 0; g < (int)A.gens.size(); ++g)
                            dict.genMap.push_back({genMap[g], sign[g]});
                        result.dictionary = dict;
                        return true;
                    }
                    if (result.failure.empty()) result.failure = why;
                }
                return false;
            }
            std::vector<int> perm = blocks[bi].second;
            std::sort(perm.begin(), perm.end());
            do {
                for (size_t i = 0; i < blocks[bi].first.size(); ++i)
                    genMap[blocks[bi].first[i]] = perm[i];
                if (tryBlocks(bi + 1, genMap)) return true;
            } while (std::next_permutation(perm.begin(), perm.end()));
            return false;
        };
        std::vector<int> genMap(A.gens.size(), -1);
        if (tryBlocks(0, genMap)) return result;
    }
    if (result.failure.empty()) result.failure = "no dictionary found";
    return result;
}

std::string presentation_to_json(const AInfinityPresentation& A) {
    nlohmann::json j;
    j["objects"] = A.objects;
    j["dimension"] = A.dimension;
    j["generators"] = nlohmann::json::array();
    for (const auto& g : A.gens)
        j["generators"].push_back({{"name", g.name},
                                   {"degree", g.degree},
                                   {"source", A.objects[g.source]},
                                   {"target", A.objects[g.target]}});
    j["ops"] = nlohmann::json::array();
    for (const auto& [tuple, val] : A.ops) {
        nlohmann::json op;
        op["arity"] = tuple.size();
        op["inputs"] = nlohmann::json::array();
        for (int g : tuple) op["inputs"].push_back(A.gens[g].name);
        op["output"] = nlohmann::json::array();
        for (const auto& [t, c] : val.terms())
            op["output"].push_back({{"gen", A.gens[t].name}, {"coeff", c.str()}});
        j["ops"].push_back(op);
    }
    j["pairing"] = nlohmann::json::array();
    for (const auto& [lr, v] : A.pairing)
        j["pairing"].push_back(
            {{"left", A.gens[lr.first].name}, {"right", A.gens[lr.second].name}, {"value", v.str()}});
    j["signConvention"] = SignConvention::describe();
    return j.dump(2);
}

}  // namespace conifold
