// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "conifold/ainfinity.hpp"
#include "conifold/dgcat.hpp"
#include "conifold/dimer.hpp"
#include "conifold/floer.hpp"
#include "conifold/merkulov.hpp"
#include "conifold/mirror.hpp"
#include "conifold/pathgeom.hpp"
#include "conifold/sheaf.hpp"

using namespace conifold;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, double limitSeconds,
               const std::function<std::pair<bool, std::string>()>& run) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        auto [o, d] = run();
        ok = o;
        detail = d;
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << name << " (" << secs
       << "s";
    if (secs > limitSeconds) {
        os << ", over the " << limitSeconds << "s budget";
        ok = false;
    }
    os << ")";
    if (!detail.empty()) os << " -- " << detail;
    std::cout << os.str() << "\n";
    if (!ok) ++failures;
}

std::vector<BasisMorphism> sector_range(Sector s, long long maxA, long long maxI) {
    std::vector<BasisMorphism> out;
    bool mixed = (s == Sector::Q || s == Sector::R);
    for (long long twoA = -2 * maxA; twoA <= 2 * maxA; ++twoA) {
        if ((twoA % 2 != 0) != mixed) continue;
        for (long long i1 = 0; i1 <= maxI; ++i1)
            for (long long i2 = 0; i2 <= maxI; ++i2) out.push_back({s, twoA, i1, i2});
    }
    return out;
}

}  // namespace

int main() {
    std::cout << "conifold acceptance suite\n";
    std::cout << "sign convention: " << SignConvention::describe() << "\n\n";

    criterion(1, "composition oracle equivalence, |a|,|b| <= 5, i,j <= 3", 10.0, [] {
        long long pairs = 0, discrepancyPairs = 0;
        std::map<std::tuple<Sector, Sector, long long, long long, long long, long long>, bool>
            memo;
        for (int fsI = 0; fsI < 4; ++fsI)
            for (int gsI = 0; gsI < 4; ++gsI) {
                Sector fs = static_cast<Sector>(fsI), gs = static_cast<Sector>(gsI);
                if (!sectors_composable(fs, gs)) continue;
                for (const auto& f : sector_range(fs, 5, 3))
                    for (const auto& g : sector_range(gs, 5, 3)) {
                        ++pairs;
                        auto key =
                            std::make_tuple(fs, gs, f.twoA, g.twoA, f.i1 + g.i1, f.i2 + g.i2);
                        auto it = memo.find(key);
                        if (it == memo.end())
                            it = memo
                                     .emplace(key, compose_closed_form(g, f) ==
                                                       compose_oracle(g, f))
                                     .first;
                        if (!it->second)
                            return std::make_pair(false, "mismatch at " + g.str() + " o " +
                                                             f.str());
                        if (closed_form_k(fs, gs, f.a(), g.a()) !=
                            printed_form_k(fs, gs, f.a(), g.a()))
                            ++discrepancyPairs;
                    }
            }
        return std::make_pair(true, std::to_string(pairs) + " pairs; " +
                                        std::to_string(discrepancyPairs) +
                                        " reported-discrepancy pairs vs the printed symmetric "
                                        "mixed-sector depth");
    });

    criterion(2, "quiver relations under path-word evaluation", 1.0, [] {
        RelationReport rep = relation_check();
        if (!rep.all_pass()) return std::make_pair(false, std::string("a relation fails"));
        Quiver q = dimer_to_quiver(conifold_dimer());
        for (const auto& r : q.relations)
            if (evaluate_path_word(r.plus) != evaluate_path_word(r.minus))
                return std::make_pair(false, "dimer relation " + r.arrow + " fails");
        return std::make_pair(true, std::string("4 + 4 relation identities"));
    });

    criterion(3, "dimer pipeline: quiver ideal and the sixteen table entries", 1.0, [] {
        Quiver q = dimer_to_quiver(conifold_dimer());
        if (q.vertexCount != 2 || q.arrows.size() != 4 || q.relations.size() != 4)
            return std::make_pair(false, std::string("wrong quiver shape"));
        using Word = std::vector<std::string>;
        auto pairOf = [](Word a, Word b) {
            if (b < a) std::swap(a, b);
            return std::make_pair(a, b);
        };
        std::set<std::pair<Word, Word>> expected = {
            pairOf({"x", "t1", "y"}, {"y", "t1", "x"}),
            pairOf({"x", "t2", "y"}, {"y", "t2", "x"}),
            pairOf({"t1", "x", "t2"}, {"t2", "x", "t1"}),
            pairOf({"t1", "y", "t2"}, {"t2", "y", "t1"}),
        };
        std::set<std::pair<Word, Word>> got;
        for (const auto& r : q.relations) got.insert(pairOf(r.plus, r.minus));
        if (got != expected)
            return std::make_pair(false, std::string("relationideal differs from the quiver"));
        AInfinityPresentation P = dimer_ainfinity(conifold_dimer());
        auto one = [&](const char* n, int s) {
            return LinearCombination<int>(P.find_gen(n), Rational(s));
        };
        auto opOf = [&](std::initializer_list<const char*> names) {
            std::vector<int> t;
            for (const char* n : names) t.push_back(P.find_gen(n));
            return P.op(t);
        };
        struct Row {
            std::initializer_list<const char*> in;
            const char* out;
            int sign;
        };
        const Row m3rows[] = {
            {{"y", "t1", "x"}, "t2*", -1}, {{"t2", "y", "t1"}, "x*", -1},
            {{"x", "t2", "y"}, "t1*", -1}, {{"t1", "x", "t2"}, "y*", -1},
            {{"y", "t2", "x"}, "t1*", 1},  {{"t1", "y", "t2"}, "x*", 1},
            {{"x", "t1", "y"}, "t2*", 1},  {{"t2", "x", "t1"}, "y*", 1},
        };
        for (const auto& r : m3rows)
            if (opOf(r.in) != one(r.out, r.sign))
                return std::make_pair(false, std::string("m3 row differs: ") + r.out);
        const Row m2rows[] = {
            {{"x", "x*"}, "id0*", 1},  {{"y", "y*"}, "id0*", 1},
            {{"t2*", "t2"}, "id0*", -1}, {{"t1*", "t1"}, "id0*", -1},
            {{"t2", "t2*"}, "id1*", 1}, {{"t1", "t1*"}, "id1*", 1},
            {{"x*", "x"}, "id1*", -1}, {{"y*", "y"}, "id1*", -1},
        };
        int flipped = 0;
        for (const auto& r : m2rows) {
            if (opOf(r.in) != one(r.out, r.sign))
                return std::make_pair(false, std::string("m2 pairing row differs: ") + r.out);
            if (r.sign < 0) ++flipped;
        }
        return std::make_pair(
            true, std::string("8 m3 rows exactly as displayed; 8 m2 pairing rows, ") +
                      std::to_string(flipped) +
                      " of them with the sign forced by the A-infinity relations "
                      "(reported discrepancy vs the all-positive display)");
    });

    criterion(4, "A-infinity soundness of the dimer presentation to arity 8", 5.0, [] {
        AInfinityPresentation P = dimer_ainfinity(conifold_dimer());
        AInfCheckReport rep = check_ainfinity_relations(P, 8);
        if (!rep.pass()) return std::make_pair(false, rep.violations.front().what);
        CyclicityReport cyc = check_cyclicity(P);
        if (!cyc.unsigned_pass())
            return std::make_pair(false, cyc.unsignedViolations.empty()
                                             ? std::string("degenerate pairing")
                                             : cyc.unsignedViolations.front());
        return std::make_pair(true, std::to_string(rep.tuplesChecked) + " tuples; " +
                                        std::to_string(cyc.unsignedChecked) +
                                        " unsigned cyclicity identities; " +
                                        std::to_string(cyc.signMismatches.size()) +
                                        " signed mismatches reported");
    });

    criterion(5, "Merkulov transfer of the vanishing-cycle model", 10.0, [] {
        auto [D, H] = builtin_vanishing_cycle_model();
        DgValidationReport val = validate_dg_data(D, H);
        if (!val.pass()) return std::make_pair(false, val.violations.front());
        TransferResult t = merkulov_transfer(D, H, 8);
        const auto& P = t.presentation;
        auto rep = [&](const char* n) { return P.find_gen(std::string("[") + n + "]"); };
        auto raw = [&](std::initializer_list<const char*> names) {
            std::vector<int> tuple;
            for (const char* n : names) tuple.push_back(rep(n));
            auto it = t.rawOps.find(tuple);
            return it == t.rawOps.end() ? LinearCombination<int>() : it->second;
        };
        if (raw({"u1", "<z", "u2"}) != LinearCombination<int>(rep("x2")))
            return std::make_pair(false, std::string("m3(u1, <z, u2) differs"));
        if (raw({"<w", "u1", "<z"}) != LinearCombination<int>(rep("<yz")))
            return std::make_pair(false, std::string("m3(<w, u1, <z) differs"));
        if (raw({"u2", "<w", "u1"}) != LinearCombination<int>(rep("y1"), Rational(-1)))
            return std::make_pair(false, std::string("m3(u2, <w, u1) differs"));
        if (raw({"<z", "u2", "<w"}) != LinearCombination<int>(rep("<xw"), Rational(-1)))
            return std::make_pair(false, std::string("m3(<z, u2, <w) differs"));
        std::vector<std::string> higher = nonvanishing_higher_ops(t, 4, 8);
        if (!higher.empty()) return std::make_pair(false, higher.front());
        return std::make_pair(true,
                              std::to_string(val.checks) +
                                  " validation checks; four m3 values as stated; m_n = 0 for "
                                  "4 <= n <= 8");
    });

    criterion(6, "structure dictionary between the transfer and the dimer presentation", 30.0,
              [] {
                  auto [D, H] = builtin_vanishing_cycle_model();
                  TransferResult t = merkulov_transfer(D, H, 8);
                  AInfinityPresentation dimer = dimer_ainfinity(conifold_dimer());
                  // S0 -> O_E is vertex 0 of the quiver presentation
                  CompareResult r =
                      compare_structures(t.presentation, dimer, std::vector<int>{0, 1});
                  if (!r.success()) return std::make_pair(false, r.failure);
                  return std::make_pair(true,
                                        r.dictionary->str(t.presentation, dimer));
              });

    criterion(7, "triangle geometry equals the closed-form hit counts", 5.0, [] {
        long long checked = 0;
        for (int fsI = 0; fsI < 4; ++fsI)
            for (int gsI = 0; gsI < 4; ++gsI) {
                Sector fs = static_cast<Sector>(fsI), gs = static_cast<Sector>(gsI);
                if (!sectors_composable(fs, gs)) continue;
                bool mixedF = (fs == Sector::Q || fs == Sector::R);
                bool mixedG = (gs == Sector::Q || gs == Sector::R);
                for (long long m = 1; m <= 7; ++m)
                    for (long long n = 1; n <= 7; ++n)
                        for (long long twoA = -12; twoA <= 12; ++twoA) {
                            if ((twoA % 2 != 0) != mixedF) continue;
                            for (long long twoB = -12; twoB <= 12; ++twoB) {
                                if ((twoB % 2 != 0) != mixedG) continue;
                                Rational a(twoA, 2), b(twoB, 2);
                                HitCount cf = closed_form_hits(a, b, fs, gs);
                                HitCount geo{0, 0};
                                if (!(Rational(n) * a == Rational(m) * b))
                                    geo = count_discriminant_hits(
                                        triangle_vertices(m, n, a, b, fs, gs));
                                if (!(geo == cf)) {
                                    std::ostringstream os;
                                    os << "mismatch at a=" << a.str() << " b=" << b.str()
                                       << " m=" << m << " n=" << n;
                                    return std::make_pair(false, os.str());
                                }
                                ++checked;
                            }
                        }
            }
        return std::make_pair(true, std::to_string(checked) + " configurations");
    });

    criterion(8, "ring isomorphism of wrapped and sheaf products at maxSlope 4", 20.0, [] {
        RingIsomReport standard = verify_ring_isomorphism(4, false);
        if (!standard.pass()) return std::make_pair(false, standard.failures.front());
        RingIsomReport local = verify_ring_isomorphism(4, true);
        if (!local.pass()) return std::make_pair(false, local.failures.front());
        return std::make_pair(true, std::to_string(standard.pairsChecked) + " standard pairs, " +
                                        std::to_string(local.pairsChecked) +
                                        " localized pairs, affine offset " +
                                        std::to_string(standard.affineOffset));
    });

    criterion(9, "winding numbers and SYZ labels of the path fixtures", 1.0, [] {
        PuncturedPlane pp = conifold_plane();
        if (winding_number(gamma0(), pp) != 0)
            return std::make_pair(false, std::string("w(gamma0) != 0"));
        if (winding_number(gamma1(), pp) != -1)
            return std::make_pair(false, std::string("w(gamma1) != -1"));
        if (!(syz_transform_label(gamma0(), pp) == BundleLabel{BundleLabel::Carrier::X0, 0}))
            return std::make_pair(false, std::string("gamma0 label"));
        if (!(syz_transform_label(gamma1(), pp) == BundleLabel{BundleLabel::Carrier::X0, 1}))
            return std::make_pair(false, std::string("gamma1 label"));
        if (!(syz_transform_label(sigma0(), pp) ==
              BundleLabel{BundleLabel::Carrier::ExceptionalCurve, 0}))
            return std::make_pair(false, std::string("sigma0 label"));
        if (!(syz_transform_label(sigma1(), pp) ==
              BundleLabel{BundleLabel::Carrier::ExceptionalCurve, -1}))
            return std::make_pair(false, std::string("sigma1 label"));
        for (long long w = -3; w <= 3; ++w)
            if (winding_number(path_with_winding(w), pp) != w)
                return std::make_pair(false, "path_with_winding(" + std::to_string(w) + ")");
        return std::make_pair(true, std::string("gamma0 -> O_{X0}, gamma1 -> O_{X0}(1), "
                                                "sigma0 -> O_E, sigma1 -> O_E(-1), round trips"));
    });

    criterion(10, "wall-crossing substitution identities", 1.0, [] {
        wc::WallCrossReport rep = wc::verify_wall_crossing();
        for (const auto& c : rep.checks)
            if (!c.pass) return std::make_pair(false, c.name);
        return std::make_pair(true, std::string("composed image of u equals the superpotential"));
    });

    criterion(11, "skyscraper evaluation table and module multiplicativity", 2.0, [] {
        SkyscraperPoint p{Rational(1, 2)};
        NovikovScalar alphaT = NovikovScalar::monomial(Rational(1), 1, Rational(1, 2));
        for (long long i = 0; i <= 3; ++i)
            for (long long j = 0; j <= 3; ++j) {
                NovikovScalar want =
                    NovikovScalar(Rational(i % 2 == 0 ? 1 : -1)) * alphaT.pow(j);
                if (skyscraper_action(BasisMorphism{Sector::PP, 0, i, j}, p) != want)
                    return std::make_pair(false, std::string("P table"));
                if (skyscraper_action(BasisMorphism{Sector::Q, 1, i, j}, p) != want)
                    return std::make_pair(false, std::string("Q table"));
            }
        for (long long twoA = -6; twoA <= 6; ++twoA) {
            if (twoA == 0 && true) {
            } else if (twoA % 2 == 0) {
                if (twoA != 0 &&
                    !skyscraper_action(BasisMorphism{Sector::PP, twoA, 1, 1}, p).is_zero())
                    return std::make_pair(false, std::string("P vanishing"));
            } else if (twoA != 1) {
                if (!skyscraper_action(BasisMorphism{Sector::Q, twoA, 1, 1}, p).is_zero())
                    return std::make_pair(false, std::string("Q vanishing"));
            }
        }
        for (int fsI = 0; fsI < 4; ++fsI)
            for (int gsI = 0; gsI < 4; ++gsI) {
                Sector fs = static_cast<Sector>(fsI), gs = static_cast<Sector>(gsI);
                if (!sectors_composable(fs, gs)) continue;
                for (const auto& f : sector_range(fs, 3, 2))
                    for (const auto& g : sector_range(gs, 3, 2)) {
                        NovikovScalar lhs = skyscraper_action(compose_closed_form(g, f), p);
                        NovikovScalar rhs = skyscraper_action(g, p) * skyscraper_action(f, p);
                        if (lhs != rhs)
                            return std::make_pair(false, "multiplicativity at " + g.str() +
                                                             " o " + f.str());
                    }
            }
        return std::make_pair(true, std::string("tables match (-1)^i (alpha T^lambda)^j; "
                                                "evaluation is multiplicative"));
    });

    std::cout << "\n" << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES PRESENT") << "\n";
    return failures == 0 ? 0 : 1;
}
