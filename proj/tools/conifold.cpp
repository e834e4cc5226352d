// Command-line driver for the conifold verification suites.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "conifold/ainfinity.hpp"
#include "conifold/dgcat.hpp"
#include "conifold/dimer.hpp"
#include "conifold/fixtures.hpp"
#include "conifold/floer.hpp"
#include "conifold/merkulov.hpp"
#include "conifold/mirror.hpp"
#include "conifold/pathgeom.hpp"
#include "conifold/report.hpp"
#include "conifold/sheaf.hpp"
#include "conifold/workers.hpp"

using namespace conifold;

namespace {

int finish(const VerificationReport& rep, const std::string& reportPath) {
    std::cout << rep.table();
    if (!reportPath.empty()) {
        std::ofstream out(reportPath);
        if (!out) {
            std::cerr << "cannot write report to " << reportPath << "\n";
            return 2;
        }
        out << rep.to_json() << "\n";
    }
    return rep.ok() ? 0 : 1;
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

int cmd_verify_compositions(long long maxA, long long maxI, bool localized,
                            const std::string& reportPath) {
    VerificationReport rep;
    rep.suite = "verify-compositions";
    rep.parameters = "maxA=" + std::to_string(maxA) + " maxI=" + std::to_string(maxI) +
                     (localized ? " localized" : "");
    // fan the sweep out over (sector pair, f-index) slices; results merge in
    // slice order so the report stays deterministic
    struct Task {
        Sector fs, gs;
        long long twoA;
    };
    std::vector<Task> tasks;
    for (int fsI = 0; fsI < 4; ++fsI)
        for (int gsI = 0; gsI < 4; ++gsI) {
            Sector fs = static_cast<Sector>(fsI), gs = static_cast<Sector>(gsI);
            if (!sectors_composable(fs, gs)) continue;
            bool mixed = (fs == Sector::Q || fs == Sector::R);
            for (long long twoA = -2 * maxA; twoA <= 2 * maxA; ++twoA)
                if ((twoA % 2 != 0) == mixed) tasks.push_back({fs, gs, twoA});
        }
    struct Slice {
        long long pairs = 0;
        long long discrepancies = 0;
        std::string firstBad;
    };
    std::vector<Slice> slices = parallel_map<Slice>(tasks.size(), [&](size_t ti) {
        const Task& task = tasks[ti];
        Slice s;
        std::map<std::tuple<long long, long long, long long>, bool> memo;
        for (long long i1 = 0; i1 <= maxI; ++i1)
            for (long long i2 = 0; i2 <= maxI; ++i2) {
                BasisMorphism f{task.fs, task.twoA, i1, i2};
                for (const auto& g : sector_range(task.gs, maxA, maxI)) {
                    ++s.pairs;
                    auto key = std::make_tuple(g.twoA, f.i1 + g.i1, f.i2 + g.i2);
                    auto it = memo.find(key);
                    if (it == memo.end())
                        it = memo.emplace(key, compose_closed_form(g, f) == compose_oracle(g, f))
                                 .first;
                    if (!it->second && s.firstBad.empty())
                        s.firstBad = g.str() + " o " + f.str();
                    if (closed_form_k(task.fs, task.gs, f.a(), g.a()) !=
                        printed_form_k(task.fs, task.gs, f.a(), g.a()))
                        ++s.discrepancies;
                }
            }
        return s;
    });
    long long pairs = 0, discrepancies = 0;
    bool allEqual = true;
    std::string firstBad;
    for (const auto& s : slices) {
        pairs += s.pairs;
        discrepancies += s.discrepancies;
        if (!s.firstBad.empty() && allEqual) {
            allEqual = false;
            firstBad = s.firstBad;
        }
    }
    if (allEqual)
        rep.pass("closed form = oracle", std::to_string(pairs) + " composable pairs");
    else
        rep.fail("closed form = oracle", "first mismatch at " + firstBad);
    if (discrepancies > 0)
        rep.discrepancy("printed mixed-sector binomial depth",
                        std::to_string(discrepancies) +
                            " pairs where the printed symmetric k differs from the "
                            "coordinate-ring depths (k1, k2); the oracle-backed form is used");
    if (localized) {
        long long bad = 0, n = 0;
        for (int fsI = 0; fsI < 4; ++fsI)
            for (int gsI = 0; gsI < 4; ++gsI) {
                Sector fs = static_cast<Sector>(fsI), gs = static_cast<Sector>(gsI);
                if (!sectors_composable(fs, gs)) continue;
                for (long long twoA = -2 * maxA; twoA <= 2 * maxA; ++twoA) {
                    if ((twoA % 2 != 0) != (fs == Sector::Q || fs == Sector::R)) continue;
                    for (long long twoB = -2 * maxA; twoB <= 2 * maxA; ++twoB) {
                        if ((twoB % 2 != 0) != (gs == Sector::Q || gs == Sector::R)) continue;
                        for (long long i : {-2LL, 0LL, 3LL})
                            for (long long j : {-2LL, 1LL, 3LL}) {
                                BasisMorphism f{fs, twoA, i, j}, g{gs, twoB, j, i};
                                ++n;
                                if (compose_closed_form(g, f) != compose_oracle_localized(g, f))
                                    ++bad;
                            }
                    }
                }
            }
        if (bad == 0)
            rep.pass("localized window", std::to_string(n) + " pairs with indices in [-2,3]");
        else
            rep.fail("localized window", std::to_string(bad) + " mismatches");
    }
    return finish(rep, reportPath);
}

int cmd_verify_hms(long long maxSlope, const std::string& reportPath) {
    VerificationReport rep;
    rep.suite = "verify-hms";
    rep.parameters = "maxSlope=" + std::to_string(maxSlope);
    RingIsomReport standard = verify_ring_isomorphism(maxSlope, false);
    if (standard.pass())
        rep.pass("wrapped products = sheaf closed form",
                 std::to_string(standard.pairsChecked) + " chord pairs, affine offset " +
                     std::to_string(standard.affineOffset));
    else
        rep.fail("wrapped products = sheaf closed form", standard.failures.front());
    RingIsomReport local = verify_ring_isomorphism(maxSlope, true);
    if (local.pass())
        rep.pass("localized window [-2,3]", std::to_string(local.pairsChecked) + " pairs");
    else
        rep.fail("localized window [-2,3]", local.failures.front());
    return finish(rep, reportPath);
}

int cmd_transfer(const std::string& input, int maxArity, const std::string& exportPath,
                 const std::string& reportPath) {
    VerificationReport rep;
    rep.suite = "transfer";
    rep.parameters = "input=" + (input.empty() ? std::string("builtin") : input) +
                     " maxArity=" + std::to_string(maxArity);
    DgCategoryPresentation D;
    HomotopyData H;
    if (input.empty()) {
        std::tie(D, H) = builtin_vanishing_cycle_model();
    } else {
        std::tie(D, H) = dg_model_from_json(read_text_file(input));
    }
    DgValidationReport val = validate_dg_data(D, H);
    if (val.pass())
        rep.pass("dg data validation", std::to_string(val.checks) + " checks");
    else
        rep.fail("dg data validation", val.violations.front());
    if (!val.pass()) return finish(rep, reportPath);

    TransferResult t = merkulov_transfer(D, H, maxArity);
    for (const auto& [tuple, v] : t.rawOps) {
        if (tuple.size() != 3) continue;
        std::ostringstream os;
        os << "m3(";
        for (size_t i = 0; i < tuple.size(); ++i)
            os << (i ? ", " : "") << t.presentation.gens[tuple[i]].name;
        os << ") = " << t.presentation.format(t.rawOps.at(tuple));
        rep.pass(os.str());
    }
    if (maxArity >= 4) {
        std::vector<std::string> higher = nonvanishing_higher_ops(t, 4, maxArity);
        if (higher.empty())
            rep.pass("m_n = 0 for 4 <= n <= " + std::to_string(maxArity));
        else
            rep.fail("m_n = 0 for 4 <= n <= " + std::to_string(maxArity), higher.front());
    } else {
        rep.discrepancy("vanishing suite skipped", "maxArity < 4 leaves m_n unverified");
    }
    AInfCheckReport rel = check_ainfinity_relations(t.presentation, maxArity);
    if (rel.pass())
        rep.pass("transferred structure satisfies the A-infinity relations",
                 std::to_string(rel.tuplesChecked) + " tuples");
    else
        rep.fail("transferred structure satisfies the A-infinity relations",
                 rel.violations.front().what);
    if (!exportPath.empty()) {
        std::ofstream out(exportPath);
        if (!out) {
            std::cerr << "cannot write " << exportPath << "\n";
            return 2;
        }
        out << presentation_to_json(t.presentation) << "\n";
        rep.pass("exported A-infinity presentation", exportPath);
    }
    return finish(rep, reportPath);
}

int cmd_dimer(const std::string& input, const std::string& emit, const std::string& outPath,
              const std::string& reportPath) {
    DimerModel d = input.empty() ? conifold_dimer() : dimer_from_json(read_text_file(input));
    validate_dimer(d);
    std::string payload;
    if (emit == "quiver") {
        payload = quiver_to_json(dimer_to_quiver(d));
    } else if (emit == "ainfinity") {
        payload = presentation_to_json(dimer_ainfinity(d));
    } else {
        throw CLI::ValidationError("--emit must be quiver or ainfinity");
    }
    if (outPath.empty()) {
        std::cout << payload << "\n";
    } else {
        std::ofstream out(outPath);
        if (!out) {
            std::cerr << "cannot write " << outPath << "\n";
            return 2;
        }
        out << payload << "\n";
    }
    if (!reportPath.empty()) {
        VerificationReport rep;
        rep.suite = "dimer";
        rep.parameters = "emit=" + emit;
        rep.pass("emitted " + emit);
        std::ofstream out(reportPath);
        out << rep.to_json() << "\n";
    }
    return 0;
}

int cmd_paths(const std::string& input, const std::string& reportPath) {
    VerificationReport rep;
    rep.suite = "paths";
    PuncturedPlane pp = conifold_plane();
    struct Entry {
        std::string name;
        PLPath path;
    };
    std::vector<Entry> entries;
    if (input.empty()) {
        entries = {{"gamma0", gamma0()}, {"gamma1", gamma1()}, {"sigma0", sigma0()},
                   {"sigma1", sigma1()}};
    } else {
        std::string text = read_text_file(input);
        PLPath path = path_from_json(text);
        if (auto punct = punctures_from_json(text)) {
            if (path.kind == PathKind::Bounded)
                throw std::invalid_argument(
                    "custom punctures need a reference bounded path; only section paths "
                    "support a punctures override");
            pp.a = punct->first;
            pp.b = punct->second;
        }
        entries = {{input, path}};
    }
    for (const auto& [name, path] : entries) {
        if (path.kind == PathKind::Section) {
            AdmissibilityResult adm = is_admissible(path, pp);
            if (!adm.admissible) {
                rep.fail(name, adm.diagnostic);
                continue;
            }
            long long w = winding_number(path, pp);
            rep.pass(name, "winding " + std::to_string(w) + ", strongly admissible: " +
                               (is_strongly_admissible(path) ? "yes" : "no") + ", label " +
                               syz_transform_label(path, pp).str());
        } else {
            AdmissibilityResult adm = is_bounded_admissible(path, pp);
            if (!adm.admissible) {
                rep.fail(name, adm.diagnostic);
                continue;
            }
            long long w = winding_number_bounded(path, pp);
            rep.pass(name, "bounded winding " + std::to_string(w) + ", label " +
                               syz_transform_label(path, pp).str());
        }
    }
    return finish(rep, reportPath);
}

int cmd_wallcross(const std::string& reportPath) {
    VerificationReport rep;
    rep.suite = "wallcross";
    wc::WallCrossReport wcr = wc::verify_wall_crossing();
    for (const auto& c : wcr.checks) {
        if (c.pass)
            rep.pass(c.name, c.detail);
        else
            rep.fail(c.name, c.detail);
    }
    return finish(rep, reportPath);
}

int cmd_skyscraper(const std::string& lambdaStr, long long maxIndex,
                   const std::string& reportPath) {
    VerificationReport rep;
    rep.suite = "skyscraper";
    rep.parameters = "lambda=" + lambdaStr + " maxIndex=" + std::to_string(maxIndex);
    Rational lambda;
    auto slash = lambdaStr.find('/');
    if (slash == std::string::npos)
        lambda = Rational(std::stoll(lambdaStr));
    else
        lambda = Rational(std::stoll(lambdaStr.substr(0, slash)),
                          std::stoll(lambdaStr.substr(slash + 1)));
    SkyscraperPoint p{lambda};
    for (long long i = 0; i <= maxIndex; ++i)
        for (long long j = 0; j <= maxIndex; ++j) {
            BasisMorphism b{Sector::PP, 0, i, j};
            BasisMorphism q{Sector::Q, 1, i, j};
            rep.pass("P_{0," + std::to_string(i) + "," + std::to_string(j) + "} -> " +
                     skyscraper_action(b, p).str());
            rep.pass("Q_{1/2," + std::to_string(i) + "," + std::to_string(j) + "} -> " +
                     skyscraper_action(q, p).str());
        }
    return finish(rep, reportPath);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification suites for the conifold correspondences"};
    app.require_subcommand(1);
    std::string reportPath;
    app.add_option("--report", reportPath, "write the JSON report here")->capture_default_str();

    long long maxA = 5, maxI = 3;
    bool localized = false;
    auto* vc = app.add_subcommand("verify-compositions",
                                  "closed-form composition against the polynomial oracle")
                   ->fallthrough();
    vc->add_option("--max-a", maxA, "index bound |a|, |b|");
    vc->add_option("--max-i", maxI, "index bound i1, i2");
    vc->add_flag("--localized", localized, "add the Laurent-window suite");

    long long maxSlope = 4;
    auto* hms = app.add_subcommand("verify-hms", "wrapped triangle products against the sheaf side")->fallthrough();
    hms->add_option("--max-slope", maxSlope, "wrapping slope bound");

    std::string transferInput, exportPath;
    int maxArity = 8;
    auto* tr = app.add_subcommand("transfer", "Merkulov transfer of the vanishing-cycle model")->fallthrough();
    tr->add_option("--input", transferInput, "dg model JSON (default: builtin)");
    tr->add_option("--max-arity", maxArity, "highest arity computed");
    tr->add_option("--export", exportPath, "write the transferred presentation JSON");

    std::string dimerInput, emit = "quiver", outPath;
    auto* dm = app.add_subcommand("dimer", "dimer model to quiver or A-infinity data")->fallthrough();
    dm->add_option("--input", dimerInput, "dimer JSON (default: conifold fixture)");
    dm->add_option("--emit", emit, "quiver | ainfinity");
    dm->add_option("--out", outPath, "output file (default: stdout)");

    std::string pathInput;
    auto* pt = app.add_subcommand("paths", "winding numbers and SYZ labels of the fixtures")->fallthrough();
    pt->add_option("--input", pathInput, "path JSON (default: all fixtures)");

    app.add_subcommand("wallcross", "wall-crossing substitution identities")->fallthrough();

    std::string lambdaStr = "1/2";
    long long maxIndex = 3;
    auto* sk = app.add_subcommand("skyscraper", "Novikov evaluation at the skyscraper point")->fallthrough();
    sk->add_option("--lambda", lambdaStr, "action exponent (rational, e.g. 1/2)");
    sk->add_option("--max-index", maxIndex, "table bound for i, j");

    std::string fixturesDir = "fixtures";
    auto* fx = app.add_subcommand("fixtures", "write the versioned fixture files")->fallthrough();
    fx->add_option("--out", fixturesDir, "target directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (vc->parsed()) return cmd_verify_compositions(maxA, maxI, localized, reportPath);
        if (hms->parsed()) return cmd_verify_hms(maxSlope, reportPath);
        if (tr->parsed()) return cmd_transfer(transferInput, maxArity, exportPath, reportPath);
        if (dm->parsed()) return cmd_dimer(dimerInput, emit, outPath, reportPath);
        if (pt->parsed()) return cmd_paths(pathInput, reportPath);
        if (app.get_subcommand("wallcross")->parsed()) return cmd_wallcross(reportPath);
        if (sk->parsed()) return cmd_skyscraper(lambdaStr, maxIndex, reportPath);
        if (fx->parsed()) {
            std::cout << write_fixtures(fixturesDir) << "\n";
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const DimerError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
