#include "conifold/merkulov.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace conifold {

Chain LambdaCalculator::lambda(const std::vector<int>& inputs) {
    if (inputs.empty()) throw std::invalid_argument("empty lambda tuple");
    auto it = memo_.find(inputs);
    if (it != memo_.end()) return it->second;
    size_t n = inputs.size();
    Chain res;
    if (n == 1) {
        res = Chain(inputs[0]);
    } else if (n == 2) {
        res = D_.prod(Chain(inputs[0]), Chain(inputs[1]));
    } else {
        std::vector<int> head(inputs.begin(), inputs.end() - 1);
        std::vector<int> tail(inputs.begin() + 1, inputs.end());
        Rational s1((n - 1) % 2 == 0 ? 1 : -1);
        res.add(D_.prod(H_.q_of(lambda(head)), Chain(inputs.back())), s1);
        long long e2 = (long long)n * D_.gens[inputs[0]].degree;
        Rational s2(e2 % 2 == 0 ? -1 : 1);  // minus (-1)^{n deg v1}
        res.add(D_.prod(Chain(inputs[0]), H_.q_of(lambda(tail))), s2);
        for (size_t k = 2; k + 2 <= n; ++k) {
            size_t l = n - k;
            long long degsum = 0;
            for (size_t i = 0; i < k; ++i) degsum += D_.gens[inputs[i]].degree;
            long long e = (long long)k + (long long)(l - 1) * degsum;
            Rational s3(e % 2 == 0 ? -1 : 1);  // minus (-1)^{k+(l-1)(...)}
            std::vector<int> left(inputs.begin(), inputs.begin() + k);
            std::vector<int> right(inputs.begin() + k, inputs.end());
            res.add(D_.prod(H_.q_of(lambda(left)), H_.q_of(lambda(right))), s3);
        }
    }
    memo_.emplace(inputs, res);
    return res;
}

Chain LambdaCalculator::m(const std::vector<int>& inputs) {
    return p_of(D_, H_, lambda(inputs));
}

Chain LambdaCalculator::m_on_representatives(const std::vector<int>& repTuple) {
    // expand multi-term representatives multilinearly
    std::vector<std::pair<Rational, std::vector<int>>> expansions = {{Rational(1), {}}};
    for (int r : repTuple) {
        std::vector<std::pair<Rational, std::vector<int>>> next;
        for (const auto& [coef, seq] : expansions)
            for (const auto& [g, c] : H_.representatives[r].terms()) {
                auto s2 = seq;
                s2.push_back(g);
                next.push_back({coef * c, std::move(s2)});
            }
        expansions = std::move(next);
    }
    Chain total;
    for (const auto& [coef, seq] : expansions) total.add(m(seq), coef);
    return total;
}

Rational transfer_redress_sign(const std::vector<int>& degrees) {
    long long k = (long long)degrees.size();
    long long e = k * (k - 1) / 2;
    for (size_t i = 0; i < degrees.size(); ++i) e += (k - 1 - (long long)i) * (degrees[i] - 1);
    return Rational((e % 2 + 2) % 2 == 0 ? 1 : -1);
}

namespace {

struct RepInfo {
    std::string name;
    int degree;
    int source;
    int target;
};

std::vector<RepInfo> rep_infos(const DgCategoryPresentation& D, const HomotopyData& H) {
    std::vector<RepInfo> out;
    for (size_t i = 0; i < H.representatives.size(); ++i) {
        const Chain& r = H.representatives[i];
        if (r.is_zero()) throw std::invalid_argument("zero representative");
        const auto& [g0, c0] = *r.terms().begin();
        RepInfo info{"", D.gens[g0].degree, D.gens[g0].source, D.gens[g0].target};
        for (const auto& [g, c] : r.terms()) {
            if (D.gens[g].degree != info.degree || D.gens[g].source != info.source ||
                D.gens[g].target != info.target)
                throw std::invalid_argument("representative mixes degrees or hom pairs");
        }
        if (r.size() == 1 && c0 == Rational(1)) {
            info.name = "[" + D.gens[g0].name + "]";
        } else {
            std::ostringstream os;
            os << "[" << D.format(r) << "]";
            info.name = os.str();
        }
        out.push_back(info);
    }
    return out;
}

// expresses a chain lying in the representative span in rep coordinates
LinearCombination<int> to_rep_coords(const DgCategoryPresentation& D, const HomotopyData& H,
                                     const Chain& v) {
    // Gauss: solve sum_i x_i rep_i = v
    std::vector<Chain> rows = H.representatives;
    Chain rem = v;
    LinearCombination<int> coords;
    // forward eliminate with recorded combinations
    std::vector<LinearCombination<int>> combo(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) combo[i] = LinearCombination<int>((int)i);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].is_zero()) continue;
        auto lead = rows[i].terms().begin();
        int col = lead->first;
        Rational pivot = lead->second;
        for (size_t j = 0; j < rows.size(); ++j) {
            if (j == i) continue;
            Rational c = rows[j].coeff(col);
            if (!c.is_zero()) {
                rows[j].add(rows[i], Rational(0) - c / pivot);
                combo[j].add(combo[i], Rational(0) - c / pivot);
            }
        }
        Rational c = rem.coeff(col);
        if (!c.is_zero()) {
            rem.add(rows[i], Rational(0) - c / pivot);
            coords.add(combo[i], c / pivot);
        }
    }
    if (!rem.is_zero())
        throw std::logic_error("transferred value escapes the representative span: " +
                               D.format(v));
    return coords;
}

}  // namespace

TransferResult merkulov_transfer(const DgCategoryPresentation& D, const HomotopyData& H,
                                 int maxArity) {
    DgValidationReport val = validate_dg_data(D, H);
    if (!val.pass())
        throw std::invalid_argument("dg data fails validation: " + val.violations.front());
    if (maxArity < 2) throw std::invalid_argument("maxArity must be >= 2");

    TransferResult result;
    std::vector<RepInfo> reps = rep_infos(D, H);
    AInfinityPresentation& P = result.presentation;
    P.objects = D.objects;
    for (const auto& r : reps) P.gens.push_back({r.name, r.degree, r.source, r.target});
    P.dimension = 3;

    // degrees present per hom pair, to skip arities with no possible output
    std::map<std::pair<int, int>, std::vector<int>> degreesByHom;
    for (const auto& r : reps) degreesByHom[{r.source, r.target}].push_back(r.degree);

    LambdaCalculator calc(D, H);
    std::vector<int> tuple;
    std::function<void(int)> recurse = [&](int n) {
        if ((int)tuple.size() == n) {
            long long outDeg = 2 - n;
            for (int r : tuple) outDeg += reps[r].degree;
            auto homIt = degreesByHom.find({reps[tuple.back()].source, reps[tuple.front()].target});
            bool admissible = false;
            if (homIt != degreesByHom.end())
                for (int dg : homIt->second)
                    if (dg == outDeg) admissible = true;
            if (!admissible) return;  // P kills everything in this degree
            Chain value = calc.m_on_representatives(tuple);
            if (value.is_zero()) return;
            LinearCombination<int> coords = to_rep_coords(D, H, value);
            result.rawOps[tuple] = coords;
            // redress into the reduced-degree convention
            std::vector<int> degs;
            for (int r : tuple) degs.push_back(reps[r].degree);
            LinearCombination<int> redressed;
            redressed.add(coords, transfer_redress_sign(degs));
            P.ops[tuple] = redressed;
            return;
        }
        for (int r = 0; r < (int)reps.size(); ++r) {
            if (!tuple.empty() && reps[r].target != reps[tuple.back()].source) continue;
            tuple.push_back(r);
            recurse(n);
            tuple.pop_back();
        }
    };
    for (int n = 2; n <= maxArity; ++n) recurse(n);

    // induced cyclic pairing: the coefficient of the degree-3 class in the
    // raw m_2 value (dimension three)
    for (const auto& [t, coords] : result.rawOps) {
        if (t.size() != 2) continue;
        for (const auto& [r, c] : coords.terms())
            if (reps[r].degree == 3 && reps[t[0]].degree + reps[t[1]].degree == 3)
                P.pairing[{t[0], t[1]}] = c.sign() < 0 ? Rational(-1) : Rational(1);
    }
    return result;
}

std::vector<std::string> nonvanishing_higher_ops(const TransferResult& t, int lo, int hi) {
    std::vector<std::string> out;
    for (const auto& [tuple, val] : t.rawOps) {
        if ((int)tuple.size() < lo || (int)tuple.size() > hi) continue;
        std::ostringstream os;
        os << "m" << tuple.size() << "(";
        for (size_t i = 0; i < tuple.size(); ++i)
            os << (i ? ", " : "") << t.presentation.gens[tuple[i]].name;
        os << ") != 0";
        out.push_back(os.str());
    }
    return out;
}

}  // namespace conifold
