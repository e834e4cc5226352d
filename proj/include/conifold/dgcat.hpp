#pragma once

#include <map>
#include <string>
#include <vector>

#include "conifold/lincomb.hpp"
#include "conifold/rational.hpp"

namespace conifold {

using Chain = LinearCombination<int>;

// Finite dg-category presentation: generators are morphisms between objects,
// the differential raises degree by one, and the product is composition
// (product(g, f) = g o f with f acting first).
struct DgGenerator {
    std::string name;
    int degree;
    int source;
    int target;
};

struct DgCategoryPresentation {
    std::vector<std::string> objects;
    std::vector<DgGenerator> gens;
    std::vector<int> units;  // unit generator per object
    std::map<int, Chain> differential;
    std::map<std::pair<int, int>, Chain> product;

    int find(const std::string& name) const;
    bool composable(int g, int f) const {
        return gens[g].source == gens[f].target;
    }
    Chain d_of(const Chain& v) const;
    Chain prod(const Chain& a, const Chain& b) const;
    std::string format(const Chain& v) const;
};

struct HomotopyData {
    // basis of the chosen cohomology representatives i(H); entries may be
    // proper linear combinations of chain generators
    std::vector<Chain> representatives;
    std::map<int, Chain> qMap;  // degree -1 operator

    Chain q_of(const Chain& v) const;
};

// P = id - dQ - Qd
Chain p_of(const DgCategoryPresentation& D, const HomotopyData& H, const Chain& v);

struct DgValidationReport {
    long long checks = 0;
    std::vector<std::string> violations;
    bool pass() const { return violations.empty(); }
};

// Machine-checks every invariant: degree bookkeeping, d^2 = 0, Leibniz,
// associativity, unit laws, d(rep) = 0, P(rep) = rep, P^2 = P, and
// P(g) in span(representatives) for every generator.
DgValidationReport validate_dg_data(const DgCategoryPresentation& D, const HomotopyData& H);

// The cellular model of the two vanishing-cycle spheres: Hom(S_i, S_i) is
// the 8-generator Hopf model of C*(S^3) with d(x) = z, d(y) = w,
// d(xy) = yz + xw; Hom(S1, S0) is the sum of the two solid-torus models and
// Hom(S0, S1) the corresponding relative models. The product table realizes
// every composition used alongside the homotopy data Q(z) = x, Q(w) = y,
// Q(yz) = Q(xw) = xy/2, Q(z1) = x1, Q(yz1) = xy1, Q(w2) = y2, Q(xw2) = xy2.
std::pair<DgCategoryPresentation, HomotopyData> builtin_vanishing_cycle_model();

std::string dg_model_to_json(const DgCategoryPresentation& D, const HomotopyData& H);
std::pair<DgCategoryPresentation, HomotopyData> dg_model_from_json(const std::string& text);

}  // namespace conifold
