#pragma once

#include <map>
#include <string>
#include <vector>

#include "conifold/ainfinity.hpp"
#include "conifold/dgcat.hpp"

namespace conifold {

// Chain-level lambda operators of the transfer:
//   lambda_2(v1, v2) = v1 v2
//   lambda_n = (-1)^{n-1} [Q lambda_{n-1}(v_1..v_{n-1})] v_n
//              - (-1)^{n deg v1} v_1 [Q lambda_{n-1}(v_2..v_n)]
//              - sum_{k,l>=2,k+l=n} (-1)^{k+(l-1)(deg v_1+..+deg v_k)}
//                  [Q lambda_k(v_1..v_k)][Q lambda_l(v_{k+1}..v_n)]
// with m_n = P o lambda_n.
class LambdaCalculator {
  public:
    LambdaCalculator(const DgCategoryPresentation& D, const HomotopyData& H) : D_(D), H_(H) {}
    // inputs are chain generator indices, rightmost acting first
    Chain lambda(const std::vector<int>& inputs);
    Chain m(const std::vector<int>& inputs);  // P o lambda
    // m_n evaluated on representative classes (indices into H.representatives),
    // expanded multilinearly
    Chain m_on_representatives(const std::vector<int>& repTuple);

  private:
    const DgCategoryPresentation& D_;
    const HomotopyData& H_;
    std::map<std::vector<int>, Chain> memo_;
};

struct TransferResult {
    // names, degrees and hom typing of the representative classes
    AInfinityPresentation presentation;  // redressed into the project convention
    // raw operations m_n = P lambda_n in the recursion's own convention,
    // on representative indices
    std::map<std::vector<int>, LinearCombination<int>> rawOps;
    std::vector<std::string> notes;
};

// Degrees of freedom are none: the transfer is computed verbatim and then
// rebased by m'_k = (-1)^{k(k-1)/2 + sum_i (k-i)(deg a_i - 1)} m_k, the
// suspension conjugation into the reduced-degree convention used by the
// relation checker and the dimer presentation.
Rational transfer_redress_sign(const std::vector<int>& degrees);

// Runs validate_dg_data first and throws on failure. Computes m_n for
// 2 <= n <= maxArity on all composable representative tuples; arities whose
// output degree admits no representative are zero without evaluation.
TransferResult merkulov_transfer(const DgCategoryPresentation& D, const HomotopyData& H,
                                 int maxArity);

// Nonzero transferred raw m_n for n in [lo, hi]; empty means the operations
// vanish there. The result must have been computed to arity >= hi.
std::vector<std::string> nonvanishing_higher_ops(const TransferResult& t, int lo, int hi);

}  // namespace conifold
