#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "conifold/rational.hpp"

namespace conifold {

// Sparse exact linear algebra for change-of-basis and structure comparison.
struct SparseMatrix {
    size_t rows = 0;
    size_t cols = 0;
    std::map<std::pair<size_t, size_t>, Rational> entries;

    void set(size_t r, size_t c, const Rational& v) {
        if (v.is_zero())
            entries.erase({r, c});
        else
            entries[{r, c}] = v;
    }
    Rational at(size_t r, size_t c) const {
        auto it = entries.find({r, c});
        return it == entries.end() ? Rational(0) : it->second;
    }
};

using SparseVector = std::map<size_t, Rational>;

// Exact Gaussian elimination with deterministic pivoting (first nonzero in
// column order). Returns one solution of system * x = rhs, or nullopt when
// the system is inconsistent. Internal arithmetic uses arbitrary precision,
// so intermediate growth never overflows; a result that does not fit the
// 64-bit Rational throws ExactOverflow.
std::optional<SparseVector> solve_linear(const SparseMatrix& system, const SparseVector& rhs);

}  // namespace conifold
