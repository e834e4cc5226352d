#include "conifold/linsolve.hpp"

#include <gmpxx.h>

#include <vector>

namespace conifold {

namespace {

mpq_class to_mpq(const Rational& r) {
    mpq_class q(mpz_class(std::to_string(r.num())), mpz_class(std::to_string(r.den())));
    q.canonicalize();
    return q;
}

Rational to_rational(const mpq_class& q) {
    if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p())
        throw ExactOverflow("solve_linear result does not fit 64-bit rational");
    return Rational(q.get_num().get_si(), q.get_den().get_si());
}

}  // namespace

std::optional<SparseVector> solve_linear(const SparseMatrix& system, const SparseVector& rhs) {
    const size_t m = system.rows, n = system.cols;
    std::vector<std::vector<mpq_class>> a(m, std::vector<mpq_class>(n + 1, mpq_class(0)));
    for (const auto& [rc, v] : system.entries) a[rc.first][rc.second] = to_mpq(v);
    for (const auto& [r, v] : rhs) {
        if (r >= m) return std::nullopt;
        a[r][n] = to_mpq(v);
    }

    std::vector<size_t> pivotCol(m, n);
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t pr = row;
        while (pr < m && a[pr][col] == 0) ++pr;
        if (pr == m) continue;
        std::swap(a[row], a[pr]);
        mpq_class inv = a[row][col];
        for (size_t c = col; c <= n; ++c) a[row][c] /= inv;
        for (size_t r = 0; r < m; ++r) {
            if (r == row || a[r][col] == 0) continue;
            mpq_class f = a[r][col];
            for (size_t c = col; c <= n; ++c) a[r][c] -= f * a[row][c];
        }
        pivotCol[row] = col;
        ++row;
    }
    for (size_t r = row; r < m; ++r)
        if (a[r][n] != 0) return std::nullopt;

    SparseVector x;
    for (size_t r = 0; r < row; ++r)
        if (a[r][n] != 0) x[pivotCol[r]] = to_rational(a[r][n]);
    return x;
}

}  // namespace conifold
