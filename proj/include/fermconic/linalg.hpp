#pragma once

#include <vector>

#include "fermconic/errors.hpp"

namespace fermconic {

/// Dense matrix over a field, row major.
template <class C>
using Matrix = std::vector<std::vector<C>>;

/// Row-reduce in place; returns rank. Pivot columns appended to `pivots`.
template <class C>
size_t row_reduce(Matrix<C>& m, std::vector<size_t>* pivots = nullptr) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        C inv = m[r][c].one_like() / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            C f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return r;
}

/// Basis of the right kernel of m.
template <class C>
std::vector<std::vector<C>> nullspace(Matrix<C> m, const C& one) {
    if (m.empty()) return {};
    size_t cols = m[0].size();
    std::vector<size_t> pivots;
    row_reduce(m, &pivots);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<C>> basis;
    C zero = one.zero_like();
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<C> v(cols, zero);
        v[free] = one;
        for (size_t r = 0; r < pivots.size(); ++r) {
            // row r has leading 1 at pivots[r]
            v[pivots[r]] = -m[r][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solve m x = b when consistent; nullopt otherwise. m is destroyed.
template <class C>
std::optional<std::vector<C>> solve(Matrix<C> m, std::vector<C> b, const C& one) {
    size_t rows = m.size();
    if (rows == 0) return std::vector<C>{};
    size_t cols = m[0].size();
    for (size_t i = 0; i < rows; ++i) m[i].push_back(b[i]);
    std::vector<size_t> pivots;
    row_reduce(m, &pivots);
    C zero = one.zero_like();
    std::vector<C> x(cols, zero);
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols) return std::nullopt;  // pivot in the rhs column
        x[pivots[r]] = m[r][cols];
    }
    return x;
}

}  // namespace fermconic
