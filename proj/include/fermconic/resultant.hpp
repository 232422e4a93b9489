#pragma once

#include <vector>

#include "fermconic/multipoly.hpp"

namespace fermconic {

/// Determinant by fraction-free Bareiss elimination; entries from any
/// integral domain with exact division (MultiPoly over a field here).
template <class P>
P bareiss_det(std::vector<std::vector<P>> m, const P& one) {
    size_t n = m.size();
    if (n == 0) return one;
    int sign = 1;
    P prev = one;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) {
                // whole column zero below: determinant vanishes
                return P(one.vars(), one.proto());
            }
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                P t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = (k == 0) ? std::move(t) : t.divide_exact(prev);
            }
            m[i][k] = P(one.vars(), one.proto());
        }
        prev = m[k][k];
    }
    P det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

/// Sylvester resultant of f and g with respect to `var`: determinant of the
/// Sylvester matrix with the f-rows first. Exact over any field coefficients.
template <class C>
MultiPoly<C> resultant(const MultiPoly<C>& f, const MultiPoly<C>& g, const std::string& var) {
    using P = MultiPoly<C>;
    int vi = f.vars()->index_of(var);
    if (vi < 0) throw DomainError("resultant: unknown variable " + var);
    size_t x = static_cast<size_t>(vi);
    if (f.is_zero() || g.is_zero()) throw DomainError("resultant: zero input");
    unsigned m = f.degree_in(x), n = g.degree_in(x);
    if (m == 0 || n == 0) throw DomainError("resultant: inputs must have positive degree in " + var);
    auto fl = f.layers_in(x);
    auto gl = g.layers_in(x);
    P zero(f.vars(), f.proto());
    P one = P::constant(f.vars(), f.proto().one_like());
    size_t dim = m + n;
    std::vector<std::vector<P>> s(dim, std::vector<P>(dim, zero));
    for (unsigned r = 0; r < n; ++r)
        for (unsigned k = 0; k <= m; ++k) s[r][r + k] = fl[m - k];
    for (unsigned r = 0; r < m; ++r)
        for (unsigned k = 0; k <= n; ++k) s[n + r][r + k] = gl[n - k];
    return bareiss_det(std::move(s), one);
}

}  // namespace fermconic
