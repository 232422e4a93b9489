#pragma once

#include <optional>
#include <vector>

#include "fermconic/multipoly.hpp"

namespace fermconic {

namespace detail {

template <class C>
MultiPoly<C> make_monic(MultiPoly<C> p) {
    if (p.is_zero()) return p;
    C lc = p.leading_term().c;
    p.scale(lc.one_like() / lc);
    return p;
}

// Pseudo-remainder of f by g in variable x (coefficients stay polynomial).
template <class C>
MultiPoly<C> pseudo_rem(MultiPoly<C> f, const MultiPoly<C>& g, size_t x) {
    unsigned dg = g.degree_in(x);
    auto g_layers = g.layers_in(x);
    MultiPoly<C> lc_g = g_layers[dg];
    while (!f.is_zero()) {
        unsigned df = f.degree_in(x);
        if (df < dg) break;
        auto f_layers = f.layers_in(x);
        MultiPoly<C> lc_f = f_layers[df];
        // f <- lc_g * f - lc_f * x^(df-dg) * g
        MultiPoly<C> shifted = g;
        shifted.shift(Monomial::var(x, static_cast<std::uint8_t>(df - dg)));
        f = lc_g * f - lc_f * shifted;
    }
    return f;
}

}  // namespace detail

template <class C>
MultiPoly<C> poly_gcd(const MultiPoly<C>& f_in, const MultiPoly<C>& g_in);

namespace detail {

// gcd of the x-coefficient layers, i.e. the content of p w.r.t. x.
template <class C>
MultiPoly<C> content_in(const MultiPoly<C>& p, size_t x) {
    auto layers = p.layers_in(x);
    MultiPoly<C> c(p.vars(), p.proto());
    for (auto& layer : layers) {
        if (layer.is_zero()) continue;
        c = c.is_zero() ? layer : poly_gcd(c, layer);
        if (c.is_constant() && !c.is_zero()) break;
    }
    return make_monic(std::move(c));
}

}  // namespace detail

/// Monic gcd over a coefficient field. Content/primitive-part recursion with
/// a pseudo-remainder sequence in the lowest-degree common variable, plus
/// quick paths for monomials, constants and exact-divisor pairs.
template <class C>
MultiPoly<C> poly_gcd(const MultiPoly<C>& f_in, const MultiPoly<C>& g_in) {
    using P = MultiPoly<C>;
    if (f_in.is_zero()) return detail::make_monic(g_in);
    if (g_in.is_zero()) return detail::make_monic(f_in);

    Monomial mf = f_in.monomial_content();
    Monomial mg = g_in.monomial_content();
    Monomial common = mf.gcd(mg);
    P f = f_in.divide_monomial(mf);
    P g = g_in.divide_monomial(mg);
    P unit = P::constant(f.vars(), f.proto().one_like());
    P mono = P::monomial(f.vars(), common, f.proto().one_like());

    if (f.is_constant() || g.is_constant()) return mono;
    if (f == g) return mono * detail::make_monic(std::move(f));

    // quick exact-divisor checks catch denominators that are powers
    {
        P fm = detail::make_monic(f);
        P gm = detail::make_monic(g);
        if (fm == gm) return mono * fm;
        if (fm.term_count() <= gm.term_count()) {
            if (gm.divisible_by(fm)) return mono * fm;
        } else if (fm.divisible_by(gm)) {
            return mono * gm;
        }
    }

    // main variable: present in both, minimal max-degree
    size_t best = Vars::kMaxVars;
    unsigned best_deg = ~0u;
    for (size_t i = 0; i < f.vars()->size(); ++i) {
        unsigned df = f.degree_in(i), dg = g.degree_in(i);
        if (df == 0 || dg == 0) continue;
        unsigned m = std::max(df, dg);
        if (m < best_deg) {
            best_deg = m;
            best = i;
        }
    }
    if (best == Vars::kMaxVars) return mono;  // no shared variable
    size_t x = best;

    P cf = detail::content_in(f, x);
    P cg = detail::content_in(g, x);
    P cont = poly_gcd(cf, cg);
    P pf = f.divide_exact(cf);
    P pg = g.divide_exact(cg);

    if (pf.degree_in(x) < pg.degree_in(x)) std::swap(pf, pg);
    while (true) {
        P r = detail::pseudo_rem(pf, pg, x);
        if (r.is_zero()) break;
        if (r.degree_in(x) == 0) {
            pg = P::constant(f.vars(), f.proto().one_like());
            break;
        }
        pf = std::move(pg);
        P rc = detail::content_in(r, x);
        pg = r.divide_exact(rc);
    }
    P result = pg.is_constant() ? cont : cont * pg.divide_exact(detail::content_in(pg, x));
    return detail::make_monic(mono * result);
}

}  // namespace fermconic
