#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include <random>

#include "fermconic/conicsystem.hpp"
#include "fermconic/fp_univariate.hpp"
#include "fermconic/gauss.hpp"
#include "fermconic/report.hpp"

namespace fermconic::casestudy {

using P = MultiPoly<Rational>;
using F = Frac<Rational>;

/// Rewrites every power var^k, k >= kill, using var^kill -> image.
/// Terminates as long as deg_var(image) < kill.
template <class C>
MultiPoly<C> rewrite_power(const MultiPoly<C>& f, size_t var, unsigned kill,
                           const MultiPoly<C>& image) {
    MultiPoly<C> cur = f;
    while (cur.degree_in(var) >= kill) {
        auto layers = cur.layers_in(var);
        MultiPoly<C> low(cur.vars(), cur.proto());
        MultiPoly<C> high(cur.vars(), cur.proto());
        for (size_t k = 0; k < layers.size(); ++k) {
            MultiPoly<C> piece = layers[k];
            if (k < kill) {
                piece.shift(Monomial::var(var, static_cast<std::uint8_t>(k)));
                low += piece;
            } else {
                piece.shift(Monomial::var(var, static_cast<std::uint8_t>(k - kill)));
                high += piece;
            }
        }
        cur = low + high * image;
    }
    return cur;
}

/// The exceptional-locus frame: points over Q[t,a,b,c] with the relation
/// a^5 + b^5 + c^5 = 0 applied as the rewrite a^5 -> -(b^5 + c^5).
struct ExceptionalFrame {
    VarsPtr ring;  // {t, a, b, c}
    std::array<P, 5> p, q, s, t_, r;

    ExceptionalFrame() : ring(make_vars({"t", "a", "b", "c"})) {
        Rational zr;
        P a = P::variable(ring, "a", zr);
        P b = P::variable(ring, "b", zr);
        P c = P::variable(ring, "c", zr);
        P t = P::variable(ring, "t", zr);
        P one = P::constant(ring, Rational(1));
        P zero(ring, zr);
        p = {a, b, c, one, -one};
        q = {a, b, c, -one, one};
        s = {zero, -b, zero, zero, b.pow(5)};
        t_ = {zero, zero, -c, c.pow(5), zero};
        for (int i = 0; i < 5; ++i) r[i] = t * t_[i] + s[i];
    }

    P reduce(const P& f) const {
        Rational zr;
        P b = P::variable(ring, "b", zr);
        P c = P::variable(ring, "c", zr);
        return rewrite_power(f, 1, 5, -(b.pow(5) + c.pow(5)));
    }

    /// S_{m,n} = sum_i p_i^(5-n-m) q_i^m r_i^n, reduced mod a^5 + b^5 + c^5.
    P smn(unsigned m, unsigned n) const {
        P acc(ring, Rational());
        for (int i = 0; i < 5; ++i) {
            P term = P::constant(ring, Rational(1));
            for (unsigned e = 0; e < 5 - n - m; ++e) term *= p[i];
            for (unsigned e = 0; e < m; ++e) term *= q[i];
            for (unsigned e = 0; e < n; ++e) term *= r[i];
            acc += term;
        }
        return reduce(acc);
    }
};

inline const ExceptionalFrame& exceptional_frame() {
    static ExceptionalFrame f;
    return f;
}

/// All the case-study data in the reduced ring {t, b, c} (a is eliminated).
struct CaseStudyData {
    VarsPtr tbc;                       // {t, b, c, lam}: lam carries the conic parameter
    std::map<std::pair<unsigned, unsigned>, P> s;  // S-table
    std::array<F, 5> qexp;             // q1..q5
    F alpha, beta;
    P f3, f4, f5;

    const P& S(unsigned m, unsigned n) const { return s.at({m, n}); }
};

/// Retags a polynomial of {t,a,b,c} with no a-dependence into {t,b,c,lam}.
inline P drop_a(const P& f, const VarsPtr& target) {
    if (f.degree_in(1) != 0) throw DomainError("drop_a: unexpected a-dependence");
    std::vector<typename P::Term> terms;
    for (const auto& tt : f.terms()) {
        Monomial m;
        m.set(0, tt.m.exp(0));  // t
        m.set(1, tt.m.exp(2));  // b
        m.set(2, tt.m.exp(3));  // c
        terms.push_back({m, tt.c});
    }
    return P::from_terms(target, std::move(terms), Rational());
}

/// Computes the S-table and verifies every displayed entry; on success fills
/// the case-study data object.
inline CheckReport exceptional_smn(CaseStudyData* out = nullptr) {
    const ExceptionalFrame& fr = exceptional_frame();
    CheckReport rep;
    rep.suite = "exceptional-smn";
    VarsPtr tbc = make_vars({"t", "b", "c", "lam"});
    Rational zr;
    P t = P::variable(tbc, "t", zr);
    P b = P::variable(tbc, "b", zr);
    P c = P::variable(tbc, "c", zr);
    P one = P::constant(tbc, Rational(1));
    auto bp = [&](unsigned k) { return b.pow(k); };
    auto cp = [&](unsigned k) { return c.pow(k); };
    auto tw = [&](unsigned k) { return t.pow(k); };

    std::map<std::pair<unsigned, unsigned>, P> table;
    for (unsigned m = 0; m + 0 <= 5; ++m)
        for (unsigned n = 0; m + n <= 5; ++n) table[{m, n}] = drop_a(fr.smn(m, n), tbc);

    // n = 0 row vanishes via the curve relation
    for (unsigned m = 0; m <= 5; ++m)
        rep.add("S" + std::to_string(m) + "0 == 0", table[{m, 0}].is_zero());
    // displayed values
    auto expect = [&](unsigned m, unsigned n, const P& want, const std::string& label) {
        rep.add(label, table[{m, n}] == want);
    };
    P zero(tbc, zr);
    expect(0, 1, zero, "S01 == 0");
    expect(2, 1, zero, "S21 == 0");
    expect(4, 1, zero, "S41 == 0");
    P s11 = -(Rational(2) * (t * cp(5) + bp(5)));
    expect(1, 1, s11, "S11 == -2(t c^5 + b^5)");
    expect(3, 1, s11, "S31 == S11");
    P s02 = tw(2) * (cp(5) + cp(10)) + bp(5) - bp(10);
    expect(0, 2, s02, "S02 == t^2(c^5+c^10)+b^5-b^10");
    expect(2, 2, s02, "S22 == S02");
    P s12 = tw(2) * (cp(5) - cp(10)) + bp(5) + bp(10);
    expect(1, 2, s12, "S12 == t^2(c^5-c^10)+b^5+b^10");
    expect(3, 2, s12, "S32 == S12");
    P s03 = -(tw(3) * (cp(5) - cp(15))) - bp(5) + bp(15);
    expect(0, 3, s03, "S03 == -t^3(c^5-c^15)-b^5+b^15");
    expect(2, 3, s03, "S23 == S03");
    P s13 = -(tw(3) * (cp(5) + cp(15))) - bp(5) - bp(15);
    expect(1, 3, s13, "S13 == -t^3(c^5+c^15)-b^5-b^15");
    P s14 = tw(4) * (cp(5) - cp(20)) + bp(5) + bp(20);
    expect(1, 4, s14, "S14 == t^4(c^5-c^20)+b^5+b^20");
    P s04 = tw(4) * (cp(5) + cp(20)) + bp(5) - bp(20);
    expect(0, 4, s04, "S04 == t^4(c^5+c^20)+b^5-b^20");
    P s05 = -(tw(5) * (cp(5) - cp(25))) - bp(5) + bp(25);
    expect(0, 5, s05, "S05 == -t^5(c^5-c^25)-b^5+b^25");

    if (out) {
        out->tbc = tbc;
        out->s = std::move(table);
    }
    return rep;
}

/// Builds q1..q5 in the S11 != 0 branch, certifies q1 == q2, and matches the
/// q-relations against the residuals produced by the conic-system machinery.
inline CheckReport exceptional_system(CaseStudyData& data) {
    CheckReport rep;
    rep.suite = "exceptional-system";
    const VarsPtr& tbc = data.tbc;
    Rational zr;
    auto FF = [&](const P& p_) { return F(p_); };
    auto num = [&](long n) { return F(P::constant(tbc, Rational(n))); };
    const P& S02 = data.S(0, 2);
    const P& S12 = data.S(1, 2);
    const P& S11 = data.S(1, 1);
    F alpha = -FF(S12) / (num(2) * FF(S11));
    F beta = -FF(S02) / (num(2) * FF(S11));
    data.alpha = alpha;
    data.beta = beta;

    F q1 = num(10) * FF(data.S(0, 3)) + num(30) * beta * FF(S12);
    F q2 = num(10) * FF(data.S(2, 3)) + num(30) * alpha * FF(data.S(2, 2));
    F q3 = num(5) * FF(data.S(0, 4)) + num(20) * beta * FF(data.S(1, 3)) +
           num(20) * beta * beta * FF(S02);
    F q4 = num(5) * FF(data.S(1, 4)) + num(20) * alpha * FF(data.S(1, 3)) +
           num(20) * alpha * alpha * FF(S12);
    F q5 = FF(data.S(0, 5)) - num(5) * FF(data.S(0, 4)) * alpha - num(5) * FF(data.S(1, 4)) * beta -
           num(60) * alpha * beta * FF(data.S(1, 3)) -
           num(40) * alpha * alpha * beta * FF(data.S(3, 2)) -
           num(40) * alpha * beta * beta * FF(S02);
    data.qexp = {q1, q2, q3, q4, q5};

    rep.add("q1 == q2", q1 == q2);

    // structural match with the conic-system residuals at d = alpha beta - lam:
    // E1..E4 match q1..q4 directly; the q5 relation is the combination
    // E5 - alpha E3 - beta E4.
    conics::SVals<F> sv = conics::svals_from<F>(
        [&](unsigned m, unsigned n) { return FF(data.S(m, n)); });
    auto sys = conics::build_system<F>(sv, alpha, beta);
    F lam = FF(P::variable(tbc, "lam", zr));
    F dval = alpha * beta - lam;
    std::array<F, 5> scale{FF(S11), FF(data.S(3, 1)), FF(data.S(3, 2)), FF(S02),
                           FF(data.S(1, 3))};
    std::vector<F> pt{F(P(tbc, zr)), F(P(tbc, zr)), dval};
    for (int i = 0; i < 4; ++i) {
        F lhs = sys.E[i].eval(pt);
        F rhs = data.qexp[i] + num(20) * scale[i] * lam;
        rep.add("E" + std::to_string(i + 1) + " == q" + std::to_string(i + 1) +
                    " + 20 S lam (structural match)",
                lhs == rhs);
    }
    {
        F lhs = sys.E[4].eval(pt) - alpha * sys.E[2].eval(pt) - beta * sys.E[3].eval(pt);
        F rhs = data.qexp[4] + num(20) * scale[4] * lam;
        rep.add("E5 - alpha E3 - beta E4 == q5 + 20 S13 lam (structural match)", lhs == rhs);
    }
    return rep;
}

/// f3, f4, f5 with the displayed value checks and the four specializations
/// (two of the displayed specializations carry transcription slips; the
/// computed normal forms are asserted and the difference is noted).
inline CheckReport exceptional_f345(CaseStudyData& data) {
    CheckReport rep;
    rep.suite = "exceptional-f345";
    const VarsPtr& tbc = data.tbc;
    Rational zr;
    P t = P::variable(tbc, "t", zr);
    P b = P::variable(tbc, "b", zr);
    P c = P::variable(tbc, "c", zr);
    P one = P::constant(tbc, Rational(1));
    auto FF = [&](const P& p_) { return F(p_); };
    const P& S11 = data.S(1, 1);
    const auto& q = data.qexp;

    F f3f = q[2] * FF(S11) * FF(S11) - q[0] * FF(data.S(1, 2)) * FF(S11);
    F f4f = q[3] * FF(S11) * FF(S11) - q[0] * FF(data.S(0, 2)) * FF(S11);
    F f5f = q[4] * FF(S11) * FF(S11) * FF(S11) -
            q[0] * FF(data.S(1, 3)) * FF(S11) * FF(S11);
    rep.add("f3 clears to a polynomial", f3f.is_polynomial());
    rep.add("f4 clears to a polynomial", f4f.is_polynomial());
    rep.add("f5 clears to a polynomial", f5f.is_polynomial());
    data.f3 = f3f.num();
    data.f4 = f4f.num();
    data.f5 = f5f.num();

    // f3 = f4 = -20 t^2 (t-1)^2 b^5 c^5 a^5  with a^5 = -(b^5+c^5)
    P expect34 =
        Rational(20) * t.pow(2) * (t - one).pow(2) * b.pow(5) * c.pow(5) * (b.pow(5) + c.pow(5));
    rep.add("f3 == -20 t^2(t-1)^2 b^5 c^5 a^5 mod (a^5+b^5+c^5)", data.f3 == expect34);
    rep.add("f4 == f3", data.f4 == data.f3);

    auto sub_t = [&](const P& f, long v) {
        return f.substitute({{"t", P::constant(tbc, Rational(v))}});
    };
    P want_t0 = Rational(2) * b.pow(20) * (b.pow(20) - one);
    rep.add("f5|t=0 == 2 b^20 (b^20 - 1)", sub_t(data.f5, 0) == want_t0);
    P w = b.pow(5) + c.pow(5);
    P want_t1 = Rational(2) * w.pow(4) * (w.pow(4) - one);
    rep.add("f5|t=1 == 2 a^20 (a^20 - 1) mod relation", sub_t(data.f5, 1) == want_t1,
            "paper displays a^4(a^20-1); same vanishing locus");
    P f5_c0 = data.f5.substitute({{"c", P(tbc, zr)}});
    rep.add("f5|c=0 == 2 b^20 (b^20 - 1)", f5_c0 == want_t0,
            "paper displays an extra t^8 factor, impossible since the S-table is t-free at c=0");
    P f5_bc = data.f5.substitute({{"c", -b}});
    P want_bc = Rational(2) * (t - one).pow(8) * b.pow(20) * (b.pow(20) - one);
    rep.add("f5|b+c=0 == 2 (t-1)^8 b^20 (b^20 - 1)", f5_bc == want_bc);
    return rep;
}

/// The three symmetric solution families and the S11 = 0 branch.
inline CheckReport classify_solutions(const CaseStudyData& data) {
    CheckReport rep;
    rep.suite = "solution-families";
    const VarsPtr& tbc = data.tbc;
    Rational zr;
    P t = P::variable(tbc, "t", zr);
    P b = P::variable(tbc, "b", zr);
    P c = P::variable(tbc, "c", zr);
    P one = P::constant(tbc, Rational(1));
    auto sub_t = [&](const P& f, long v) {
        return f.substitute({{"t", P::constant(tbc, Rational(v))}});
    };
    auto kill_b20 = [&](const P& f) {  // reduce mod b^20 - 1
        return rewrite_power(f, 1, 20, one);
    };

    // family t = 0, b^20 (b^20 - 1) = 0
    {
        bool ok = sub_t(data.f3, 0).is_zero() && sub_t(data.f4, 0).is_zero();
        P f5t0 = sub_t(data.f5, 0);
        bool b20 = kill_b20(f5t0).is_zero();
        bool b0 = f5t0.substitute({{"b", P(tbc, zr)}}).is_zero();
        rep.add("family t=0: f3 = f4 = 0 and f5 killed by b^20(b^20-1) = 0", ok && b20 && b0);
    }
    // family t = infinity: substituting t -> 1/t and clearing t^n entrywise
    // realizes the involution tau: t^n S_mn(1/t) = S_{5-m-n,n} with b and c
    // swapped (reversing t swaps the roles of S and T, hence also P and Q).
    // The t = inf analysis is therefore the mirror image of t = 0.
    {
        bool swap_ok = true;
        for (unsigned m = 0; m + 0 <= 5 && swap_ok; ++m)
            for (unsigned n = 0; m + n <= 5 && swap_ok; ++n) {
                const P& smn = data.S(m, n);
                if (smn.degree_in(0) > n) { swap_ok = false; break; }
                // t^n * S(1/t): exponent e -> n - e
                std::vector<typename P::Term> terms;
                for (const auto& tt : smn.terms()) {
                    Monomial mm = tt.m;
                    mm.set(0, n - tt.m.exp(0));
                    terms.push_back({mm, tt.c});
                }
                P reversed = P::from_terms(tbc, std::move(terms), zr);
                P swapped = data.S(5 - m - n, n).substitute({{"b", c}, {"c", b}});
                if (reversed != swapped) swap_ok = false;
            }
        rep.add("t -> 1/t with t^n cleared realizes tau: S_mn <-> S_{5-m-n,n} with b <-> c",
                swap_ok);
        // hence the t=inf family mirrors t=0; the leading t-layer of f5 shows it
        auto layers = data.f5.layers_in(0);
        P want = Rational(2) * c.pow(20) * (c.pow(20) - one);
        rep.add("family t=inf: leading t-layer of f5 == 2 c^20(c^20-1)",
                layers[data.f5.degree_in(0)] == want);
    }
    // family t = 1, a^4 (a^20 - 1) = 0  (w := b^5 + c^5 = -a^5)
    {
        P f5t1 = sub_t(data.f5, 1);
        P w = b.pow(5) + c.pow(5);
        // reduce modulo w^4 = 1: substitute the top power via division
        P quotient = f5t1.divide_exact(w.pow(4));
        // f5|t=1 = 2 w^4 (w^4 - 1): mod (w^4 - 1) this is 0; a = 0 gives w = 0
        bool div_ok = (quotient == Rational(2) * (w.pow(4) - one));
        rep.add("family t=1: f5 == 2 w^4 (w^4-1), killed by a^20 = 1 or a = 0", div_ok);
        rep.add("family t=1: f3 = f4 = 0 automatically", sub_t(data.f3, 1).is_zero());
    }
    // a random non-solution leaves f3 nonzero
    {
        std::vector<Rational> pt{Rational(2), Rational(3), Rational(5), Rational(0)};
        rep.add("non-solution (t,b,c) = (2,3,5) leaves f3 != 0", !data.f3.eval(pt).is_zero());
    }
    // S11 = 0 branch: t = -b^5/c^5; cleared S02 and S12 both reduce to
    // b^5 (b^5 + c^5) c^5, so S12 = S02 = 0 forces b = 0 or b^5 = -c^5 (t=1, a=0).
    {
        auto clear_t = [&](const P& f) {
            // substitute t -> -b^5/c^5 and clear by c^(5*deg_t)
            unsigned D = f.degree_in(0);
            auto layers = f.layers_in(0);
            P acc(tbc, zr);
            for (size_t k = 0; k < layers.size(); ++k) {
                P piece = layers[k] * (-b.pow(5)).pow(static_cast<unsigned>(k)) *
                          c.pow(5 * (D - static_cast<unsigned>(k)));
                acc += piece;
            }
            return acc;
        };
        P s11c = clear_t(data.S(1, 1));
        P s02c = clear_t(data.S(0, 2));
        P s12c = clear_t(data.S(1, 2));
        P wantc = b.pow(5) * (b.pow(5) + c.pow(5)) * c.pow(5);
        rep.add("S11 == 0 at t = -b^5/c^5 (cleared)", s11c.is_zero());
        rep.add("cleared S02 == b^5(b^5+c^5)c^5", s02c == wantc);
        rep.add("cleared S12 == cleared S02", s12c == s02c);
    }
    return rep;
}

/// Orbit witnesses: explicit automorphisms carrying each solution family into
/// the plane families of the two worked examples.
inline CheckReport orbit_witnesses() {
    CheckReport rep;
    rep.suite = "orbit-witnesses";
    const ExceptionalFrame& fr = exceptional_frame();
    const VarsPtr& ring = fr.ring;
    Rational zr;
    P a = P::variable(ring, "a", zr);
    P b = P::variable(ring, "b", zr);
    P c = P::variable(ring, "c", zr);
    P w = b.pow(5) + c.pow(5);
    P one = P::constant(ring, Rational(1));

    // t=1 family: P, Q, R satisfy  c(x0 + mu^-1 x3 + mu^-1 x4) = a x2  and
    // c x1 = b x2  with mu = a^4, i.e. an S3-type plane after permutation.
    // mu^-1 = a^16 reduces to -a w^3 via a^5 -> -w; the residual is a
    // multiple of w^4 - 1 = a^20 - 1, the family condition.
    {
        std::array<P, 5> R1;
        for (int i = 0; i < 5; ++i) R1[i] = fr.t_[i] + fr.s[i];  // R at t = 1
        P mu_inv = -(a * w.pow(3));                              // a^16 mod the relation
        auto eq1 = [&](const std::array<P, 5>& pt) {
            return fr.reduce(c * (pt[0] + mu_inv * (pt[3] + pt[4])) - a * pt[2]);
        };
        auto eq2 = [&](const std::array<P, 5>& pt) { return fr.reduce(c * pt[1] - b * pt[2]); };
        bool pq_ok = eq1(fr.p).is_zero() && eq2(fr.p).is_zero() && eq1(fr.q).is_zero() &&
                     eq2(fr.q).is_zero() && eq2(R1).is_zero();
        P res = eq1(R1);
        // res is a multiple of (w^4 - 1); vanishes exactly on the family a^20 = 1
        bool r_ok = !res.is_zero() && res.divisible_by(w.pow(4) - one);
        rep.add("t=1 family satisfies the S3-type plane equations (mu = a^4)", pq_ok && r_ok,
                "R-residual is a multiple of a^20 - 1, the family condition");
    }
    // t=0 family maps to the t=1 family of the (b,a,c) frame under x0 <-> x1:
    // sigma(S) + S' + T' lies in span(P', Q').
    {
        std::array<P, 5> sigmaS{fr.s[1], fr.s[0], fr.s[2], fr.s[3], fr.s[4]};
        // primed frame has parameters (a', b', c') = (b, a, c)
        std::array<P, 5> Pp{b, a, c, one, -one};
        std::array<P, 5> Qp{b, a, c, -one, one};
        std::array<P, 5> Sp{P(ring, zr), -a, P(ring, zr), P(ring, zr), a.pow(5)};
        std::array<P, 5> Tp{P(ring, zr), P(ring, zr), -c, c.pow(5), P(ring, zr)};
        F half(P::constant(ring, Rational(1, 2)));
        F alpha = (F(c.pow(5)) - F(one)) * half;   // (c^5 - 1)/2
        F beta = (F(-c.pow(5)) - F(one)) * half;   // (-c^5 - 1)/2
        bool ok = true;
        for (int i = 0; i < 5; ++i) {
            F lhs(fr.reduce(sigmaS[i] + Sp[i] + Tp[i]));
            F rhs = alpha * F(Pp[i]) + beta * F(Qp[i]);
            F diff = lhs - rhs;
            if (!F(fr.reduce(diff.num())).is_zero()) ok = false;
        }
        rep.add("t=0 family == (x0<->x1) image of the t=1 family at parameters (b,a,c)", ok);
    }
    // t=inf family maps to the t=1 family of the (c,b,a) frame under x0 <-> x2.
    {
        std::array<P, 5> sigmaT{fr.t_[2], fr.t_[1], fr.t_[0], fr.t_[3], fr.t_[4]};
        std::array<P, 5> Pp{c, b, a, one, -one};
        std::array<P, 5> Qp{c, b, a, -one, one};
        std::array<P, 5> Sp{P(ring, zr), -b, P(ring, zr), P(ring, zr), b.pow(5)};
        std::array<P, 5> Tp{P(ring, zr), P(ring, zr), -a, a.pow(5), P(ring, zr)};
        F half(P::constant(ring, Rational(1, 2)));
        F alpha = (F(-b.pow(5)) - F(one)) * half;
        F beta = (F(b.pow(5)) - F(one)) * half;
        bool ok = true;
        for (int i = 0; i < 5; ++i) {
            F lhs(fr.reduce(sigmaT[i] + Sp[i] + Tp[i]));
            F rhs = alpha * F(Pp[i]) + beta * F(Qp[i]);
            F diff = lhs - rhs;
            if (!F(fr.reduce(diff.num())).is_zero()) ok = false;
        }
        rep.add("t=inf family == (x0<->x2) image of the t=1 family at parameters (c,b,a)", ok);
    }
    // S11 = 0 branch at b^5 = -c^5: the plane contains the special-locus line
    // [0 : bs : cs : w : -w], which maps to the isolated-line pattern
    // [u : -u : v : -v : 0] by a permutation once b = -c mu^k; numeric witness.
    {
        std::uint64_t p = 101;  // p = 1 mod 5
        std::mt19937_64 rng(11);
        // pick c, set b as a fifth root of -c^5
        Fp cval(7, p);
        auto broot = fpuni::kth_root(-(cval.pow(5)), 5, rng);
        bool ok = false;
        if (broot) {
            Fp bval = *broot;
            // find mu with mu^5 = 1 and b = -c mu^k
            Fp mu = fpuni::root_of_unity(5, p, rng);
            for (int k = 0; k < 5 && !ok; ++k) {
                Fp cand = -(cval * mu.pow(k));
                if (cand == bval) ok = true;
            }
            // line [0: b s: c s: w: -w] lies on the quintic when b^5 + c^5 = 0
            Fp line_val = bval.pow(5) + cval.pow(5);
            ok = ok && line_val.is_zero();
        }
        rep.add("S11=0 branch: in-plane line matches the isolated-line orbit (numeric witness)",
                ok);
    }
    return rep;
}

/// Example with S3 symmetry: pseudo-division certificate for the conic factor
/// of the restricted Dwork quintic, the cofactor match, the global identity
/// with its sign probe, and the Fermat-limit line splitting.
inline CheckReport verify_example_s3() {
    CheckReport rep;
    rep.suite = "example-s3";
    Rational zr;
    VarsPtr ring = make_vars({"psi", "a", "b", "c", "x0", "x1", "x2"});
    P psi = P::variable(ring, "psi", zr);
    P a = P::variable(ring, "a", zr);
    P b = P::variable(ring, "b", zr);
    P c = P::variable(ring, "c", zr);
    P x0 = P::variable(ring, "x0", zr);
    P x1 = P::variable(ring, "x1", zr);
    P x2 = P::variable(ring, "x2", zr);
    P e1 = x0 + x1 + x2;
    P e2 = x0 * x1 + x0 * x2 + x1 * x2;
    P e3 = x0 * x1 * x2;
    const Rational five(5);

    // The displayed parameter curve, G_psi and cubic carry three sign slips;
    // the computation pins the consistent package (see the probe note below):
    //   curve  rho' = a^5 + b^5 + c^5 - 5 psi a^3 bc + 5 psi^2 a b^2 c^2
    //   G_psi' = x3^5 + x4^5 + e1^5 - 5 psi x3 x4 e1^3 + 5 psi^2 x3^2 x4^2 e1
    //   cubic' = e3 - e1 e2 + psi e1 x3 x4
    // a^5 -> 5 psi a^3 bc - 5 psi^2 a b^2 c^2 - b^5 - c^5
    P rho_image = five * psi * a.pow(3) * b * c - five * psi * psi * a * b * b * c * c -
                  b.pow(5) - c.pow(5);
    auto reduce_rho = [&](const P& f) { return rewrite_power(f, 1, 5, rho_image); };

    // restricted quintic, cleared by a^5:  x3 = (b/a) e1, x4 = (c/a) e1
    P Ftilde = a.pow(5) * (x0.pow(5) + x1.pow(5) + x2.pow(5)) + (b.pow(5) + c.pow(5)) * e1.pow(5) -
               five * psi * a.pow(3) * b * c * e1.pow(2) * e3;
    // conic (as displayed) and corrected cubic, cleared by a^2
    P Ctilde = a * a * (e1 * e1 - e2) - psi * b * c * e1 * e1;
    P Gtilde = a * a * (e3 - e1 * e2) + psi * b * c * e1.pow(3);

    // independent pseudo-division certificate: the conic divides F~ mod rho'
    {
        P L = a * a - psi * b * c;  // x-free leading coefficient in x0
        unsigned dC = Ctilde.degree_in(4);
        int guard = 0;
        P remainder = reduce_rho(Ftilde);
        while (remainder.degree_in(4) >= dC && !remainder.is_zero() && guard < 16) {
            auto lay = remainder.layers_in(4);
            unsigned df = remainder.degree_in(4);
            P shift_mono = P::monomial(
                ring, Monomial::var(4, static_cast<std::uint8_t>(df - dC)), Rational(1));
            remainder = L * remainder - lay[df] * shift_mono * Ctilde;
            remainder = reduce_rho(remainder);
            ++guard;
        }
        rep.add("restricted-section conic-divisibility certificate (mod the curve)",
                remainder.is_zero());
    }

    // one-shot identity: F~ == e1^5 rho' + 5 a C~ G~ exactly; this pins the
    // cofactor as the corrected cubic at once
    {
        P rho2 = a.pow(5) + b.pow(5) + c.pow(5) - five * psi * a.pow(3) * b * c +
                 five * psi * psi * a * b * b * c * c;
        P volume = Ftilde - e1.pow(5) * rho2 - five * a * Ctilde * Gtilde;
        rep.add("F~ == e1^5 rho' + 5 a C~ G~ (cofactor matches the cubic)", volume.is_zero());
    }

    // sign probe of the global identity over Q[psi, x0..x4]
    {
        VarsPtr full = make_vars({"psi", "x0", "x1", "x2", "x3", "x4"});
        P fpsi(full, zr);
        for (int i = 0; i < 5; ++i) fpsi += P::variable(full, "x" + std::to_string(i), zr).pow(5);
        P prod = P::constant(full, five) * P::variable(full, "psi", zr);
        for (int i = 0; i < 5; ++i) prod *= P::variable(full, "x" + std::to_string(i), zr);
        fpsi -= prod;
        P X0 = P::variable(full, "x0", zr), X1 = P::variable(full, "x1", zr),
          X2 = P::variable(full, "x2", zr), X3 = P::variable(full, "x3", zr),
          X4 = P::variable(full, "x4", zr), Ps = P::variable(full, "psi", zr);
        P E1 = X0 + X1 + X2;
        P E2 = X0 * X1 + X0 * X2 + X1 * X2;
        P E3 = X0 * X1 * X2;
        P conic = E1 * E1 - E2 - Ps * X3 * X4;
        P gpsi_display = X3.pow(5) + X4.pow(5) + E1.pow(5) -
                         P::constant(full, five) * Ps * X3 * X4 * E1.pow(3) -
                         P::constant(full, five) * Ps * Ps * X3 * X3 * X4 * X4 * E1;
        P cubic_display = E3 - E1 * E2 - Ps * E1 * X3 * X4;
        bool displayed =
            (fpsi - gpsi_display - P::constant(full, five) * conic * cubic_display).is_zero();
        P gpsi_fixed = X3.pow(5) + X4.pow(5) + E1.pow(5) -
                       P::constant(full, five) * Ps * X3 * X4 * E1.pow(3) +
                       P::constant(full, five) * Ps * Ps * X3 * X3 * X4 * X4 * E1;
        P cubic_fixed = E3 - E1 * E2 + Ps * E1 * X3 * X4;
        bool fixed =
            (fpsi - gpsi_fixed - P::constant(full, five) * conic * cubic_fixed).is_zero();
        rep.add("global identity F_psi - G_psi == 5 conic * cubic (sign-corrected)",
                fixed && !displayed,
                "psi^2 term of G_psi and psi term of the cubic flip sign vs the displayed form");
    }

    // psi = 0: the cubic cofactor splits into three linear forms
    {
        P g0 = Gtilde.substitute({{"psi", P(ring, zr)}});
        P expected = -(a * a * (x0 + x1) * (x0 + x2) * (x1 + x2));
        rep.add("psi=0 cofactor degenerates to a product of lines", g0 == expected);
    }
    return rep;
}

/// Example with Z2 x Z2 symmetry: the power-sum identity for F, the building
/// block in two variables, and the conic certificate over Q(i).
inline CheckReport verify_example_z2z2() {
    CheckReport rep;
    rep.suite = "example-z2z2";
    Rational zr;
    // (a) displayed F-identity over Q
    {
        VarsPtr full = make_vars({"x0", "x1", "x2", "x3", "x4"});
        P F5(full, zr);
        std::array<P, 5> x;
        for (int i = 0; i < 5; ++i) {
            x[i] = P::variable(full, "x" + std::to_string(i), zr);
            F5 += x[i].pow(5);
        }
        P u1 = x[0] + x[1];
        P u2 = x[0] * x[1];
        P v1 = x[3] + x[2];
        P v2 = x[3] * x[2];
        Rational half(1, 2), quarter(1, 4);
        P lhs = Rational(5) * u1 * (u2 - half * u1 * u1).pow(2) +
                Rational(5) * v1 * (v2 - half * v1 * v1).pow(2) + x[4].pow(5) -
                quarter * u1.pow(5) - quarter * v1.pow(5);
        rep.add("F == 5u1(u2-u1^2/2)^2 + 5v1(v2-v1^2/2)^2 + x4^5 - u1^5/4 - v1^5/4", lhs == F5);
    }
    // building block: 5 e1 (e2 - e1^2/2)^2 - e1^5/4 == x0^5 + x1^5
    {
        VarsPtr two = make_vars({"x0", "x1"});
        P X0 = P::variable(two, "x0", zr), X1 = P::variable(two, "x1", zr);
        P E1 = X0 + X1, E2 = X0 * X1;
        Rational half(1, 2), quarter(1, 4);
        P lhs = Rational(5) * E1 * (E2 - half * E1 * E1).pow(2) - quarter * E1.pow(5);
        rep.add("two-variable power-sum building block", lhs == X0.pow(5) + X1.pow(5));
    }
    // (b) conic certificate over Q(i): reduce G modulo q~ in the w direction,
    // then close with the curve substitution b^5 c^5 -> (a^10 + b^10)/4.
    {
        using GP = MultiPoly<GaussRational>;
        GaussRational gz;
        VarsPtr ring = make_vars({"a", "b", "c", "x0", "x1", "w"});
        auto V = [&](const char* n) { return GP::variable(ring, n, gz); };
        GP A = V("a"), B = V("b"), C = V("c"), X0 = V("x0"), X1 = V("x1"), W = V("w");
        GP X = X0 + X1;
        auto K = [&](const GaussRational& v) { return GP::constant(ring, v); };
        GaussRational g32(Rational(32), Rational(0));
        // G = (2b^2)^5 F|Lambda
        GP G = K(g32) * B.pow(10) * (X0.pow(5) + X1.pow(5)) +
               (A * A * X + B * B * W).pow(5) + (A * A * X - B * B * W).pow(5) +
               K(g32) * B.pow(5) * C.pow(5) * X.pow(5);
        // curve rewrite: c^5 -> ... cannot isolate; rewrite monomials with
        // b^5 c^5 via the factored helper below instead
        auto curve_reduce = [&](GP f) {
            // replace b^5 c^5 by (a^10 + b^10)/4 until no term has both
            GaussRational quarter(Rational(1, 4), Rational(0));
            GP image = K(quarter) * (A.pow(10) + B.pow(10));
            while (true) {
                GP keep(f.vars(), gz), fired(f.vars(), gz);
                bool any = false;
                for (const auto& t : f.terms()) {
                    if (t.m.exp(1) >= 5 && t.m.exp(2) >= 5) {
                        Monomial m = t.m;
                        m.set(1, m.exp(1) - 5);
                        m.set(2, m.exp(2) - 5);
                        fired += GP::monomial(f.vars(), m, t.c);
                        any = true;
                    } else {
                        keep += GP::monomial(f.vars(), t.m, t.c);
                    }
                }
                if (!any) return keep;
                f = keep + fired * image;
            }
        };
        for (int sign = +1; sign >= -1; sign -= 2) {
            GaussRational i_unit = GaussRational::i();
            if (sign < 0) i_unit = -i_unit;
            GaussRational two(Rational(2), Rational(0));
            GP qform = K(two) * B.pow(5) * (X0 * X0 + X1 * X1) +
                       K(i_unit) * A * (A.pow(4) * X * X + B.pow(4) * W * W);
            // pseudo-reduce G by qform in w: lc_w = i_unit * a * b^4 (a monomial)
            GP lead = K(i_unit) * A * B.pow(4);
            GP rem = G;
            int guard = 0;
            while (rem.degree_in(5) >= 2 && guard < 12) {
                auto lay = rem.layers_in(5);
                unsigned dw = rem.degree_in(5);
                GP top = lay[dw];
                GP shift = GP::monomial(ring, Monomial::var(5, static_cast<std::uint8_t>(dw - 2)),
                                        gz.one_like());
                rem = lead * rem - top * shift * qform;
                ++guard;
            }
            rem = curve_reduce(rem);
            rep.add(std::string("conic b(x0^2+x1^2) ") + (sign > 0 ? "+" : "-") +
                        " ia(x2^2+x3^2) cuts a conic on X (certificate)",
                    rem.is_zero());
        }
        // rational cross-check: (products of both conics) times the line
        GP prod = (K(GaussRational(Rational(2), Rational(0))) * B.pow(5) *
                   (X0 * X0 + X1 * X1)).pow(2) +
                  A * A * (A.pow(4) * X * X + B.pow(4) * W * W).pow(2);
        GaussRational ten(Rational(10), Rational(0));
        GP diff = curve_reduce(G * K(GaussRational(Rational(1), Rational(0))) - K(ten) * X * prod);
        rep.add("G == 10 (x0+x1) q+ q- mod the curve (rational form)", diff.is_zero());
    }
    return rep;
}

/// The contribution bookkeeping constant and the isolated line membership.
inline long lines_contribution_constant(long genus = 6) {
    return 50 * 2 * (2 * genus - 2) + 375 * 5;
}

inline CheckReport constants_check() {
    CheckReport rep;
    rep.suite = "constants";
    rep.add("50*2*(2g-2) + 375*5 == 2875 at g = 6", lines_contribution_constant() == 2875);
    rep.add("2g - 2 == 10 at g = 6", 2 * 6 - 2 == 10);
    Rational zr;
    VarsPtr uv = make_vars({"u", "v"});
    P u = P::variable(uv, "u", zr), v = P::variable(uv, "v", zr);
    P F = u.pow(5) + (-u).pow(5) + v.pow(5) + (-v).pow(5);  // + 0^5
    rep.add("isolated line [u:-u:v:-v:0] lies on the quintic", F.is_zero());
    return rep;
}

/// Runs the whole section-7 reproduction.
inline std::vector<CheckReport> run_case_study() {
    std::vector<CheckReport> out;
    CaseStudyData data;
    out.push_back(exceptional_smn(&data));
    out.push_back(exceptional_system(data));
    out.push_back(exceptional_f345(data));
    out.push_back(classify_solutions(data));
    out.push_back(orbit_witnesses());
    return out;
}

/// Runs the section-2 example verifications.
inline std::vector<CheckReport> run_examples() {
    return {verify_example_s3(), verify_example_z2z2(), constants_check()};
}

}  // namespace fermconic::casestudy
