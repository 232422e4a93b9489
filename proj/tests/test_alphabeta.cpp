#include "fermconic/alphabeta.hpp"

#include <gtest/gtest.h>

#include <random>

#include "fermconic/fraction.hpp"
#include "fermconic/multipoly.hpp"
#include "fermconic/prime_field.hpp"
#include "fermconic/rational.hpp"

using namespace fermconic;

namespace {

using FS = Frac<Rational>;
using AB = AlphaBeta<FS>;

struct SymbolicQuad {
    VarsPtr vars;
    QuadPtr<FS> quad;
    SymbolicQuad() {
        vars = make_vars({"S20", "S11", "S02", "S30", "S31", "S32"});
        auto v = [&](const char* n) {
            return FS(MultiPoly<Rational>::variable(vars, n, Rational()));
        };
        quad = std::make_shared<const QuadPair<FS>>(v("S30"), v("S31"), v("S32"), v("S20"),
                                                    v("S11"), v("S02"));
    }
};

using FpQuad = QuadPair<Fp>;

}  // namespace

TEST(AlphaBeta, AlphaSquareReduction) {
    SymbolicQuad q;
    AB a = AB::alpha(q.quad);
    AB a2 = a * a;
    // alpha^2 = (-2 S31 alpha - S32) / S30
    auto v = [&](const char* n) { return FS(MultiPoly<Rational>::variable(q.vars, n, Rational())); };
    FS minus2 = FS(MultiPoly<Rational>::constant(q.vars, Rational(-2)));
    EXPECT_EQ(a2.c10(), minus2 * v("S31") / v("S30"));
    EXPECT_EQ(a2.c00(), -(v("S32") / v("S30")));
    EXPECT_TRUE(a2.c01().is_zero());
    EXPECT_TRUE(a2.c11().is_zero());
}

TEST(AlphaBeta, IdentityScalar) {
    SymbolicQuad q;
    AB x = AB::alpha(q.quad) + AB::beta(q.quad);
    EXPECT_EQ(x.one_like() * x, x);
}

TEST(AlphaBeta, VietaFromConjugates) {
    SymbolicQuad q;
    AB a = AB::alpha(q.quad);
    AB sum = a + a.conj_alpha();
    AB prod = a * a.conj_alpha();
    auto v = [&](const char* n) { return FS(MultiPoly<Rational>::variable(q.vars, n, Rational())); };
    EXPECT_TRUE(sum.is_scalar());
    EXPECT_TRUE(prod.is_scalar());
    FS two = FS(MultiPoly<Rational>::constant(q.vars, Rational(2)));
    EXPECT_EQ(sum.c00(), -(two * v("S31")) / v("S30"));
    EXPECT_EQ(prod.c00(), v("S32") / v("S30"));
}

TEST(AlphaBeta, DegenerateExtensionRefused) {
    SymbolicQuad q;
    auto v = [&](const char* n) { return FS(MultiPoly<Rational>::variable(q.vars, n, Rational())); };
    FS zero = FS(MultiPoly<Rational>(q.vars, Rational()));
    EXPECT_THROW(QuadPair<FS>(zero, v("S31"), v("S32"), v("S20"), v("S11"), v("S02")),
                 DegenerateExtension);
    EXPECT_THROW(QuadPair<FS>(v("S30"), v("S31"), v("S32"), zero, v("S11"), v("S02")),
                 DegenerateExtension);
}

TEST(AlphaBeta, CommutativityAndInverseOverFp) {
    const std::uint64_t p = 10007;
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<std::uint64_t> d(0, p - 1);
    int checked = 0;
    while (checked < 100) {
        Fp s30(d(rng), p), s31(d(rng), p), s32(d(rng), p);
        Fp s20(d(rng), p), s11(d(rng), p), s02(d(rng), p);
        if (s30.is_zero() || s20.is_zero()) continue;
        auto quad = std::make_shared<const QuadPair<Fp>>(s30, s31, s32, s20, s11, s02);
        using ABp = AlphaBeta<Fp>;
        ABp x(quad, Fp(d(rng), p), Fp(d(rng), p), Fp(d(rng), p), Fp(d(rng), p));
        ABp y(quad, Fp(d(rng), p), Fp(d(rng), p), Fp(d(rng), p), Fp(d(rng), p));
        EXPECT_EQ(x * y, y * x);
        EXPECT_EQ(x * (y + y), x * y + x * y);
        if (x.is_zero()) continue;
        try {
            ABp xi = x.inv();
            EXPECT_EQ(xi * x, x.one_like());
            ++checked;
        } catch (const NotInvertible&) {
            // zero norm happens for split extensions; skip
        }
    }
}

TEST(AlphaBeta, MixedExtensionsThrow) {
    SymbolicQuad q1, q2;
    auto v = [&](const SymbolicQuad& q, const char* n) {
        return FS(MultiPoly<Rational>::variable(q.vars, n, Rational()));
    };
    auto quad2 = std::make_shared<const QuadPair<FS>>(v(q2, "S30"), v(q2, "S31"), v(q2, "S02"),
                                                      v(q2, "S20"), v(q2, "S11"), v(q2, "S32"));
    EXPECT_THROW(AB::alpha(q1.quad) + AB::alpha(quad2), DomainError);
}
