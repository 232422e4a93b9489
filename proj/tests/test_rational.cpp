#include "fermconic/rational.hpp"

#include <gtest/gtest.h>

#include <random>

using fermconic::Rational;

TEST(Rational, CanonicalForm) {
    Rational r(6, 4);
    EXPECT_EQ(r.to_string(), "3/2");
    Rational neg(3, -6);
    EXPECT_EQ(neg.to_string(), "-1/2");
    EXPECT_EQ(Rational(0, 7).to_string(), "0");
    EXPECT_TRUE(Rational(0, 5).is_zero());
}

TEST(Rational, Parse) {
    EXPECT_EQ(Rational::from_string("22/7"), Rational(22, 7));
    EXPECT_EQ(Rational::from_string("-10/4"), Rational(-5, 2));
    EXPECT_EQ(Rational::from_string("17"), Rational(17));
    EXPECT_THROW(Rational::from_string("1/0"), fermconic::Error);
    EXPECT_THROW(Rational::from_string("abc"), fermconic::ParseError);
}

TEST(Rational, FieldOps) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(-50, 50);
    for (int i = 0; i < 200; ++i) {
        long an = d(rng), ad = d(rng), bn = d(rng), bd = d(rng);
        if (ad == 0 || bd == 0) continue;
        Rational a(an, ad), b(bn, bd);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) - b, a);
        if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
        if (!a.is_zero()) EXPECT_TRUE((a * a.inv()).is_one());
    }
    EXPECT_THROW(Rational(1) / Rational(0), fermconic::NotInvertible);
}

TEST(Rational, AddMulFastPathMatchesSlow) {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<long> d(-1000, 1000);
    for (int i = 0; i < 200; ++i) {
        Rational acc1(d(rng));
        Rational acc2 = acc1;
        Rational a(d(rng)), b(d(rng));
        acc1.add_mul(a, b);
        acc2 += a * b;
        EXPECT_EQ(acc1, acc2);
        // mixed integer/fraction path
        Rational fa(d(rng), 7), fb(d(rng) | 1, 3);
        Rational m1 = acc1, m2 = acc1;
        m1.add_mul(fa, fb);
        m2 += fa * fb;
        EXPECT_EQ(m1, m2);
    }
}

TEST(Rational, ModularReduction) {
    EXPECT_EQ(Rational(7).mod(5), 2u);
    EXPECT_EQ(Rational(-1).mod(5), 4u);
    // 1/2 mod 7 = 4
    EXPECT_EQ(Rational(1, 2).mod(7), 4u);
    EXPECT_THROW(Rational(1, 7).mod(7), fermconic::NotInvertible);
}

TEST(Rational, Pow) {
    EXPECT_EQ(Rational(2, 3).pow(3), Rational(8, 27));
    EXPECT_TRUE(Rational(5).pow(0).is_one());
}
