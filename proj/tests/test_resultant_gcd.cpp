#include "fermconic/resultant.hpp"

#include <gtest/gtest.h>

#include <random>

#include "fermconic/fraction.hpp"
#include "fermconic/gcd.hpp"
#include "fermconic/rational.hpp"

using fermconic::Frac;
using fermconic::make_vars;
using fermconic::MultiPoly;
using fermconic::Rational;
using P = MultiPoly<Rational>;

TEST(Resultant, LinearPair) {
    auto vars = make_vars({"x", "y", "z"});
    P x = P::variable(vars, "x", Rational());
    P y = P::variable(vars, "y", Rational());
    P z = P::variable(vars, "z", Rational());
    EXPECT_EQ(resultant(z - x, z - y, "z"), x - y);
}

TEST(Resultant, SignConvention) {
    // f-rows-first Sylvester determinant: res(z^2 - x, z, z) = -x
    auto vars = make_vars({"x", "z"});
    P x = P::variable(vars, "x", Rational());
    P z = P::variable(vars, "z", Rational());
    EXPECT_EQ(resultant(z * z - x, z, "z"), -x);
}

TEST(Resultant, DegreeSixForConicCubicPair) {
    // degree-2 and degree-3 forms in z give a homogeneous degree-6 resultant in x, y
    auto vars = make_vars({"x", "y", "z"});
    P x = P::variable(vars, "x", Rational());
    P y = P::variable(vars, "y", Rational());
    P z = P::variable(vars, "z", Rational());
    P f = z * z + x * z + y * y;
    P g = z * z * z + y * z * z + x * x * z + x * y * y;
    P r = resultant(f, g, "z");
    EXPECT_FALSE(r.is_zero());
    EXPECT_TRUE(r.is_homogeneous());
    EXPECT_EQ(r.total_degree(), 6u);
    EXPECT_EQ(r.degree_in(2), 0u);
}

TEST(Resultant, SharedFactorMeansZero) {
    auto vars = make_vars({"x", "y", "z"});
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> d(-4, 4);
    P x = P::variable(vars, "x", Rational());
    P y = P::variable(vars, "y", Rational());
    P z = P::variable(vars, "z", Rational());
    for (int i = 0; i < 20; ++i) {
        P common = z - P::constant(vars, Rational(d(rng))) * x;
        P f = common * (z + P::constant(vars, Rational(d(rng))) * y);
        P g = common * (z * z + P::constant(vars, Rational(d(rng))) * x * y);
        EXPECT_TRUE(resultant(f, g, "z").is_zero());
    }
}

TEST(Resultant, RejectsBadInput) {
    auto vars = make_vars({"x", "z"});
    P x = P::variable(vars, "x", Rational());
    P z = P::variable(vars, "z", Rational());
    EXPECT_THROW(resultant(P(vars, Rational()), z, "z"), fermconic::DomainError);
    EXPECT_THROW(resultant(x, x, "z"), fermconic::DomainError);  // degree 0 in z
}

TEST(Gcd, BasicCases) {
    auto vars = make_vars({"x", "y"});
    P x = P::variable(vars, "x", Rational());
    P y = P::variable(vars, "y", Rational());
    P g = poly_gcd((x + y) * (x - y), (x + y) * (x * x + y));
    EXPECT_EQ(g, x + y);
    // coprime
    EXPECT_TRUE(poly_gcd(x + y, x - y).is_one());
    // monomial content
    EXPECT_EQ(poly_gcd(x * x * y, x * y * y), x * y);
    // powers
    EXPECT_EQ(poly_gcd((x + y).pow(3), (x + y).pow(2)), (x + y).pow(2));
}

TEST(Gcd, RandomizedProductProperty) {
    auto vars = make_vars({"x", "y", "z"});
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<int> d(-3, 3);
    P x = P::variable(vars, "x", Rational());
    P y = P::variable(vars, "y", Rational());
    P z = P::variable(vars, "z", Rational());
    for (int i = 0; i < 30; ++i) {
        P common = x + P::constant(vars, Rational(d(rng))) * y +
                   P::constant(vars, Rational(d(rng))) * z * z;
        if (common.is_zero()) continue;
        P a = x * y + P::constant(vars, Rational(d(rng)));
        P b = z + P::constant(vars, Rational(d(rng))) * x;
        if (a.is_zero() || b.is_zero()) continue;
        P g = poly_gcd(common * a, common * b);
        // gcd is divisible by common (it may pick up gcd(a, b) too)
        EXPECT_TRUE((common * a).divisible_by(g));
        EXPECT_TRUE((common * b).divisible_by(g));
        EXPECT_TRUE(g.divisible_by(fermconic::detail::make_monic(common)));
    }
}

TEST(Frac, NormalizationAndEquality) {
    auto vars = make_vars({"x", "y"});
    P x = P::variable(vars, "x", Rational());
    P y = P::variable(vars, "y", Rational());
    Frac<Rational> a(x * x - y * y, x - y);
    EXPECT_TRUE(a.is_polynomial());
    EXPECT_EQ(a.num(), x + y);
    Frac<Rational> b(x, y);
    Frac<Rational> c(x * x, x * y);
    EXPECT_EQ(b, c);
    EXPECT_EQ(b + b, Frac<Rational>(Rational(2) * x, y));
    EXPECT_TRUE((b - b).is_zero());
    EXPECT_TRUE((b / b).is_one());
    EXPECT_THROW(b / Frac<Rational>(P(vars, Rational())), fermconic::NotInvertible);
}

TEST(Frac, DenominatorStaysMonic) {
    auto vars = make_vars({"x", "y"});
    P x = P::variable(vars, "x", Rational());
    P y = P::variable(vars, "y", Rational());
    Frac<Rational> a(y, Rational(3) * x + y);
    EXPECT_TRUE(a.den().leading_term().c.is_one());
}
