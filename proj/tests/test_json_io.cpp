#include "fermconic/json_io.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace fermconic;
using P = MultiPoly<Rational>;

TEST(JsonIo, SchemaShape) {
    auto vars = make_vars({"x", "y"});
    P x = P::variable(vars, "x", Rational());
    P y = P::variable(vars, "y", Rational());
    P f = Rational(1, 2) * x * x - y;
    Json j = to_json(f);
    ASSERT_TRUE(j.contains("vars"));
    ASSERT_TRUE(j.contains("terms"));
    EXPECT_EQ(j["vars"], (std::vector<std::string>{"x", "y"}));
    // canonical order: x^2 term first
    EXPECT_EQ(j["terms"][0]["e"], (std::vector<unsigned>{2, 0}));
    EXPECT_EQ(j["terms"][0]["c"], "1/2");
    EXPECT_EQ(j["terms"][1]["c"], "-1");
}

TEST(JsonIo, RoundTripRandomized) {
    auto vars = make_vars({"a", "b", "c"});
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> coeff(-20, 20);
    std::uniform_int_distribution<unsigned> expo(0, 4);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<P::Term> terms;
        for (int t = 0; t < 8; ++t) {
            Monomial m;
            for (int i = 0; i < 3; ++i) m.set(i, expo(rng));
            terms.push_back({m, Rational(coeff(rng), 1 + (trial % 5))});
        }
        P f = P::from_terms(vars, std::move(terms), Rational());
        EXPECT_EQ(rational_poly_from_json(to_json(f)), f);
    }
}

TEST(JsonIo, FpPolySerialization) {
    const std::uint64_t p = 101;
    auto vars = make_vars({"x", "y"});
    using PF = MultiPoly<Fp>;
    PF x = PF::variable(vars, "x", Fp(0, p));
    PF y = PF::variable(vars, "y", Fp(0, p));
    PF f = Fp(7, p) * x * y + Fp(100, p) * y;
    Json j = to_json(f, p);
    EXPECT_EQ(j["modulus"], p);
    EXPECT_EQ(fp_poly_from_json(j), f);
    EXPECT_EQ(j["terms"][0]["c"].get<std::string>(), "7");
}

TEST(JsonIo, ParseErrors) {
    Json bad{{"vars", {"x"}}};
    EXPECT_THROW(rational_poly_from_json(bad), ParseError);
    Json arity{{"vars", {"x", "y"}},
               {"terms", Json::array({Json{{"e", {1}}, {"c", "1"}}})}};
    EXPECT_THROW(rational_poly_from_json(arity), ParseError);
}
