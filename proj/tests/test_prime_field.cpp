#include "fermconic/prime_field.hpp"

#include <gtest/gtest.h>

#include <random>

#include "fermconic/fp_univariate.hpp"

using fermconic::Fp;

TEST(Fp, ArithmeticAxioms) {
    const std::uint64_t p = 2305843009213693951ull;  // 2^61 - 1
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint64_t> d(0, p - 1);
    for (int i = 0; i < 500; ++i) {
        Fp a(d(rng), p), b(d(rng), p), c(d(rng), p);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a - b) + b, a);
        if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
    }
}

TEST(Fp, InverseAndPow) {
    Fp a(17, 101);
    EXPECT_TRUE((a * a.inv()).is_one());
    EXPECT_EQ(a.pow(100).value(), 1u);  // Fermat
    EXPECT_THROW(Fp(0, 101).inv(), fermconic::NotInvertible);
}

TEST(Fp, MixedModuliThrow) {
    EXPECT_THROW(Fp(1, 7) + Fp(1, 11), fermconic::DomainError);
}

TEST(Fp, Sqrt) {
    std::mt19937_64 rng(11);
    for (std::uint64_t p : {101ull, 2305843009213693951ull}) {
        std::uniform_int_distribution<std::uint64_t> d(1, p - 1);
        int squares = 0;
        for (int i = 0; i < 100; ++i) {
            Fp a(d(rng), p);
            auto r = a.sqrt();
            if (r) {
                ++squares;
                EXPECT_EQ((*r) * (*r), a);
            } else {
                EXPECT_FALSE(a.is_square());
            }
        }
        EXPECT_GT(squares, 25);
    }
}

TEST(FpUnivariate, RootsAndSplitting) {
    std::mt19937_64 rng(13);
    const std::uint64_t p = 101;
    // (x - 3)(x - 5)(x - 7)
    fermconic::fpuni::Poly f{Fp(0, p), Fp(0, p), Fp(0, p), Fp(1, p)};
    // expand manually: x^3 - 15x^2 + 71x - 105
    f = {Fp::from_int(-105, p), Fp(71, p), Fp::from_int(-15, p), Fp(1, p)};
    auto rs = fermconic::fpuni::roots(f, rng);
    ASSERT_EQ(rs.size(), 3u);
    EXPECT_EQ(rs[0].value(), 3u);
    EXPECT_EQ(rs[1].value(), 5u);
    EXPECT_EQ(rs[2].value(), 7u);
    EXPECT_TRUE(fermconic::fpuni::splits_distinct(f));
    // x^2 + 1 over F_101: -1 is a square (101 = 1 mod 4)
    fermconic::fpuni::Poly g{Fp(1, p), Fp(0, p), Fp(1, p)};
    EXPECT_TRUE(fermconic::fpuni::splits_distinct(g));
}

TEST(FpUnivariate, KthRoot) {
    std::mt19937_64 rng(17);
    const std::uint64_t p = 101;  // 5 | p - 1
    int found = 0;
    for (std::uint64_t a = 1; a < 30; ++a) {
        auto r = fermconic::fpuni::kth_root(Fp(a, p), 5, rng);
        if (r) {
            ++found;
            EXPECT_EQ(r->pow(5), Fp(a, p));
        }
    }
    EXPECT_GT(found, 0);
    // every element has a 5th root when gcd(5, p-1) = 1
    const std::uint64_t q = 103;
    for (std::uint64_t a = 1; a < 20; ++a) {
        auto r = fermconic::fpuni::kth_root(Fp(a, q), 5, rng);
        ASSERT_TRUE(r.has_value());
        EXPECT_EQ(r->pow(5), Fp(a, q));
    }
}

TEST(FpUnivariate, RootOfUnity) {
    std::mt19937_64 rng(19);
    Fp z = fermconic::fpuni::root_of_unity(5, 101, rng);
    EXPECT_TRUE(z.pow(5).is_one());
    EXPECT_FALSE(z.is_one());
}
