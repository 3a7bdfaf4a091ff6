#include <gtest/gtest.h>

#include <random>

#include "slc/poly.hpp"

using namespace slc;

TEST(IntPoly, BasicsAndPrinting) {
    IntPoly p{-4, 9, -6, 1};
    EXPECT_EQ(p.degree(), 3);
    EXPECT_TRUE(p.is_monic());
    EXPECT_EQ(p.to_string(), "x^3 - 6x^2 + 9x - 4");
    EXPECT_EQ(IntPoly{}.to_string(), "0");
    EXPECT_TRUE(IntPoly({0, 0}).is_zero());
    EXPECT_EQ(IntPoly({0, 0}).degree(), -1);
    EXPECT_EQ(IntPoly({-1, 0, 1}).to_string(), "x^2 - 1");
    EXPECT_EQ((-IntPoly::x()).to_string(), "-x");
}

TEST(IntPoly, Arithmetic) {
    const IntPoly a = IntPoly::linear(1), b = IntPoly::linear(2);
    EXPECT_EQ(a * b, (IntPoly{2, -3, 1}));
    EXPECT_EQ(a - a, IntPoly{});
    EXPECT_EQ(a.pow(3), (IntPoly{-1, 3, -3, 1}));
    EXPECT_EQ(a.pow(0), IntPoly{1});
    EXPECT_EQ(BigInt(3) * a, (IntPoly{-3, 3}));
    EXPECT_EQ(IntPoly::monomial(2, 5), (IntPoly{0, 0, 5}));
}

TEST(IntPoly, EvaluationIsRingHomomorphism) {
    std::mt19937 rng(1);
    std::uniform_int_distribution<long long> coef(-50, 50);
    for (int i = 0; i < 200; ++i) {
        IntPoly p{coef(rng), coef(rng), coef(rng), coef(rng)};
        IntPoly q{coef(rng), coef(rng), coef(rng)};
        BigInt t = coef(rng);
        EXPECT_EQ((p * q).evaluate(t), p.evaluate(t) * q.evaluate(t));
        EXPECT_EQ((p + q).evaluate(t), p.evaluate(t) + q.evaluate(t));
        EXPECT_EQ((p - q).evaluate(t), p.evaluate(t) - q.evaluate(t));
    }
}

TEST(IntPoly, DecimalRoundTrip) {
    IntPoly p = IntPoly::linear(7).pow(40);
    auto s = p.to_decimal_strings();
    EXPECT_EQ(s.front(), p.coeff(0).str());
    EXPECT_EQ(IntPoly::from_decimal_strings(s), p);
    EXPECT_GT(p.coeff(0), BigInt("1000000000000000000000000000000"));
}
