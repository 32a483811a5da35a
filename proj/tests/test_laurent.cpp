#include "rcalab/laurent.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace rcalab;

namespace {

LaurentAQ random_laurent(std::mt19937& rng, int terms = 5) {
    LaurentAQ f;
    for (int i = 0; i < terms; ++i)
        f.add_term(static_cast<int>(rng() % 7) - 3, static_cast<int>(rng() % 9) - 4,
                   make_rational(static_cast<int>(rng() % 9) - 4, static_cast<int>(1 + rng() % 3)));
    return f;
}

const LaurentAQ a = LaurentAQ::a();
const LaurentAQ q = LaurentAQ::q();

}  // namespace

TEST(Laurent, RingAxioms) {
    std::mt19937 rng(7);
    for (int t = 0; t < 40; ++t) {
        LaurentAQ f = random_laurent(rng), g = random_laurent(rng), h = random_laurent(rng);
        EXPECT_EQ((f * g) * h, f * (g * h));
        EXPECT_EQ(f * (g + h), f * g + f * h);
        EXPECT_EQ(f * g, g * f);
        EXPECT_TRUE((f - f).is_zero());
    }
}

TEST(Laurent, SpecializeIsHomomorphism) {
    std::mt19937 rng(11);
    for (int N = 0; N <= 6; ++N)
        for (int t = 0; t < 10; ++t) {
            LaurentAQ f = random_laurent(rng), g = random_laurent(rng);
            EXPECT_EQ((f * g).specialize_a(N), f.specialize_a(N) * g.specialize_a(N));
        }
}

TEST(Laurent, EqualUpToMonomial) {
    LaurentAQ f = LaurentAQ(1) - a + a * q * q;
    EXPECT_EQ(equal_up_to_monomial(f, f), (Exponent2{0, 0}));
    EXPECT_EQ(equal_up_to_monomial(q * f, f), (Exponent2{0, 2}));
    EXPECT_FALSE(equal_up_to_monomial(f, f + LaurentAQ(1)).has_value());
}

TEST(Laurent, NonnegCoeffs) {
    EXPECT_TRUE(nonneg_coeffs(LaurentAQ(1) + a * q).ok);
    auto r = nonneg_coeffs(LaurentAQ(1) - q);
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.first_violation, (Exponent2{0, 2}));
}

TEST(Laurent, BinomialDivision) {
    std::mt19937 rng(3);
    for (int t = 0; t < 30; ++t) {
        LaurentAQ g = random_laurent(rng);
        for (auto [ea, eq, s] : {std::tuple{0, 2, 1}, {2, 0, 1}, {2, -2, 1}, {0, 4, -1}, {-2, 3, 1}, {1, 1, -1}}) {
            LaurentAQ f = g * LaurentAQ::binomial(ea, eq, s);
            auto back = f.divide_binomial(ea, eq, s);
            ASSERT_TRUE(back.has_value());
            EXPECT_EQ(*back, g);
        }
        if (!g.is_zero()) {
            LaurentAQ f = g * LaurentAQ::binomial(0, 2) + LaurentAQ::monomial(7, 31);
            EXPECT_FALSE(f.divide_one_minus_q(1).has_value());
        }
    }
}

TEST(RationalAQ, EvalAt) {
    LaurentAQ p = (LaurentAQ(1) - a) * (LaurentAQ(1) + q * q - a * q);
    EXPECT_EQ(RationalAQ(p).eval_at(-1, 1), 6);
    EXPECT_EQ(RationalAQ(1).eval_at(5, 7), 1);
    EXPECT_EQ(RationalAQ(LaurentAQ::one_minus_q(2), {1}).eval_at(0, 1), 2);
    EXPECT_THROW(RationalAQ(LaurentAQ(1), {1}).eval_at(0, 1), PoleError);
    EXPECT_EQ(RationalAQ(LaurentAQ(1), {2}).eval_at(0, Rational(1, 2)), Rational(4, 3));
}

TEST(RationalAQ, ExpansionTimesDenominator) {
    std::mt19937 rng(5);
    for (int t = 0; t < 20; ++t) {
        LaurentAQ num = random_laurent(rng);
        std::vector<int> den{1, 2, static_cast<int>(1 + rng() % 4)};
        RationalAQ f(num, den);
        const int T = 12;
        LaurentAQ s = f.expand(T);
        LaurentAQ back = s * RationalAQ::denominator_poly(f.qdenom());
        LaurentAQ lhs, rhs;
        for (auto& [e, c] : back.terms())
            if (e.second <= 2 * T) lhs.add_term(e.first, e.second, c);
        for (auto& [e, c] : f.numerator().terms())
            if (e.second <= 2 * T) rhs.add_term(e.first, e.second, c);
        EXPECT_EQ(lhs, rhs);
    }
}

TEST(RationalAQ, FieldOperations) {
    RationalAQ x(LaurentAQ(1), {1}), y(LaurentAQ(1), {2});
    // 1/(1-q) - 1/(1-q^2) = q/(1-q^2)
    EXPECT_EQ(x - y, RationalAQ(q, {2}));
    EXPECT_EQ((x * y).qdenom().size(), 2u);
    RationalAQ z = RationalAQ(LaurentAQ(1) + q, {2});
    EXPECT_EQ(z, x);
}

TEST(RationalAQ, InvertQ) {
    RationalAQ x(LaurentAQ(1), {1});
    // 1/(1-q^{-1}) = -q/(1-q)
    EXPECT_EQ(x.invert_q(), RationalAQ(-q, {1}));
    std::mt19937 rng(9);
    for (int t = 0; t < 10; ++t) {
        RationalAQ f(random_laurent(rng), {1, 3});
        EXPECT_EQ(f.invert_q().invert_q(), f);
    }
}

TEST(RationalAQ, NegateA) {
    LaurentAQ f = LaurentAQ::monomial(1, 0) - LaurentAQ::monomial(3, 2);
    EXPECT_EQ(f.negate_a(), LaurentAQ::monomial(1, 0) + LaurentAQ::monomial(3, 2));
    EXPECT_THROW((LaurentAQ(1) + LaurentAQ::monomial(1, 0)).negate_a(), std::domain_error);
}

TEST(Laurent, Printing) {
    EXPECT_EQ((LaurentAQ(1) - a * q).str(), "1 - a*q");
    EXPECT_EQ(LaurentAQ::monomial(-1, 3, 2).str(), "2*a^(-1/2)*q^(3/2)");
    EXPECT_EQ(RationalAQ(LaurentAQ(1), {1, 2}).str(), "(1)/((1 - q)*(1 - q^2))");
}
