#include "charnum/exact.hpp"
#include "charnum/linform.hpp"
#include "generators.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace charnum;
using charnum::testing::Gen;

constexpr int kIterations = 500;

TEST(Binomial, Examples) {
    EXPECT_EQ(binomial(8, 4), 70);
    EXPECT_EQ(3 * binomial(8, 4), 210);
    EXPECT_EQ(binomial(13, 2), 78);
    for (int n = 0; n < 20; ++n) EXPECT_EQ(binomial(n, 0), 1);
}

TEST(Binomial, OutsideRangeIsZero) {
    EXPECT_EQ(binomial(5, -1), 0);
    EXPECT_EQ(binomial(5, 6), 0);
    EXPECT_EQ(binomial(0, 1), 0);
    EXPECT_THROW(binomial(-1, 0), std::invalid_argument);
}

TEST(Binomial, PascalRuleUpTo60) {
    for (int n = 2; n <= 60; ++n)
        for (int k = 1; k < n; ++k) EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k)) << n << "," << k;
}

TEST(Binomial, MatchesFactorialQuotient) {
    for (int n = 0; n <= 40; ++n)
        for (int k = 0; k <= n; ++k) EXPECT_EQ(binomial(n, k), factorial(n) / (factorial(k) * factorial(n - k)));
}

TEST(Multinomial, Examples) {
    EXPECT_EQ(multinomial(7, {2, 2, 3}), 210);
    EXPECT_EQ(multinomial(7, {2, 2, 3}) / 2, 105);
    EXPECT_EQ(multinomial(13, {2, 2, 9}), 4290);
    EXPECT_EQ(multinomial(13, {2, 2, 9}) / 2, 2145);
    for (int n = 0; n < 10; ++n) EXPECT_EQ(multinomial(n, {n}), 1);
    EXPECT_EQ(multinomial(13, {5, 4, 2, 2}), factorial(13) / (factorial(5) * factorial(4) * 2 * 2));
}

TEST(Multinomial, RejectsWrongSum) {
    EXPECT_THROW(multinomial(7, {2, 2, 2}), std::invalid_argument);
    EXPECT_THROW(multinomial(3, {4, -1}), std::invalid_argument);
}

TEST(ExactDivision, AssertsDivisibility) {
    EXPECT_EQ(exact_div(Integer(240), Integer(6)), 40);
    EXPECT_THROW(exact_div(Integer(7), Integer(2)), std::domain_error);
    EXPECT_THROW(exact_div(Integer(7), Integer(0)), std::domain_error);
    EXPECT_THROW(to_integer(Rational(1, 2)), std::domain_error);
    EXPECT_EQ(to_integer(Rational(10, 5)), 2);
}

TEST(Parsing, IntegersAndRationals) {
    EXPECT_EQ(parse_integer("23011191144"), Integer("23011191144"));
    EXPECT_EQ(parse_integer("-5"), -5);
    EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
    EXPECT_THROW(parse_integer("12a"), std::invalid_argument);
    EXPECT_THROW(parse_integer(""), std::invalid_argument);
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_EQ(to_string(Rational(-3, 6)), "-1/2");
    EXPECT_EQ(to_string(Rational(8, 4)), "2");
    EXPECT_EQ(parse_rational("3/-6"), Rational(-1, 2));
    EXPECT_EQ(make_rational(4, -6), Rational(-2, 3));
    EXPECT_THROW(make_rational(1, 0), std::invalid_argument);
}

class RationalProperty : public ::testing::Test {
protected:
    Gen gen{0x5eed'0001};
};

TEST_F(RationalProperty, AlwaysNormalized) {
    for (int i = 0; i < kIterations; ++i) {
        Rational r = gen.rational(30) * gen.rational(30) + gen.rational(30);
        EXPECT_GT(denominator(r), 0);
        EXPECT_EQ(gcd(abs(numerator(r)), denominator(r)), 1);
        Rational again(numerator(r), denominator(r));
        EXPECT_EQ(again, r);
        EXPECT_EQ(make_rational(-numerator(r), -denominator(r)), r);
    }
}

TEST_F(RationalProperty, MatchesCrossMultiplication) {
    for (int i = 0; i < kIterations; ++i) {
        Rational x = gen.rational(25), y = gen.rational(25);
        const Integer a = numerator(x), b = denominator(x), c = numerator(y), d = denominator(y);
        // Compare as unreduced fractions p/q by cross-multiplying.
        auto same = [](const Rational& r, const Integer& p, const Integer& q) {
            return numerator(r) * q == p * denominator(r);
        };
        EXPECT_TRUE(same(x + y, a * d + b * c, b * d));
        EXPECT_TRUE(same(x - y, a * d - b * c, b * d));
        EXPECT_TRUE(same(x * y, a * c, b * d));
        if (c != 0) {
            Integer p = a * d, q = b * c;
            if (q < 0) {
                p = -p;
                q = -q;
            }
            EXPECT_TRUE(same(x / y, p, q));
        }
    }
}

class LinFormProperty : public ::testing::Test {
protected:
    Gen gen{0x5eed'0002};
};

TEST_F(LinFormProperty, AdditionCommutes) {
    for (int i = 0; i < kIterations; ++i) {
        LinForm f = gen.linform(), g = gen.linform();
        EXPECT_EQ(f + g, g + f);
    }
}

TEST_F(LinFormProperty, AdditionAssociates) {
    for (int i = 0; i < kIterations; ++i) {
        LinForm f = gen.linform(), g = gen.linform(), h = gen.linform();
        EXPECT_EQ((f + g) + h, f + (g + h));
    }
}

TEST_F(LinFormProperty, ScalingDistributes) {
    for (int i = 0; i < kIterations; ++i) {
        LinForm f = gen.linform(), g = gen.linform();
        Rational k = gen.rational(10);
        EXPECT_EQ((f + g) * k, f * k + g * k);
    }
}

TEST_F(LinFormProperty, SelfDifferenceIsZeroWithNoStoredTerms) {
    for (int i = 0; i < kIterations; ++i) {
        LinForm f = gen.linform();
        LinForm z = f - f;
        EXPECT_TRUE(z.is_zero());
        EXPECT_TRUE(z.terms().empty());
        for (const auto& [s, c] : (f * Rational(0)).terms()) ADD_FAILURE() << symbol_name(s) << " kept " << c;
    }
}

TEST_F(LinFormProperty, SubstitutionIsLinear) {
    for (int i = 0; i < kIterations; ++i) {
        LinForm f = gen.linform(), g = gen.linform();
        std::map<Symbol, Rational> values;
        for (int s = 0; s < kSymbolCount; ++s) values[static_cast<Symbol>(s)] = gen.rational(6);
        LinForm lhs = (f + g).substitute(values);
        LinForm rhs = f.substitute(values) + g.substitute(values);
        EXPECT_TRUE(lhs.is_constant());
        EXPECT_EQ(lhs, rhs);
    }
}

TEST(LinForm, Rendering) {
    LinForm t(103320, {{Symbol::Tau, 1170}});
    EXPECT_EQ(t.str(), "103320 + 1170*tau");
    EXPECT_EQ(LinForm::symbol(Symbol::Iota, 2535).str(), "2535*iota");
    EXPECT_EQ((LinForm(0) - LinForm::symbol(char_symbol(3))).str(), "-C3");
    EXPECT_EQ(LinForm().str(), "0");
    EXPECT_EQ(LinForm(Rational(-1, 2), {{Symbol::QPrime, Rational(1, 3)}}).str(), "-1/2 + 1/3*q'");
}

TEST(Symbol, NamesRoundTrip) {
    for (int i = 0; i < kSymbolCount; ++i) {
        auto s = static_cast<Symbol>(i);
        EXPECT_EQ(parse_symbol(symbol_name(s)), s);
    }
    EXPECT_EQ(symbol_name(char_symbol(14)), "C14");
    EXPECT_THROW(char_symbol(15), std::out_of_range);
    EXPECT_THROW(parse_symbol("sigma"), std::invalid_argument);
}
