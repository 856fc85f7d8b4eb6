#include <gtest/gtest.h>

#include <random>

#include "recap/exactnum.hpp"

using namespace recap;  // NOLINT

namespace {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
    return Rational(Integer(num(rng)), Integer(den(rng)));
}

QuadraticElement random_quad(std::mt19937_64& rng, int d) {
    return {random_rational(rng), random_rational(rng), d};
}

}  // namespace

TEST(Rational, NormalizesSignAndGcd) {
    Rational r(Integer(6), Integer(-4));
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 2);
    EXPECT_EQ(r.to_string(), "-3/2");
    EXPECT_EQ(Rational(Integer(10), Integer(5)).to_string(), "2");
}

TEST(Rational, ZeroDenominatorThrows) {
    EXPECT_THROW(Rational(Integer(1), Integer(0)), DivisionByZero);
    EXPECT_THROW(Rational(3) / Rational(0), DivisionByZero);
    EXPECT_THROW(Rational(0).inverse(), DivisionByZero);
}

TEST(Rational, ParseRoundTrip) {
    for (const char* s : {"0", "7", "-7", "3/4", "-22/7", "-98765432109876543210987654321/1000"})
        EXPECT_EQ(Rational::parse(s).to_string(), s);
    EXPECT_EQ(Rational::parse(" 4/6 ").to_string(), "2/3");
    EXPECT_THROW(Rational::parse("1/"), ParseError);
    EXPECT_THROW(Rational::parse("x"), ParseError);
    EXPECT_THROW(Rational::parse("1/-2"), ParseError);
    EXPECT_THROW(Rational::parse("1/0"), DivisionByZero);
}

TEST(Rational, PowersAndShifts) {
    EXPECT_EQ(pow(Rational(Integer(2), Integer(3)), 3), Rational(Integer(8), Integer(27)));
    EXPECT_EQ(pow(Rational(2), -3), Rational(Integer(1), Integer(8)));
    EXPECT_EQ(pow(Rational(-5), 0), Rational(1));
    EXPECT_EQ(Rational(3).mul_pow2(4), Rational(48));
    EXPECT_EQ(Rational(3).mul_pow2(-4), Rational(Integer(3), Integer(16)));
}

TEST(Rational, FieldAxiomsOnRandomTriples) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        Rational x = random_rational(rng), y = random_rational(rng), z = random_rational(rng);
        EXPECT_EQ((x + y) + z, x + (y + z));
        EXPECT_EQ(x * y, y * x);
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ((x * y) * z, x * (y * z));
        if (!y.is_zero()) {
            EXPECT_EQ((x / y) * y, x);
        }
        // re-normalizing a normalized value changes nothing
        EXPECT_EQ(Rational(x.num(), x.den()), x);
        EXPECT_EQ(gcd(x.num(), x.den()), 1);
        EXPECT_GT(x.den(), 0);
    }
}

TEST(Quadratic, ConjugateProductIsNorm) {
    QuadraticElement a(2, 1, 5);
    EXPECT_EQ(quad_mul(a, a.conj()), QuadraticElement::rational(-1, 5));
}

TEST(Quadratic, GoldenRatioSquared) {
    QuadraticElement phi(Rational(Integer(1), Integer(2)), Rational(Integer(1), Integer(2)), 5);
    EXPECT_EQ(quad_mul(phi, phi), QuadraticElement(Rational(Integer(3), Integer(2)), Rational(Integer(1), Integer(2)), 5));
}

TEST(Quadratic, ZeroAbsorbs) {
    EXPECT_TRUE(quad_mul(QuadraticElement::rational(0, 2), QuadraticElement(1, 1, 2)).is_zero());
}

TEST(Quadratic, Inverses) {
    EXPECT_EQ(quad_inv(QuadraticElement(2, 1, 5)), QuadraticElement(-2, 1, 5));
    EXPECT_EQ(quad_inv(QuadraticElement(1, 1, 2)), QuadraticElement(-1, 1, 2));
    EXPECT_THROW(quad_inv(QuadraticElement(0, 0, 5)), DivisionByZero);
}

TEST(Quadratic, NormTrace) {
    auto [n1, t1] = quad_norm_trace(QuadraticElement(2, 1, 5));
    EXPECT_EQ(n1, Rational(-1));
    EXPECT_EQ(t1, Rational(4));
    auto [n2, t2] = quad_norm_trace(QuadraticElement(Rational(Integer(1), Integer(2)), Rational(Integer(1), Integer(2)), 5));
    EXPECT_EQ(n2, Rational(-1));
    EXPECT_EQ(t2, Rational(1));
    auto [n3, t3] = quad_norm_trace(QuadraticElement::rational(7, 2));
    EXPECT_EQ(n3, Rational(49));
    EXPECT_EQ(t3, Rational(14));
}

TEST(Quadratic, MismatchedFieldsRejected) {
    EXPECT_THROW(quad_mul(QuadraticElement(1, 1, 2), QuadraticElement(1, 1, 5)), DomainError);
    EXPECT_THROW(QuadraticElement(1, 1, 3), UnsupportedField);
}

TEST(Quadratic, RandomInverseAndMultiplicativeNorm) {
    std::mt19937_64 rng(5);
    for (int d : {2, 5}) {
        for (int i = 0; i < 200; ++i) {
            auto x = random_quad(rng, d), y = random_quad(rng, d);
            if (!x.is_zero()) {
                EXPECT_EQ(quad_mul(x, quad_inv(x)), QuadraticElement::rational(1, d));
            }
            EXPECT_EQ((x * y).norm(), x.norm() * y.norm());
        }
    }
}

TEST(Quadratic, NegativePowers) {
    QuadraticElement a(2, 1, 5);
    EXPECT_EQ(pow(a, -3) * pow(a, 3), QuadraticElement::rational(1, 5));
    EXPECT_EQ(pow(a, 2), QuadraticElement(9, 4, 5));
}

TEST(Quadratic, Formatting) {
    EXPECT_EQ(QuadraticElement(2, 1, 5).to_string(), "2 + sqrt(5)");
    EXPECT_EQ(QuadraticElement(Rational(Integer(-1), Integer(2)), Rational(Integer(-3), Integer(2)), 5).to_string(),
              "-1/2 - 3/2*sqrt(5)");
    EXPECT_EQ(QuadraticElement(0, -1, 2).to_string(), "-sqrt(2)");
}
