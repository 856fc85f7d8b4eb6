#include <gtest/gtest.h>

#include "recap/trinomial.hpp"

using namespace recap;  // NOLINT
using V = TrinomialVariant;

namespace {

Polynomial P(const char* s) { return Polynomial::parse(s); }

Polynomial product(const TrinomialFactorization& f) {
    Polynomial acc = f.cyclotomic_cofactor;
    for (auto& g : f.noncyclotomic_factors) acc = acc * g;
    return acc;
}

}  // namespace

TEST(BuildTrinomial, Shapes) {
    EXPECT_EQ(build_trinomial(V::MeanMid, 3, 2), P("X^3-2X^2+1"));
    EXPECT_EQ(build_trinomial(V::MeanLow, 4, 1), P("X^4+X-2"));
    EXPECT_EQ(build_trinomial(V::MeanHigh, 3, 1), P("2X^3-X-1"));
    EXPECT_THROW(build_trinomial(V::MeanMid, 2, 2), DomainError);
    EXPECT_THROW(build_trinomial(V::MeanMid, 3, 0), DomainError);
}

TEST(BuildTrinomial, ReversalDuality) {
    for (int a = 2; a <= 20; ++a)
        for (int b = 1; b < a; ++b)
            EXPECT_EQ(poly_reverse(build_trinomial(V::MeanHigh, a, b)), -build_trinomial(V::MeanLow, a, a - b));
}

TEST(Schinzel, SevenFiveSplitsIntoComputedPair) {
    auto f = schinzel_factorization(7, 5);
    EXPECT_TRUE(f.is_schinzel_exception);
    EXPECT_TRUE(f.certified);
    EXPECT_EQ(f.cyclotomic_cofactor, P("X-1"));
    EXPECT_EQ(f.noncyclotomic_factors, (std::vector<Polynomial>{P("X^3-X-1"), P("X^3+X^2+1")}));
}

TEST(Schinzel, SevenTwoSplitsIntoComputedPair) {
    auto f = schinzel_factorization(7, 2);
    EXPECT_EQ(f.noncyclotomic_factors, (std::vector<Polynomial>{P("X^3+X+1"), P("X^3+X^2-1")}));
}

TEST(Schinzel, NonException) {
    auto f = schinzel_factorization(3, 2);
    EXPECT_FALSE(f.is_schinzel_exception);
    EXPECT_EQ(f.cyclotomic_cofactor, P("X-1"));
    EXPECT_EQ(f.noncyclotomic_factors, std::vector<Polynomial>{P("X^2-X-1")});
}

TEST(Schinzel, FourteenFourWithKEqualsTwo) {
    auto f = schinzel_factorization(14, 4);
    EXPECT_EQ(f.cyclotomic_cofactor, P("X^2-1"));
    EXPECT_EQ(f.noncyclotomic_factors, (std::vector<Polynomial>{P("X^6+X^2+1"), P("X^6+X^4-1")}));
    EXPECT_EQ(product(f), build_trinomial(V::MeanMid, 14, 4));
}

TEST(Schinzel, PublishedPairsDoNotMultiplyBack) {
    for (auto [n, m] : {std::pair{7, 2}, {7, 5}, {14, 4}, {14, 10}}) {
        auto pair = published_schinzel_pair(n, m);
        auto cyc = Polynomial::monomial(1, static_cast<std::size_t>(std::gcd(n, m))) - Polynomial::one();
        EXPECT_NE(cyc * pair[0] * pair[1], build_trinomial(V::MeanMid, n, m)) << n << "," << m;
    }
}

TEST(Schinzel, BeyondBoundUsesExceptionPattern) {
    auto f = schinzel_factorization(21, 6, 16);
    EXPECT_FALSE(f.certified);
    EXPECT_EQ(product(f), build_trinomial(V::MeanMid, 21, 6));
    EXPECT_EQ(f.noncyclotomic_factors, (std::vector<Polynomial>{P("X^9+X^3+1"), P("X^9+X^6-1")}));
}

TEST(Schinzel, SweepShape) {
    for (const auto& e : lemma_sweep(V::MeanMid, 16)) {
        EXPECT_TRUE(e.certified);
        std::size_t expect = e.exception ? 2 : (e.n == 2 * e.m ? 0 : 1);
        EXPECT_EQ(e.noncyclotomic_count, expect) << e.n << "," << e.m;
    }
}

TEST(Plus2, Examples) {
    EXPECT_EQ(plus2_noncyclotomic(3, 1), P("X^2+X+2"));
    EXPECT_EQ(plus2_noncyclotomic(4, 3), P("X^3+2X^2+2X+2"));
    EXPECT_EQ(plus2_noncyclotomic(4, 2), P("X^2+2"));
    EXPECT_EQ(plus2_noncyclotomic(6, 3), P("X^3+2"));
}

TEST(Plus2, SweepAllIrreducible) {
    for (const auto& e : lemma_sweep(V::MeanLow, 16)) {
        EXPECT_TRUE(e.certified);
        EXPECT_EQ(e.noncyclotomic_count, 1u) << e.n << "," << e.m;
        EXPECT_TRUE(certify_irreducible(plus2_noncyclotomic(e.n, e.m)));
    }
}

TEST(Factorizations, MultiplyBack) {
    for (V v : {V::MeanHigh, V::MeanMid, V::MeanLow})
        for (int a = 2; a <= 12; ++a)
            for (int b = 1; b < a; ++b) EXPECT_EQ(product(factor_variant(v, a, b)), build_trinomial(v, a, b));
}

TEST(TrinomialMultiples, Examples) {
    EXPECT_EQ(trinomial_multiples(P("X^2-X-1"), 10), (std::vector<TrinomialMatch>{{V::MeanMid, 3, 2}}));
    EXPECT_EQ(trinomial_multiples(P("X^3-X-1"), 10), (std::vector<TrinomialMatch>{{V::MeanMid, 7, 5}}));
    EXPECT_EQ(trinomial_multiples(P("X^2+2"), 10), (std::vector<TrinomialMatch>{{V::MeanLow, 4, 2}}));
    EXPECT_EQ(trinomial_multiples(P("4X^2+4X+2"), 5), (std::vector<TrinomialMatch>{{V::MeanHigh, 3, 1}}));
    EXPECT_THROW(trinomial_multiples(P("X^2+X"), 10), PreconditionError);
}

TEST(TrinomialMultiples, AgreesWithDirectDivision) {
    for (const char* s : {"X^2-X-1", "X^3+X^2+1", "X-1", "X+1", "X^2+1", "2X^3+X^2+X+1"}) {
        Polynomial p = P(s);
        std::vector<TrinomialMatch> direct;
        for (int a = 2; a <= 14; ++a)
            for (int b = 1; b < a; ++b)
                for (V v : {V::MeanHigh, V::MeanMid, V::MeanLow})
                    if (divides(p, build_trinomial(v, a, b))) direct.push_back({v, a, b});
        EXPECT_EQ(trinomial_multiples(p, 14), direct) << s;
    }
}
