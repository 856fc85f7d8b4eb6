#include <gtest/gtest.h>

#include <random>

#include "recap/recurrence.hpp"

using namespace recap;  // NOLINT

namespace {

Polynomial P(const char* s) { return Polynomial::parse(s); }

Rational Q(long p, long q) { return Rational(Integer(p), Integer(q)); }

LinearRecurrence random_rec(std::mt19937_64& rng, std::size_t d) {
    std::uniform_int_distribution<long> coef(-3, 3), init(-5, 5);
    std::vector<Rational> c(d), i(d);
    do {
        for (auto& v : c) v = Rational(coef(rng));
    } while (c.back().is_zero());
    bool nonzero = false;
    while (!nonzero) {
        for (auto& v : i) {
            v = Rational(init(rng));
            nonzero = nonzero || !v.is_zero();
        }
    }
    return {c, i};
}

// Rebuild the sequence of `rec` with companion multiplied by (X - r).
LinearRecurrence padded(const LinearRecurrence& rec, long r) {
    Polynomial big = companion(rec) * Polynomial({-r, 1});
    std::vector<Rational> init;
    for (std::size_t i = 0; i <= rec.order(); ++i) init.push_back(eval_at(rec, static_cast<std::int64_t>(i)));
    return from_companion(big, init);
}

}  // namespace

TEST(LinearRecurrence, RejectsBadShapes) {
    EXPECT_THROW(make_recurrence({1, 0}, {0, 1}), PreconditionError);
    EXPECT_THROW(make_recurrence({1, 1}, {0}), PreconditionError);
    EXPECT_THROW(make_recurrence({}, {}), PreconditionError);
}

TEST(EvalAt, Fibonacci) {
    EXPECT_EQ(eval_at(fibonacci(), 4), Rational(3));
    EXPECT_EQ(eval_at(fibonacci(), -1), Rational(1));
    EXPECT_EQ(eval_at(fibonacci(), -6), Rational(-8));
    EXPECT_EQ(eval_at(fibonacci(), 100), Rational(Integer("354224848179261915075")));
}

TEST(EvalAt, WorkedSymmetricExample) {
    auto rec = make_recurrence({4, 1}, {-3, 1});
    EXPECT_EQ(eval_at(rec, -1), Rational(13));
    EXPECT_EQ(eval_at(rec, 3), Rational(5));
    EXPECT_EQ(eval_at(rec, 4), Rational(21));
    // independent closed form over Q(sqrt 5)
    auto cf = quad_closed_form(rec);
    for (int n = -6; n <= 6; ++n) EXPECT_EQ(cf.eval(n), eval_at(rec, n)) << n;
}

TEST(EvalAt, TwoSidedConsistencyOnRandomRecurrences) {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 30; ++trial) {
        auto rec = random_rec(rng, 1 + static_cast<std::size_t>(trial % 3));
        SequenceEvaluator ev(rec);
        const auto d = static_cast<std::int64_t>(rec.order());
        for (std::int64_t n = -30; n + d <= 30; ++n) {
            Rational rhs(0);
            for (std::int64_t i = 0; i < d; ++i) rhs += rec.a(static_cast<std::size_t>(i)) * ev.at(n + i);
            EXPECT_EQ(ev.at(n + d), rhs);
        }
    }
}

TEST(Minimalize, DropsRedundantFactor) {
    // companion (X^2-X-1)(X-2) with the Fibonacci start
    auto rec = make_recurrence({3, -1, -2}, {0, 1, 1});
    EXPECT_EQ(companion(rec), P("X^3-3X^2+X+2"));
    auto m = minimalize(rec);
    EXPECT_EQ(m, fibonacci());
}

TEST(Minimalize, FibonacciIsMinimal) { EXPECT_EQ(minimalize(fibonacci()), fibonacci()); }

TEST(Minimalize, ZeroSequenceRejected) { EXPECT_THROW(minimalize(make_recurrence({1, 1}, {0, 0})), DomainError); }

TEST(Minimalize, IdempotentAndAgreesOnWindow) {
    std::mt19937_64 rng(202);
    for (int trial = 0; trial < 40; ++trial) {
        auto rec = random_rec(rng, 1 + static_cast<std::size_t>(trial % 4));
        auto m = minimalize(rec);
        EXPECT_EQ(minimalize(m), m);
        const auto d = static_cast<std::int64_t>(rec.order());
        for (std::int64_t n = -2 * d; n <= 4 * d; ++n) EXPECT_EQ(eval_at(m, n), eval_at(rec, n));
        EXPECT_TRUE(divides(companion(m), companion(rec)));
    }
}

TEST(Minimalize, RecoversPaddedRecurrence) {
    std::mt19937_64 rng(303);
    std::uniform_int_distribution<long> root(-3, 3);
    for (int trial = 0; trial < 30; ++trial) {
        auto rec = minimalize(random_rec(rng, 2));
        long r = root(rng);
        if (r == 0) continue;
        auto big = padded(rec, r);
        EXPECT_EQ(minimalize(big), rec);
    }
}

TEST(Companion, Examples) {
    EXPECT_EQ(companion(fibonacci()), P("X^2-X-1"));
    EXPECT_EQ(companion(make_recurrence({4, 1}, {0, 1})), P("X^2-4X-1"));
    EXPECT_EQ(companion(make_recurrence({-1, -1, -1}, {0, 0, 1})), P("X^3+X^2+X+1"));
}

TEST(ClassifyRoots, Fibonacci) {
    auto r = classify_roots(fibonacci());
    EXPECT_TRUE(r.is_simple);
    EXPECT_FALSE(r.is_degenerate);
    EXPECT_FALSE(r.is_unitary);
    EXPECT_TRUE(r.integer_defined);
    EXPECT_TRUE(r.integer_window_verified);
}

TEST(ClassifyRoots, DegenerateAndUnitary) {
    EXPECT_TRUE(classify_roots(make_recurrence({0, 4}, {1, 0})).is_degenerate);
    auto u = classify_roots(make_recurrence({3, -2}, {0, 1}));
    EXPECT_TRUE(u.is_unitary);
    EXPECT_FALSE(classify_roots(make_recurrence({4, 1}, {-3, 1})).is_degenerate);
    // roots 1+i, 1-i: ratio is a fourth root of unity
    EXPECT_TRUE(classify_roots(make_recurrence({2, -2}, {0, 1})).is_degenerate);
    // (X-2)^2 is not simple
    EXPECT_FALSE(classify_roots(make_recurrence({4, -4}, {0, 2})).is_simple);
}

TEST(ClassifyRoots, IntegerWindow) {
    auto r = classify_roots(make_recurrence({1, 2}, {0, 1}));
    EXPECT_TRUE(r.integer_defined);
    EXPECT_FALSE(r.integer_window_verified);  // f_{-1} = 1/2
}

TEST(DetectSymmetric, BinaryCases) {
    EXPECT_EQ(detect_symmetric(fibonacci()).info, SymmetricInfo{2});
    EXPECT_EQ(detect_symmetric(make_recurrence({4, 1}, {-3, 1})).info, SymmetricInfo{2});
    EXPECT_EQ(detect_symmetric(make_recurrence({3, -1}, {0, 1})).info, SymmetricInfo{1});
    EXPECT_FALSE(detect_symmetric(make_recurrence({1, 2}, {0, 1})).info.has_value());
}

TEST(DetectSymmetric, OddOrderNotDetermined) {
    auto s = detect_symmetric(make_recurrence({-1, 0, -1}, {0, 0, 1}));
    EXPECT_EQ(s.status, SymmetricStatus::NotDetermined);
    EXPECT_FALSE(s.info.has_value());
}

TEST(DetectSymmetric, QuarticPairing) {
    // (X^2-X-1)(X^2-3X+1): pairs with products -1 and 1
    auto rec = from_companion(P("X^2-X-1") * P("X^2-3X+1"), {0, 1, 0, 0});
    auto s = detect_symmetric(rec);
    EXPECT_EQ(s.status, SymmetricStatus::Determined);
    EXPECT_EQ(s.info, SymmetricInfo{2});
    auto none = from_companion(P("X^2-X-1") * P("X^2-X-3"), {0, 1, 0, 0});
    EXPECT_FALSE(detect_symmetric(none).info.has_value());
}

TEST(DetectExceptional, DoubleRootAtTwoAndHalf) {
    auto up = detect_exceptional(make_recurrence({4, -4}, {0, 2}));
    ASSERT_TRUE(up.has_value());
    EXPECT_EQ(up->K, 1);
    EXPECT_EQ(up->R, Rational(1));
    EXPECT_EQ(up->gamma, Rational(0));
    auto down = detect_exceptional(LinearRecurrence({Rational(1), Q(-1, 4)}, {Rational(0), Q(1, 2)}));
    ASSERT_TRUE(down.has_value());
    EXPECT_EQ(down->K, -1);
    EXPECT_EQ(down->R, Rational(1));
    EXPECT_EQ(down->gamma, Rational(0));
    EXPECT_FALSE(detect_exceptional(fibonacci()).has_value());
}

TEST(DetectExceptional, RecoversShiftedForms) {
    // f_n = 3 (n - 5) 2^n
    std::vector<Rational> init{Rational(-15), Rational(-24)};
    auto e = detect_exceptional(LinearRecurrence({Rational(4), Rational(-4)}, init));
    ASSERT_TRUE(e.has_value());
    EXPECT_EQ(e->R, Rational(3));
    EXPECT_EQ(e->gamma, Rational(5));
}

TEST(QuadClosedForm, Binet) {
    auto cf = quad_closed_form(fibonacci());
    EXPECT_EQ(cf.eval(10), Rational(55));
    EXPECT_EQ(cf.eval(0), Rational(0));
    EXPECT_EQ(cf.c1, QuadraticElement(0, Q(1, 5), 5));
    SequenceEvaluator ev(fibonacci());
    for (int n = -20; n <= 200; ++n) ASSERT_EQ(cf.eval(n), ev.at(n)) << n;
}

TEST(QuadClosedForm, SqrtTwoField) {
    auto pell = make_recurrence({2, 1}, {0, 1});
    auto cf = quad_closed_form(pell);
    EXPECT_EQ(cf.alpha1.d(), 2);
    for (int n = -10; n <= 30; ++n) EXPECT_EQ(cf.eval(n), eval_at(pell, n));
}

TEST(QuadClosedForm, UnsupportedFields) {
    EXPECT_THROW(quad_closed_form(make_recurrence({1, 1, 1}, {0, 0, 1})), PreconditionError);
    EXPECT_THROW(quad_closed_form(make_recurrence({1, 2}, {0, 1})), UnsupportedField);  // rational roots
    EXPECT_THROW(quad_closed_form(make_recurrence({0, 3}, {0, 1})), UnsupportedField);  // sqrt 3
}
