#include <gtest/gtest.h>

#include <random>

#include "recap/json_io.hpp"

using namespace recap;  // NOLINT

TEST(JsonRational, RoundTripAndIntegers) {
    for (const char* s : {"0", "-3/4", "98765432109876543210/7", "5"}) {
        Rational r = Rational::parse(s);
        EXPECT_EQ(rational_from_json(to_json(r)), r);
    }
    EXPECT_EQ(rational_from_json(Json(12)), Rational(12));
    EXPECT_THROW(rational_from_json(Json(1.5)), ParseError);
    EXPECT_THROW(rational_from_json(Json("1/0")), ParseError);
}

TEST(JsonPolynomial, Shape) {
    auto p = Polynomial::parse("2X^3-X^2-1");
    EXPECT_EQ(to_json(p).dump(), R"({"coeffs":["-1","0","-1","2"]})");
    EXPECT_EQ(polynomial_from_json(to_json(p)), p);
}

TEST(JsonRecurrence, RoundTripRandom) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> v(-9, 9), den(1, 6), ord(1, 4);
    for (int i = 0; i < 50; ++i) {
        auto d = static_cast<std::size_t>(ord(rng));
        std::vector<Rational> c(d), init(d);
        for (auto& x : c) x = Rational(Integer(v(rng)), Integer(den(rng)));
        if (c.back().is_zero()) c.back() = Rational(1);
        for (auto& x : init) x = Rational(Integer(v(rng)), Integer(den(rng)));
        LinearRecurrence r(c, init);
        EXPECT_EQ(recurrence_from_json(parse_json_text(to_json(r).dump())), r);
    }
}

TEST(JsonRecurrence, FieldDiagnostics) {
    try {
        recurrence_from_json(parse_json_text(R"({"coeffs": ["1", "x"], "initial": ["0", "1"]})"));
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("recurrence.coeffs[1]"), std::string::npos) << e.what();
    }
    EXPECT_THROW(recurrence_from_json(parse_json_text(R"({"coeffs": ["1", "1"]})")), ParseError);
    EXPECT_THROW(recurrence_from_json(parse_json_text(R"({"coeffs": ["1", "0"], "initial": ["0", "1"]})")), ParseError);
    try {
        parse_json_text("{\n  \"coeffs\": [1,\n  }");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
}

TEST(JsonSolution, RoundTrip) {
    APSolution s{0, 1, 3, Rational(0), Rational(1), Rational(2)};
    Json j = to_json(s);
    EXPECT_EQ(j.dump(), R"({"mean":1,"outer":[0,3],"values":["0","1","2"]})");
    auto back = solution_from_json(j);
    EXPECT_EQ(back, s);
    EXPECT_EQ(back.fk, Rational(2));
}

TEST(JsonFamily, RoundTripAllKinds) {
    std::vector<AnyFamily> fams{ShiftFamily{TrinomialVariant::MeanLow, 4, 2},
                                SymmetricFamily{2, 2, 1, 1, MeanSlot::K},
                                ExceptionalFamily{-1, 3, Rational(Integer(-2), Integer(3))},
                                AffineFamily{{2, -1}, {2, 0}, {0, 1}, "unitary"}};
    for (const auto& f : fams) EXPECT_EQ(to_json(family_from_json(to_json(f))), to_json(f));
    EXPECT_THROW(family_from_json(Json{{"kind", "spiral"}}), ParseError);
    EXPECT_THROW(family_from_json(Json{{"kind", "symmetric"}, {"M", 2}, {"a", 1}, {"b", 0}, {"c", 0}, {"mean", "q"}}),
                 ParseError);
}
