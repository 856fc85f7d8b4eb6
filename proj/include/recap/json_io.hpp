#pragma once

// JSON encodings. Rationals travel as strings ("-3/4") so nothing is rounded;
// integers are also accepted on input.

#include <json.hpp>

#include <string>
#include <vector>

#include "recap/ap_engine.hpp"
#include "recap/errors.hpp"
#include "recap/factor.hpp"
#include "recap/recurrence.hpp"
#include "recap/trinomial.hpp"

namespace recap {

using Json = nlohmann::json;

namespace detail {

[[noreturn]] inline void bad_field(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

inline const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) bad_field(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) bad_field(where, std::string("missing field \"") + key + "\"");
    return *it;
}

inline std::int64_t int_field(const Json& j, const char* key, const std::string& where) {
    const Json& v = field(j, key, where);
    if (!v.is_number_integer()) bad_field(where + "." + key, "expected an integer");
    return v.get<std::int64_t>();
}

}  // namespace detail

/// Parse JSON text; syntax errors become ParseError with line and column.
inline Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError("invalid JSON at line " + std::to_string(line) + ", column " + std::to_string(col));
    }
}

inline Json to_json(const Rational& r) { return r.to_string(); }

inline Rational rational_from_json(const Json& j, const std::string& where = "value") {
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const Error& e) {
            detail::bad_field(where, e.what());
        }
    }
    if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<std::int64_t>()));
    detail::bad_field(where, "expected a rational as a string (\"p/q\") or an integer");
}

inline Json rationals_to_json(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

inline std::vector<Rational> rationals_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) detail::bad_field(where, "expected an array");
    std::vector<Rational> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

inline Json to_json(const Polynomial& p) { return Json{{"coeffs", rationals_to_json(p.coeffs())}}; }

inline Polynomial polynomial_from_json(const Json& j, const std::string& where = "polynomial") {
    return Polynomial(rationals_from_json(detail::field(j, "coeffs", where), where + ".coeffs"));
}

inline Json to_json(const LinearRecurrence& r) {
    return Json{{"coeffs", rationals_to_json(r.coeffs())}, {"initial", rationals_to_json(r.initial())}};
}

inline LinearRecurrence recurrence_from_json(const Json& j, const std::string& where = "recurrence") {
    auto c = rationals_from_json(detail::field(j, "coeffs", where), where + ".coeffs");
    auto i = rationals_from_json(detail::field(j, "initial", where), where + ".initial");
    try {
        return LinearRecurrence(std::move(c), std::move(i));
    } catch (const PreconditionError& e) {
        detail::bad_field(where, e.what());
    }
}

/// values are listed as [f at outer[0], f at mean, f at outer[1]].
inline Json to_json(const APSolution& s) {
    return Json{{"mean", s.n}, {"outer", {s.m, s.k}}, {"values", {to_json(s.fm), to_json(s.fn), to_json(s.fk)}}};
}

inline APSolution solution_from_json(const Json& j, const std::string& where = "solution") {
    APSolution s;
    s.n = detail::int_field(j, "mean", where);
    const Json& outer = detail::field(j, "outer", where);
    if (!outer.is_array() || outer.size() != 2 || !outer[0].is_number_integer() || !outer[1].is_number_integer())
        detail::bad_field(where + ".outer", "expected two integers");
    s.m = outer[0].get<std::int64_t>();
    s.k = outer[1].get<std::int64_t>();
    auto v = rationals_from_json(detail::field(j, "values", where), where + ".values");
    if (v.size() != 3) detail::bad_field(where + ".values", "expected three values");
    s.fm = v[0];
    s.fn = v[1];
    s.fk = v[2];
    return s;
}

inline Json to_json(const AP4Solution& s) {
    Json v = Json::array();
    for (const auto& x : s.values) v.push_back(to_json(x));
    return Json{{"indices", s.idx}, {"values", v}};
}

inline Json to_json(const ShiftFamily& f) {
    return Json{{"kind", "shift"}, {"variant", to_string(f.variant)}, {"a", f.a}, {"b", f.b}};
}

inline Json to_json(const SymmetricFamily& f) {
    return Json{{"kind", "symmetric"}, {"M", f.M}, {"a", f.a}, {"b", f.b}, {"c", f.c}, {"mean", to_string(f.ordering)}};
}

inline Json to_json(const ExceptionalFamily& f) {
    return Json{{"kind", "exceptional"}, {"K", f.K}, {"gamma", f.gamma}, {"R", to_json(f.R)}};
}

inline Json to_json(const AffineFamily& f) {
    auto map = [](const AffineFamily::Map& m) { return Json{m.slope, m.offset}; };
    return Json{{"kind", "declared"}, {"label", f.label}, {"mean", map(f.mean)}, {"outer", {map(f.outer1), map(f.outer2)}}};
}

inline Json to_json(const AnyFamily& f) {
    return std::visit([](const auto& x) { return to_json(x); }, f);
}

inline AnyFamily family_from_json(const Json& j, const std::string& where = "family") {
    const Json& kind = detail::field(j, "kind", where);
    if (!kind.is_string()) detail::bad_field(where + ".kind", "expected a string");
    const auto k = kind.get<std::string>();
    if (k == "shift") {
        const Json& v = detail::field(j, "variant", where);
        if (!v.is_string()) detail::bad_field(where + ".variant", "expected a string");
        return ShiftFamily{parse_variant(v.get<std::string>()), detail::int_field(j, "a", where),
                           detail::int_field(j, "b", where)};
    }
    if (k == "symmetric") {
        const Json& m = detail::field(j, "mean", where);
        std::string slot = m.is_string() ? m.get<std::string>() : "";
        MeanSlot s = slot == "m" ? MeanSlot::M : slot == "n" ? MeanSlot::N : MeanSlot::K;
        if (slot != "m" && slot != "n" && slot != "k") detail::bad_field(where + ".mean", "expected \"m\", \"n\" or \"k\"");
        return SymmetricFamily{detail::int_field(j, "M", where), detail::int_field(j, "a", where),
                               detail::int_field(j, "b", where), detail::int_field(j, "c", where), s};
    }
    if (k == "exceptional")
        return ExceptionalFamily{static_cast<int>(detail::int_field(j, "K", where)), detail::int_field(j, "gamma", where),
                                 rational_from_json(detail::field(j, "R", where), where + ".R")};
    if (k == "declared") {
        auto map = [&](const Json& m, const std::string& w) {
            if (!m.is_array() || m.size() != 2 || !m[0].is_number_integer() || !m[1].is_number_integer())
                detail::bad_field(w, "expected [slope, offset]");
            return AffineFamily::Map{m[0].get<std::int64_t>(), m[1].get<std::int64_t>()};
        };
        const Json& outer = detail::field(j, "outer", where);
        if (!outer.is_array() || outer.size() != 2) detail::bad_field(where + ".outer", "expected two maps");
        std::string label = j.contains("label") && j["label"].is_string() ? j["label"].get<std::string>() : "declared";
        return AffineFamily{map(detail::field(j, "mean", where), where + ".mean"), map(outer[0], where + ".outer[0]"),
                            map(outer[1], where + ".outer[1]"), label};
    }
    detail::bad_field(where + ".kind", "unknown family kind \"" + k + "\"");
}

inline Json to_json(const StructureReport& r) {
    Json j{{"minimal_order", r.minimal_order},
           {"is_simple", r.is_simple},
           {"is_degenerate", r.is_degenerate},
           {"is_unitary", r.is_unitary},
           {"symmetric", r.symmetric ? Json{{"M", r.symmetric->M}} : Json(nullptr)},
           {"symmetric_determined", r.symmetric_determined},
           {"integer_defined", r.integer_defined},
           {"integer_window_verified", r.integer_window_verified}};
    if (r.exceptional)
        j["exceptional"] = {{"N", r.exceptional->N}, {"K", r.exceptional->K}, {"gamma", to_json(r.exceptional->gamma)},
                            {"R", to_json(r.exceptional->R)}};
    else
        j["exceptional"] = nullptr;
    return j;
}

inline Json to_json(const VerificationReport& r) {
    Json v = Json::array();
    for (const auto& x : r.violations) v.push_back({{"param", x.param}, {"indices", x.indices}, {"detail", x.detail}});
    return Json{{"checked", r.checked}, {"ok", r.ok()}, {"holds_for_all", r.holds_for_all}, {"violations", v}};
}

inline Json to_json(const TrinomialFactorization& f) {
    Json fs = Json::array();
    for (const auto& g : f.noncyclotomic_factors) fs.push_back(g.to_string());
    return Json{{"input", build_trinomial(f.variant, f.a, f.b).to_string()},
                {"variant", to_string(f.variant)},
                {"a", f.a},
                {"b", f.b},
                {"cofactor", f.cyclotomic_cofactor.to_string()},
                {"factors", fs},
                {"exception", f.is_schinzel_exception},
                {"certified", f.certified}};
}

inline Json to_json(const FactorSearchReport& r, const Polynomial& input) {
    Json fs = Json::array();
    for (const auto& f : r.factors) fs.push_back({{"poly", f.poly.to_string()}, {"multiplicity", f.multiplicity}});
    return Json{{"input", input.to_string()},
                {"factors", fs},
                {"unresolved", r.unresolved.to_string()},
                {"certified", r.complete},
                {"precision_bits", r.precision_bits},
                {"escalations", r.escalations}};
}

}  // namespace recap
