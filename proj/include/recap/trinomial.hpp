#pragma once

// The three trinomial shapes X^a - 2X^b + 1, X^a + X^b - 2, 2X^a - X^b - 1
// and their factorizations.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "recap/errors.hpp"
#include "recap/factor.hpp"
#include "recap/poly.hpp"

namespace recap {

/// Which index offset carries the middle term of the progression.
enum class TrinomialVariant { MeanHigh, MeanMid, MeanLow };

inline std::string to_string(TrinomialVariant v) {
    switch (v) {
        case TrinomialVariant::MeanHigh: return "high";
        case TrinomialVariant::MeanMid: return "mid";
        case TrinomialVariant::MeanLow: return "low";
    }
    return "?";
}

inline TrinomialVariant parse_variant(const std::string& s) {
    if (s == "high" || s == "MeanHigh") return TrinomialVariant::MeanHigh;
    if (s == "mid" || s == "MeanMid") return TrinomialVariant::MeanMid;
    if (s == "low" || s == "MeanLow") return TrinomialVariant::MeanLow;
    throw ParseError("unknown trinomial variant '" + s + "' (expected high, mid or low)");
}

inline constexpr int kDefaultLemmaDegreeBound = 16;

/// MeanHigh: 2X^a - X^b - 1, MeanMid: X^a - 2X^b + 1, MeanLow: X^a + X^b - 2.
inline Polynomial build_trinomial(TrinomialVariant v, std::int64_t a, std::int64_t b) {
    if (!(a > b && b > 0))
        throw DomainError("trinomial needs a > b > 0, got a=" + std::to_string(a) + ", b=" + std::to_string(b));
    std::vector<Rational> c(static_cast<std::size_t>(a) + 1);
    auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
    switch (v) {
        case TrinomialVariant::MeanHigh: c[ua] = 2; c[ub] = -1; c[0] = -1; break;
        case TrinomialVariant::MeanMid: c[ua] = 1; c[ub] = -2; c[0] = 1; break;
        case TrinomialVariant::MeanLow: c[ua] = 1; c[ub] = 1; c[0] = -2; break;
    }
    return Polynomial(std::move(c));
}

struct TrinomialFactorization {
    TrinomialVariant variant = TrinomialVariant::MeanMid;
    std::int64_t a = 0;
    std::int64_t b = 0;
    Polynomial cyclotomic_cofactor;
    std::vector<Polynomial> noncyclotomic_factors;  // irreducible, sorted, repeated by multiplicity
    bool is_schinzel_exception = false;
    bool certified = false;  // factor list proven complete by exact search
};

inline bool is_schinzel_exception(std::int64_t n, std::int64_t m) {
    if (n <= 0 || n % 7 != 0) return false;
    std::int64_t k = n / 7;
    return m == 2 * k || m == 5 * k;
}

namespace detail {

inline Polynomial sparse(std::initializer_list<std::pair<std::int64_t, long>> terms) {
    Polynomial p;
    for (auto [e, c] : terms) p += Polynomial::monomial(Rational(c), static_cast<std::size_t>(e));
    return p;
}

// Exception pairs as they come out of exact factorization.
inline std::vector<Polynomial> exception_pair(std::int64_t n, std::int64_t m) {
    std::int64_t k = n / 7;
    if (m == 2 * k) return {sparse({{3 * k, 1}, {k, 1}, {0, 1}}), sparse({{3 * k, 1}, {2 * k, 1}, {0, -1}})};
    return {sparse({{3 * k, 1}, {k, -1}, {0, -1}}), sparse({{3 * k, 1}, {2 * k, 1}, {0, 1}})};
}

inline TrinomialFactorization factor_trinomial(TrinomialVariant v, std::int64_t a, std::int64_t b,
                                               int degree_bound) {
    TrinomialFactorization out;
    out.variant = v;
    out.a = a;
    out.b = b;
    Polynomial t = build_trinomial(v, a, b);
    out.is_schinzel_exception = v == TrinomialVariant::MeanMid && is_schinzel_exception(a, b);
    auto split = cyclotomic_part(t);
    out.cyclotomic_cofactor = split.cyclotomic;
    Polynomial rest = split.rest;
    if (rest.degree() < 1) {
        out.cyclotomic_cofactor = out.cyclotomic_cofactor * rest;
        out.certified = true;
        return out;
    }
    // keep the cofactor monic and the factors primitive with positive lead
    Polynomial prim = primitive_part(rest);
    out.cyclotomic_cofactor = out.cyclotomic_cofactor * Polynomial(rest.lead() / prim.lead());
    if (a <= degree_bound) {
        auto rep = factor_search(prim, prim.degree());
        for (auto& f : rep.factors)
            for (int i = 0; i < f.multiplicity; ++i) out.noncyclotomic_factors.push_back(f.poly);
        out.certified = rep.complete;
        if (!rep.complete) out.noncyclotomic_factors.push_back(rep.unresolved);
    } else if (out.is_schinzel_exception) {
        auto pair = exception_pair(a, b);
        Polynomial q = exact_quotient(prim, pair[0] * pair[1]);
        out.noncyclotomic_factors = pair;
        if (q.degree() >= 1) out.noncyclotomic_factors.push_back(primitive_part(q));
        std::sort(out.noncyclotomic_factors.begin(), out.noncyclotomic_factors.end(), poly_less);
    } else {
        out.noncyclotomic_factors.push_back(prim);
    }
    return out;
}

}  // namespace detail

/// Factorization of X^n - 2X^m + 1. Within the degree bound the noncyclotomic
/// factors come from a complete exact search (certified); beyond it the
/// irreducibility of the noncyclotomic part is taken from the lemma.
inline TrinomialFactorization schinzel_factorization(std::int64_t n, std::int64_t m,
                                                     int degree_bound = kDefaultLemmaDegreeBound) {
    return detail::factor_trinomial(TrinomialVariant::MeanMid, n, m, degree_bound);
}

/// Factorization of X^n + X^m - 2, same certification policy.
inline TrinomialFactorization plus2_factorization(std::int64_t n, std::int64_t m,
                                                  int degree_bound = kDefaultLemmaDegreeBound) {
    return detail::factor_trinomial(TrinomialVariant::MeanLow, n, m, degree_bound);
}

inline TrinomialFactorization factor_variant(TrinomialVariant v, std::int64_t a, std::int64_t b,
                                             int degree_bound = kDefaultLemmaDegreeBound) {
    return detail::factor_trinomial(v, a, b, degree_bound);
}

/// (X^n + X^m - 2) / (X^gcd(n,m) - 1), stripped of remaining cyclotomic content.
inline Polynomial plus2_noncyclotomic(std::int64_t n, std::int64_t m) {
    Polynomial t = build_trinomial(TrinomialVariant::MeanLow, n, m);
    auto g = static_cast<std::size_t>(std::gcd(n, m));
    Polynomial q = exact_quotient(t, Polynomial::monomial(1, g) - Polynomial::one());
    return primitive_part(cyclotomic_part(q).rest);
}

/// The exception pairs in their originally stated form. They do not multiply
/// back; the reproduction suite reports that.
inline std::vector<Polynomial> published_schinzel_pair(std::int64_t n, std::int64_t m) {
    if (!is_schinzel_exception(n, m)) throw DomainError("not a Schinzel exception");
    std::int64_t k = n / 7;
    using detail::sparse;
    if (m == 2 * k) return {sparse({{3 * k, 1}, {2 * k, 1}, {0, 1}}), sparse({{3 * k, 1}, {k, -1}, {0, -1}})};
    return {sparse({{3 * k, 1}, {2 * k, 1}, {0, -1}}), sparse({{3 * k, 1}, {k, 1}, {0, -1}})};
}

struct TrinomialMatch {
    TrinomialVariant variant;
    std::int64_t a;
    std::int64_t b;
    friend bool operator==(const TrinomialMatch&, const TrinomialMatch&) = default;
};

/// All (variant, a, b), max_a >= a > b > 0, whose trinomial the primitive part
/// of p divides. Sorted by (a, b, variant).
inline std::vector<TrinomialMatch> trinomial_multiples(const Polynomial& p, std::int64_t max_a) {
    if (p.is_zero()) throw PreconditionError("trinomial_multiples needs p != 0");
    if (p.coeff(0).is_zero()) throw PreconditionError("trinomial_multiples needs p(0) != 0");
    if (max_a < 2) throw PreconditionError("trinomial_multiples needs max_a >= 2");
    std::vector<TrinomialMatch> out;
    Polynomial q = primitive_part(p);
    if (q.degree() < 1) return out;
    // residues X^k mod q; a trinomial is divisible iff its residue combination vanishes
    std::vector<Polynomial> r;
    r.reserve(static_cast<std::size_t>(max_a) + 1);
    r.push_back(poly_divrem(Polynomial::one(), q).second);
    for (std::int64_t k = 1; k <= max_a; ++k) r.push_back(poly_divrem(r.back() * Polynomial::x(), q).second);
    const Polynomial& one = r[0];
    for (std::int64_t a = 2; a <= max_a; ++a)
        for (std::int64_t b = 1; b < a; ++b) {
            const auto& ra = r[static_cast<std::size_t>(a)];
            const auto& rb = r[static_cast<std::size_t>(b)];
            Polynomial two_a = ra + ra, two_b = rb + rb, two = one + one;
            if ((two_a - rb - one).is_zero()) out.push_back({TrinomialVariant::MeanHigh, a, b});
            if ((ra - two_b + one).is_zero()) out.push_back({TrinomialVariant::MeanMid, a, b});
            if ((ra + rb - two).is_zero()) out.push_back({TrinomialVariant::MeanLow, a, b});
        }
    return out;
}

struct LemmaSweepEntry {
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::size_t noncyclotomic_count = 0;
    bool certified = false;
    bool exception = false;
};

/// Factorizations of every X^n - 2X^m + 1 (MeanMid) or X^n + X^m - 2 (MeanLow)
/// with 0 < m < n <= bound.
inline std::vector<LemmaSweepEntry> lemma_sweep(TrinomialVariant v, int bound) {
    std::vector<LemmaSweepEntry> out;
    for (std::int64_t n = 2; n <= bound; ++n)
        for (std::int64_t m = 1; m < n; ++m) {
            auto f = detail::factor_trinomial(v, n, m, bound);
            out.push_back({n, m, f.noncyclotomic_factors.size(), f.certified, f.is_schinzel_exception});
        }
    return out;
}

}  // namespace recap
