#pragma once

// Low-degree integer factor search: numeric roots propose candidate factors,
// exact division decides. Precision escalates when a candidate's coefficients
// cannot be pinned to a single integer lattice point.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "recap/errors.hpp"
#include "recap/poly.hpp"
#include "recap/roots.hpp"

namespace recap {

struct IntegerFactor {
    Polynomial poly;  // irreducible, primitive, positive leading coefficient
    int multiplicity = 1;
};

struct FactorSearchReport {
    std::vector<IntegerFactor> factors;  // irreducible factors determined, sorted by poly_less
    Polynomial unresolved;               // leftover with no factor of degree <= max_deg (1 if none)
    bool complete = false;               // factors^multiplicity reconstruct the primitive input
    int precision_bits = 64;
    int escalations = 0;
};

inline constexpr int kMaxPrecisionEscalations = 4;

namespace detail {

struct AmbiguousRounding {};

inline std::vector<Integer> positive_divisors(Integer n) {
    if (n < 0) n = -n;
    std::vector<Integer> out;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        if (d * d != n) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

template <class Real>
Real integer_to_real(const Integer& v) {
    if constexpr (std::is_floating_point_v<Real>) return std::stold(v.get_str());
    else return Real(v.get_str());
}

template <class Real>
Integer real_to_integer(const Real& r) {
    if constexpr (std::is_floating_point_v<Real>) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "%.0Lf", static_cast<long double>(r));
        return Integer(buf);
    } else {
        std::string s = r.str(0, std::ios_base::fixed);
        auto dot = s.find('.');
        if (dot != std::string::npos) s.erase(dot);
        if (s == "-0") s = "0";
        return Integer(s);
    }
}

template <class Real>
struct RootUnit {
    int size = 1;  // 1: real root, 2: conjugate pair
    Real re{0};
    Real im{0};
    Real err{0};
};

template <class Real>
std::vector<Real> mul_real(const std::vector<Real>& p, const std::vector<Real>& f) {
    std::vector<Real> out(p.size() + f.size() - 1, Real(0));
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < f.size(); ++j) out[i + j] += p[i] * f[j];
    return out;
}

// Numeric roots of q grouped into real roots and conjugate pairs, each with a
// forward error estimate derived from its Newton correction.
template <class Real>
std::vector<RootUnit<Real>> root_units(const Polynomial& q) {
    using std::abs;
    const auto n = static_cast<std::size_t>(q.degree());
    auto coeffs = real_coeffs<Real>(q);
    std::vector<Complex<Real>> z;
    try {
        z = aberth<Real>(coeffs);
    } catch (const RootNonConvergence&) {
        throw AmbiguousRounding{};
    }
    const Real lead = coeffs.back();
    for (auto& c : coeffs) c = c / lead;
    const Real eps = real_eps<Real>();

    std::vector<Real> err(n);
    for (std::size_t k = 0; k < n; ++k) {
        Complex<Real> p{coeffs[n], Real(0)}, dp{Real(0), Real(0)};
        Real scale = abs(coeffs[n]);
        Real ax = z[k].abs();
        for (std::size_t i = n; i-- > 0;) {
            dp = dp * z[k] + p;
            p = p * z[k] + Complex<Real>{coeffs[i], Real(0)};
            scale = scale * ax + abs(coeffs[i]);
        }
        Real dpa = dp.abs();
        if (dpa == 0) throw AmbiguousRounding{};
        err[k] = Real(4 * n) * (p.abs() + Real(2 * n) * eps * scale) / dpa;
    }

    std::vector<RootUnit<Real>> units;
    std::vector<bool> used(n, false);
    for (std::size_t k = 0; k < n; ++k) {
        if (used[k]) continue;
        used[k] = true;
        if (abs(z[k].im) <= err[k]) {
            units.push_back({1, z[k].re, Real(0), err[k]});
            continue;
        }
        std::size_t best = n;
        Real best_d{0};
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j]) continue;
            Real dd = (Complex<Real>{z[j].re, -z[j].im} - z[k]).abs();
            if (best == n || dd < best_d) {
                best = j;
                best_d = dd;
            }
        }
        if (best == n || best_d > Real(2) * (err[k] + err[best])) throw AmbiguousRounding{};
        used[best] = true;
        units.push_back({2, z[k].re, abs(z[k].im), std::max(err[k], err[best])});
    }
    return units;
}

// One pass at a fixed precision. Certified factors are appended to `found`
// and divided out of q; throws AmbiguousRounding if this precision cannot decide.
template <class Real>
void search_at_precision(Polynomial& q, int max_deg, std::vector<Polynomial>& found) {
    using std::abs;
    using std::round;
    using std::sqrt;
    if (q.degree() < 2) return;
    auto units = root_units<Real>(q);
    const Real eps = real_eps<Real>();
    const auto lead_divs = positive_divisors(q.lead().num());

    std::vector<std::size_t> pick;
    // Rounds the candidate built from `pick` for every admissible leading coefficient.
    auto evaluate = [&](int d) -> bool {
        std::vector<Real> c{Real(1)}, lo{Real(1)}, hi{Real(1)};
        for (std::size_t idx : pick) {
            const auto& u = units[idx];
            if (u.size == 1) {
                c = mul_real(c, {-u.re, Real(1)});
                lo = mul_real(lo, {abs(u.re), Real(1)});
                hi = mul_real(hi, {abs(u.re) + u.err, Real(1)});
            } else {
                Real m2 = u.re * u.re + u.im * u.im;
                Real r = sqrt(m2) + u.err;
                c = mul_real(c, {m2, Real(-2) * u.re, Real(1)});
                lo = mul_real(lo, {m2, Real(2) * abs(u.re), Real(1)});
                hi = mul_real(hi, {r * r, Real(2) * (abs(u.re) + u.err), Real(1)});
            }
        }
        Real spread{0}, magnitude{0};
        for (std::size_t i = 0; i < c.size(); ++i) {
            spread += hi[i] - lo[i];
            magnitude += lo[i];
        }
        const Integer q0 = q.coeff(0).num();
        for (const auto& ell : lead_divs) {
            Real s = integer_to_real<Real>(ell);
            Real radius = s * (spread + Real(16 * (d + 1)) * eps * magnitude);
            if (radius >= Real(0.5)) throw AmbiguousRounding{};
            std::vector<Rational> ints(c.size());
            bool ok = true;
            for (std::size_t i = 0; i < c.size() && ok; ++i) {
                Real v = s * c[i];
                Real r = round(v);
                if (abs(v - r) > radius) ok = false;
                else ints[i] = Rational(real_to_integer(r));
            }
            if (!ok) continue;
            Polynomial g(std::move(ints));
            if (g.degree() != d) continue;
            Integer g0 = g.coeff(0).num();
            if (g0 == 0 || q0 % g0 != 0) continue;
            auto [quot, rem] = poly_divrem(q, g);
            if (!rem.is_zero()) continue;
            found.push_back(primitive_part(g));
            q = primitive_part(quot);
            std::vector<RootUnit<Real>> keep;
            for (std::size_t i = 0; i < units.size(); ++i)
                if (std::find(pick.begin(), pick.end(), i) == pick.end()) keep.push_back(units[i]);
            units = std::move(keep);
            return true;
        }
        return false;
    };
    std::function<bool(std::size_t, int, int)> choose = [&](std::size_t start, int remaining, int d) -> bool {
        if (remaining == 0) return evaluate(d);
        for (std::size_t i = start; i < units.size(); ++i) {
            if (units[i].size > remaining) continue;
            pick.push_back(i);
            bool got = choose(i + 1, remaining - units[i].size, d);
            pick.pop_back();
            if (got) return true;
        }
        return false;
    };
    // A factor found at the smallest possible degree is irreducible.
    for (int d = 1; d <= max_deg && 2 * d <= q.degree(); ++d)
        while (2 * d <= q.degree() && choose(0, d, d)) {
        }
}

}  // namespace detail

/// Irreducible integer factors of p, with multiplicities. Every factor of
/// degree <= max_deg is found; the leftover is certified irreducible when the
/// search covered half its degree.
inline FactorSearchReport factor_search(const Polynomial& p, int max_deg) {
    if (p.degree() < 1) throw PreconditionError("factor search needs degree >= 1");
    if (max_deg < 1) throw PreconditionError("max_deg must be positive");
    FactorSearchReport rep;
    Polynomial prim = primitive_part(p);
    std::vector<Polynomial> found;

    Polynomial q = prim;
    if (q.coeff(0).is_zero()) {
        found.push_back(Polynomial::x());
        while (q.coeff(0).is_zero()) q = exact_quotient(q, Polynomial::x());
    }
    q = squarefree_part(q);

    if (q.degree() >= 1) {
        static const int bits[] = {64, 128, 256, 512, 1024};
        for (int level = 0;; ++level) {
            try {
                switch (level) {
                    case 0: detail::search_at_precision<Float64>(q, max_deg, found); break;
                    case 1: detail::search_at_precision<Float128>(q, max_deg, found); break;
                    case 2: detail::search_at_precision<Float256>(q, max_deg, found); break;
                    case 3: detail::search_at_precision<Float512>(q, max_deg, found); break;
                    default: detail::search_at_precision<Float1024>(q, max_deg, found); break;
                }
                rep.precision_bits = bits[level];
                rep.escalations = level;
                break;
            } catch (const detail::AmbiguousRounding&) {
                if (level >= kMaxPrecisionEscalations)
                    throw NumericError("factor search: rounding still ambiguous after " +
                                       std::to_string(kMaxPrecisionEscalations) + " precision escalations");
            }
        }
        if (q.degree() >= 1) {
            // no factor of degree <= min(max_deg, deg/2) remains
            if (2 * max_deg >= q.degree()) {
                found.push_back(q);
                q = Polynomial::one();
            }
        }
    }
    rep.unresolved = q;

    std::sort(found.begin(), found.end(), poly_less);
    Polynomial rebuilt = Polynomial::one();
    for (auto& f : found) {
        IntegerFactor fac{f, 0};
        Polynomial rest = prim;
        for (;;) {
            auto [quot, rem] = poly_divrem(rest, f);
            if (!rem.is_zero()) break;
            rest = std::move(quot);
            ++fac.multiplicity;
            rebuilt = rebuilt * f;
        }
        rep.factors.push_back(std::move(fac));
    }
    rep.complete = rep.unresolved.degree() == 0 && primitive_part(rebuilt) == prim;
    return rep;
}

/// Pairwise-distinct irreducible integer factors of p with degree <= max_deg.
inline std::vector<Polynomial> integer_factors_upto(const Polynomial& p, int max_deg) {
    auto rep = factor_search(p, max_deg);
    std::vector<Polynomial> out;
    for (auto& f : rep.factors)
        if (f.poly.degree() <= max_deg) out.push_back(f.poly);
    return out;
}

/// True when the complete search proves p irreducible over Q.
inline bool certify_irreducible(const Polynomial& p) {
    if (p.degree() < 1) return false;
    auto rep = factor_search(p, p.degree());
    return rep.complete && rep.factors.size() == 1 && rep.factors[0].multiplicity == 1;
}

}  // namespace recap
