#pragma once

// Exact resultants of univariate polynomials, and the two derived polynomials
// whose roots are the pairwise ratios / products of the roots of p.

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "recap/errors.hpp"
#include "recap/poly.hpp"

namespace recap {

/// Determinant by Gaussian elimination over Q.
inline Rational determinant(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rational inv = m[col][col].inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            Rational f = m[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

/// Sylvester resultant for formal degrees (dp, dq); coefficient lists are
/// ascending and may have trailing zeros up to the formal degree.
inline Rational sylvester_resultant(const std::vector<Rational>& p, std::size_t dp,
                                    const std::vector<Rational>& q, std::size_t dq) {
    const std::size_t n = dp + dq;
    if (n == 0) return Rational(1);
    auto at = [](const std::vector<Rational>& v, std::size_t i) { return i < v.size() ? v[i] : Rational(0); };
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t r = 0; r < dq; ++r)
        for (std::size_t j = 0; j <= dp; ++j) m[r][r + j] = at(p, dp - j);
    for (std::size_t r = 0; r < dp; ++r)
        for (std::size_t j = 0; j <= dq; ++j) m[dq + r][r + j] = at(q, dq - j);
    return determinant(std::move(m));
}

inline Rational resultant(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return Rational(0);
    return sylvester_resultant(p.coeffs(), static_cast<std::size_t>(p.degree()), q.coeffs(),
                               static_cast<std::size_t>(q.degree()));
}

/// Newton interpolation through (xs[i], ys[i]) with distinct xs.
inline Polynomial interpolate(const std::vector<Rational>& xs, std::vector<Rational> ys) {
    const std::size_t n = xs.size();
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    Polynomial acc(ys.empty() ? Rational(0) : ys[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) acc = acc * Polynomial({0, 1}) - acc * Polynomial(xs[i]) + Polynomial(ys[i]);
    return acc;
}

namespace detail {

// Res_Y(p(Y), g_x(Y)) as a polynomial in x of degree <= d^2, where g_x has
// formal Y-degree d and coefficients polynomial in x.
inline Polynomial resultant_in_x(const Polynomial& p,
                                 const std::function<std::vector<Rational>(const Rational&)>& g_at) {
    const auto d = static_cast<std::size_t>(p.degree());
    const std::size_t pts = d * d + 1;
    std::vector<Rational> xs, ys;
    xs.reserve(pts);
    ys.reserve(pts);
    for (std::size_t i = 0; i < pts; ++i) {
        Rational x(static_cast<long>(i) + 1);
        xs.push_back(x);
        ys.push_back(sylvester_resultant(p.coeffs(), d, g_at(x), d));
    }
    return interpolate(xs, std::move(ys));
}

inline void check_ratio_input(const Polynomial& p) {
    if (p.degree() < 1) throw PreconditionError("ratio/product polynomial needs degree >= 1");
    if (p.coeff(0).is_zero()) throw PreconditionError("ratio/product polynomial needs p(0) != 0");
}

}  // namespace detail

/// Res_Y(p(Y), p(XY)): degree d^2, roots alpha_i / alpha_j over ordered pairs.
/// Returned primitive.
inline Polynomial ratio_polynomial(const Polynomial& p) {
    detail::check_ratio_input(p);
    auto g = [&](const Rational& x) {
        std::vector<Rational> c(p.coeffs().size());
        Rational xp(1);
        for (std::size_t i = 0; i < c.size(); ++i, xp *= x) c[i] = p.coeffs()[i] * xp;
        return c;
    };
    return primitive_part(detail::resultant_in_x(p, g));
}

/// Res_Y(p(Y), Y^d p(X/Y)): degree d^2, roots alpha_i * alpha_j over ordered pairs.
/// Returned primitive.
inline Polynomial product_polynomial(const Polynomial& p) {
    detail::check_ratio_input(p);
    const auto d = static_cast<std::size_t>(p.degree());
    auto g = [&](const Rational& x) {
        std::vector<Rational> c(d + 1);
        Rational xp(1);
        for (std::size_t i = 0; i <= d; ++i, xp *= x) c[d - i] = p.coeff(i) * xp;
        return c;
    };
    return primitive_part(detail::resultant_in_x(p, g));
}

}  // namespace recap
