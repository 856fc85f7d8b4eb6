#pragma once

// Simultaneous (Aberth-Ehrlich) root approximation. Numerics only propose;
// every downstream decision is re-checked in exact arithmetic.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "recap/errors.hpp"
#include "recap/poly.hpp"

namespace recap {

namespace mp = boost::multiprecision;

// Precision ladder: 64-bit mantissa, then doubling.
using Float64 = long double;
using Float128 = mp::number<mp::cpp_bin_float<128, mp::digit_base_2>, mp::et_off>;
using Float256 = mp::number<mp::cpp_bin_float<256, mp::digit_base_2>, mp::et_off>;
using Float512 = mp::number<mp::cpp_bin_float<512, mp::digit_base_2>, mp::et_off>;
using Float1024 = mp::number<mp::cpp_bin_float<1024, mp::digit_base_2>, mp::et_off>;

/// Minimal complex type usable with both builtin and multiprecision reals.
template <class Real>
struct Complex {
    Real re{0};
    Real im{0};

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Real den = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
    }
    Real norm2() const { return re * re + im * im; }
    Real abs() const {
        using std::sqrt;
        return sqrt(norm2());
    }
};

template <class Real>
Real real_from_rational(const Rational& r) {
    if constexpr (std::is_floating_point_v<Real>) {
        return std::stold(r.num().get_str()) / std::stold(r.den().get_str());
    } else {
        return Real(r.num().get_str()) / Real(r.den().get_str());
    }
}

template <class Real>
Real real_eps() {
    return std::numeric_limits<Real>::epsilon();
}

/// Thrown when refinement stalls; carries the best iterate in double precision.
class RootNonConvergence : public NumericError {
public:
    RootNonConvergence(const std::string& what, std::vector<std::complex<double>> best)
        : NumericError(what), best_(std::move(best)) {}
    const std::vector<std::complex<double>>& best_iterate() const { return best_; }

private:
    std::vector<std::complex<double>> best_;
};

namespace detail {

template <class Real>
std::vector<std::complex<double>> to_double(const std::vector<Complex<Real>>& z) {
    std::vector<std::complex<double>> out;
    out.reserve(z.size());
    for (const auto& v : z) out.emplace_back(static_cast<double>(v.re), static_cast<double>(v.im));
    return out;
}

}  // namespace detail

/// Aberth iteration on a polynomial given by ascending Real coefficients.
/// `seed`, when the right size, replaces the default circle start.
template <class Real>
std::vector<Complex<Real>> aberth(const std::vector<Real>& coeffs, const std::vector<Complex<Real>>& seed = {},
                                  int max_iter = 4000) {
    using std::abs;
    using std::pow;
    using std::sqrt;
    const std::size_t n = coeffs.size() - 1;
    if (coeffs.size() < 2) throw PreconditionError("root finding needs degree >= 1");
    std::vector<Real> a(coeffs.size());
    for (std::size_t i = 0; i <= n; ++i) a[i] = coeffs[i] / coeffs[n];

    std::vector<Complex<Real>> z;
    if (seed.size() == n) {
        z = seed;
    } else {
        // Fujiwara-style radius, then points on a slightly rotated circle.
        long double radius = 0;
        for (std::size_t i = 0; i < n; ++i) {
            long double ai = std::fabs(static_cast<long double>(a[i]));
            if (ai == 0) continue;
            radius = std::max(radius, std::pow(ai, 1.0L / static_cast<long double>(n - i)));
        }
        radius = std::max(radius, 0.5L);
        const long double two_pi = 6.283185307179586476925286766559L;
        z.resize(n);
        for (std::size_t k = 0; k < n; ++k) {
            long double ang = two_pi * static_cast<long double>(k) / static_cast<long double>(n) + 0.4L;
            z[k] = {Real(radius * std::cos(ang)), Real(radius * std::sin(ang))};
        }
    }

    const Real eps = real_eps<Real>();
    auto horner = [&](const Complex<Real>& x, Complex<Real>& p, Complex<Real>& dp, Real& scale) {
        p = {a[n], Real(0)};
        dp = {Real(0), Real(0)};
        scale = abs(a[n]);
        Real ax = x.abs();
        for (std::size_t i = n; i-- > 0;) {
            dp = dp * x + p;
            p = p * x + Complex<Real>{a[i], Real(0)};
            scale = scale * ax + abs(a[i]);
        }
    };

    std::vector<bool> done(n, false);
    for (int iter = 0; iter < max_iter; ++iter) {
        bool all_done = true;
        for (std::size_t k = 0; k < n; ++k) {
            if (done[k]) continue;
            Complex<Real> p, dp;
            Real scale;
            horner(z[k], p, dp, scale);
            // Backward-error stop: the residual is at rounding level.
            if (p.abs() <= Real(8 * n) * eps * scale) {
                done[k] = true;
                continue;
            }
            all_done = false;
            Complex<Real> ratio = p / dp;
            Complex<Real> sum{Real(0), Real(0)};
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) sum = sum + Complex<Real>{Real(1), Real(0)} / (z[k] - z[j]);
            Complex<Real> denom = Complex<Real>{Real(1), Real(0)} - ratio * sum;
            Complex<Real> w = denom.norm2() == 0 ? ratio : ratio / denom;
            z[k] = z[k] - w;
            if (w.abs() <= eps * (Real(1) + z[k].abs())) done[k] = true;
        }
        if (all_done) return z;
        // a root marked done may drift when neighbours move; re-check next sweep
        if (iter % 16 == 15) std::fill(done.begin(), done.end(), false);
    }
    throw RootNonConvergence("root refinement did not converge in " + std::to_string(max_iter) + " iterations",
                             detail::to_double(z));
}

template <class Real>
std::vector<Real> real_coeffs(const Polynomial& p) {
    std::vector<Real> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.push_back(real_from_rational<Real>(v));
    return c;
}

/// All deg(p) complex roots with multiplicity. Each root satisfies the
/// backward-error bound |p(r)| <= tol * sum |c_i| |r|^i (tol defaults to a
/// small multiple of the long double epsilon). Clustered multiple roots are
/// accurate only to about eps^(1/multiplicity).
inline std::vector<std::complex<double>> complex_roots(const Polynomial& p, double tol = 0) {
    if (p.degree() < 1) throw PreconditionError("complex_roots requires degree >= 1");
    auto z = aberth<Float64>(real_coeffs<Float64>(p));
    auto out = detail::to_double(z);
    if (tol > 0) {
        for (const auto& r : out) {
            std::complex<double> v = 0;
            double scale = 0;
            for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
                v = v * r + it->to_double();
                scale = scale * std::abs(r) + std::fabs(it->to_double());
            }
            if (std::abs(v) > tol * scale)
                throw RootNonConvergence("root residual above tolerance", out);
        }
    }
    return out;
}

}  // namespace recap
