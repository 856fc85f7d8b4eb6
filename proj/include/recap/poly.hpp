#pragma once

// Dense univariate polynomials over Q.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "recap/errors.hpp"
#include "recap/exactnum.hpp"

namespace recap {

/// Coefficients in ascending order; the highest stored coefficient is nonzero.
/// The zero polynomial has no coefficients and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<long> ascending) {
        c_.reserve(ascending.size());
        for (long v : ascending) c_.emplace_back(v);
        trim();
    }
    explicit Polynomial(const Rational& constant) {
        if (!constant.is_zero()) c_.push_back(constant);
    }

    static Polynomial monomial(const Rational& coeff, std::size_t degree) {
        std::vector<Rational> c(degree + 1);
        c[degree] = coeff;
        return Polynomial(std::move(c));
    }
    static Polynomial x() { return monomial(Rational(1), 1); }
    static Polynomial one() { return Polynomial(Rational(1)); }

    static Polynomial parse(std::string_view text);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const Rational& lead() const {
        if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
        return c_.back();
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    bool has_integer_coeffs() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_integer(); });
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return *this * lead().inverse();
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Rational> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
        return Polynomial(std::move(d));
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Rational& s) {
        if (s.is_zero()) {
            c_.clear();
            return *this;
        }
        for (auto& v : c_) v *= s;
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(r));
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    std::string to_string() const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

/// Renders "2*X^3 - X^2 - 1".
inline std::string Polynomial::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        bool neg = c.sign() < 0;
        Rational mag = c.abs();
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        bool unit = mag == Rational(1);
        if (i == 0) {
            out += mag.to_string();
            continue;
        }
        if (!unit) out += mag.to_string() + "*";
        out += "X";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

/// Accepts sums of terms "c", "c*X^k", "c X^k", "X^k", "X", with c an integer or p/q.
inline Polynomial Polynomial::parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw ParseError("empty polynomial text");
    std::map<std::size_t, Rational> terms;
    std::size_t i = 0;
    auto fail = [&](const std::string& why) {
        throw ParseError("malformed polynomial '" + std::string(text) + "' at offset " +
                         std::to_string(i) + ": " + why);
    };
    auto read_digits = [&]() {
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        return s.substr(start, i - start);
    };
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;
        Rational coeff(1);
        bool have_coeff = false;
        std::string digits = read_digits();
        if (!digits.empty()) {
            have_coeff = true;
            coeff = Rational(Integer(digits));
            if (i < s.size() && s[i] == '/') {
                ++i;
                std::string den = read_digits();
                if (den.empty()) fail("missing denominator");
                coeff = Rational(Integer(digits), Integer(den));
            }
            if (i < s.size() && s[i] == '*') ++i;
        }
        std::size_t power = 0;
        if (i < s.size() && (s[i] == 'X' || s[i] == 'x')) {
            ++i;
            power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string e = read_digits();
                if (e.empty()) fail("missing exponent");
                power = static_cast<std::size_t>(std::stoul(e));
            }
        } else if (!have_coeff) {
            fail("expected a coefficient or X");
        }
        terms[power] += sign < 0 ? -coeff : coeff;
    }
    std::size_t top = terms.empty() ? 0 : terms.rbegin()->first;
    std::vector<Rational> c(top + 1);
    for (auto& [k, v] : terms) c[k] = v;
    return Polynomial(std::move(c));
}

inline Polynomial pow(const Polynomial& base, unsigned e) {
    Polynomial acc = Polynomial::one();
    Polynomial x = base;
    while (e) {
        if (e & 1U) acc *= x;
        e >>= 1U;
        if (e) x *= x;
    }
    return acc;
}

/// p(X^k).
inline Polynomial substitute_power(const Polynomial& p, std::size_t k) {
    if (p.is_zero()) return p;
    std::vector<Rational> c(static_cast<std::size_t>(p.degree()) * k + 1);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) c[i * k] = p.coeffs()[i];
    return Polynomial(std::move(c));
}

/// num = q*den + r with deg r < deg den.
inline std::pair<Polynomial, Polynomial> poly_divrem(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<Rational> r = num.coeffs();
    int dn = den.degree();
    int nn = num.degree();
    if (nn < dn) return {Polynomial{}, num};
    std::vector<Rational> q(static_cast<std::size_t>(nn - dn + 1));
    Rational inv = den.lead().inverse();
    const auto& d = den.coeffs();
    for (int k = nn - dn; k >= 0; --k) {
        Rational& top = r[static_cast<std::size_t>(k + dn)];
        if (top.is_zero()) continue;
        Rational f = top * inv;
        for (int j = 0; j <= dn; ++j) {
            if (d[static_cast<std::size_t>(j)].is_zero()) continue;
            r[static_cast<std::size_t>(k + j)] -= f * d[static_cast<std::size_t>(j)];
        }
        q[static_cast<std::size_t>(k)] = std::move(f);
    }
    r.resize(static_cast<std::size_t>(dn));
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

inline bool divides(const Polynomial& d, const Polynomial& p) {
    return poly_divrem(p, d).second.is_zero();
}

/// Quotient of an exact division; throws if the remainder is nonzero.
inline Polynomial exact_quotient(const Polynomial& num, const Polynomial& den) {
    auto [q, r] = poly_divrem(num, den);
    if (!r.is_zero())
        throw DomainError("(" + num.to_string() + ") is not divisible by (" + den.to_string() + ")");
    return q;
}

/// Monic gcd by Euclid over Q.
inline Polynomial poly_gcd(Polynomial p, Polynomial q) {
    if (p.is_zero() && q.is_zero()) throw DomainError("gcd(0, 0) is undefined");
    while (!q.is_zero()) {
        Polynomial r = poly_divrem(p, q).second;
        p = std::move(q);
        q = r.monic();
    }
    return p.monic();
}

/// X^deg(p) * p(1/X).
inline Polynomial poly_reverse(const Polynomial& p) {
    if (p.is_zero() || p.coeffs().front().is_zero())
        throw PreconditionError("reverse requires a nonzero constant term");
    std::vector<Rational> c(p.coeffs().rbegin(), p.coeffs().rend());
    return Polynomial(std::move(c));
}

/// Integer content times sign is stripped: integer coefficients, gcd 1, positive leading coefficient.
inline Polynomial primitive_part(const Polynomial& p) {
    if (p.is_zero()) return p;
    Integer den_lcm = 1;
    for (const auto& c : p.coeffs()) den_lcm = lcm(den_lcm, c.den());
    std::vector<Integer> ints;
    ints.reserve(p.coeffs().size());
    Integer g = 0;
    for (const auto& c : p.coeffs()) {
        Integer v = c.num() * (den_lcm / c.den());
        g = gcd(g, v);
        ints.push_back(std::move(v));
    }
    if (p.lead().sign() < 0) g = -g;
    std::vector<Rational> out;
    out.reserve(ints.size());
    for (auto& v : ints) out.emplace_back(Integer(v / g));
    return Polynomial(std::move(out));
}

/// p / gcd(p, p'), primitive.
inline Polynomial squarefree_part(const Polynomial& p) {
    if (p.degree() < 1) return primitive_part(p);
    return primitive_part(exact_quotient(p, poly_gcd(p, p.derivative())));
}

inline bool is_squarefree(const Polynomial& p) {
    return p.degree() < 1 || poly_gcd(p, p.derivative()).degree() == 0;
}

inline std::int64_t euler_phi(std::int64_t n) {
    std::int64_t result = n;
    for (std::int64_t q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        while (n % q == 0) n /= q;
        result -= result / q;
    }
    if (n > 1) result -= result / n;
    return result;
}

/// n-th cyclotomic polynomial, by exact division of X^n - 1 by Phi_d over proper divisors d.
inline Polynomial cyclotomic(std::int64_t n) {
    if (n < 1) throw DomainError("cyclotomic order must be positive");
    static std::mutex mu;
    static std::map<std::int64_t, Polynomial> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    Polynomial acc = Polynomial::monomial(Rational(1), static_cast<std::size_t>(n)) - Polynomial::one();
    for (std::int64_t d = 1; d < n; ++d)
        if (n % d == 0) acc = exact_quotient(acc, cyclotomic(d));
    std::lock_guard lock(mu);
    return cache.emplace(n, std::move(acc)).first->second;
}

struct CyclotomicSplit {
    Polynomial cyclotomic;                               // product of the Phi_m^e found
    Polynomial rest;                                     // non-cyclotomic cofactor
    std::vector<std::pair<std::int64_t, int>> orders;    // (m, e), ascending m
};

/// p = cyclotomic * rest. Orders m up to 2*deg(p)^2 are searched (or up to
/// max_order when given); a factor Phi_m needs phi(m) <= deg p, and
/// phi(m) >= sqrt(m/2) bounds the search.
inline CyclotomicSplit cyclotomic_part(const Polynomial& p, std::int64_t max_order = 0) {
    if (p.is_zero()) throw DomainError("cyclotomic part of the zero polynomial");
    CyclotomicSplit out{Polynomial::one(), p, {}};
    const std::int64_t deg = p.degree();
    const std::int64_t bound = max_order > 0 ? max_order : 2 * deg * deg;
    for (std::int64_t m = 1; m <= bound && out.rest.degree() >= 1; ++m) {
        if (euler_phi(m) > out.rest.degree()) continue;
        const Polynomial& phi = cyclotomic(m);
        int e = 0;
        for (;;) {
            auto [q, r] = poly_divrem(out.rest, phi);
            if (!r.is_zero()) break;
            out.rest = std::move(q);
            out.cyclotomic *= phi;
            ++e;
        }
        if (e) out.orders.emplace_back(m, e);
    }
    return out;
}

inline bool has_cyclotomic_factor(const Polynomial& p) { return !cyclotomic_part(p).orders.empty(); }

/// Total order used for deterministic output: by degree, then coefficients from the top down.
inline bool poly_less(const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        auto ai = a.coeff(static_cast<std::size_t>(i));
        auto bi = b.coeff(static_cast<std::size_t>(i));
        if (ai != bi) return ai < bi;
    }
    return false;
}

}  // namespace recap
