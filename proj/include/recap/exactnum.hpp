#pragma once

// Exact scalars: arbitrary-precision rationals and elements of the real
// quadratic fields Q(sqrt 2) and Q(sqrt 5).

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "recap/errors.hpp"

namespace recap {

using Integer = mpz_class;

/// Normalized fraction num/den with den > 0 and gcd(|num|, den) = 1.
class Rational {
public:
    Rational() = default;
    Rational(int v) : q_(v) {}                  // NOLINT(google-explicit-constructor)
    Rational(long v) : q_(v) {}                 // NOLINT(google-explicit-constructor)
    Rational(long long v) : q_(Integer(std::to_string(v))) {}  // NOLINT
    Rational(const Integer& v) : q_(v) {}       // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw DivisionByZero();
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "p", "-p", "p/q" (surrounding blanks allowed).
    static Rational parse(std::string_view text) {
        auto trim = [](std::string_view s) {
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
            return s;
        };
        text = trim(text);
        auto valid_int = [](std::string_view s, bool allow_sign) {
            if (s.empty()) return false;
            std::size_t i = 0;
            if (allow_sign && (s[0] == '-' || s[0] == '+')) ++i;
            if (i == s.size()) return false;
            for (; i < s.size(); ++i)
                if (s[i] < '0' || s[i] > '9') return false;
            return true;
        };
        auto slash = text.find('/');
        std::string_view num = trim(text.substr(0, slash));
        std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                               : trim(text.substr(slash + 1));
        if (!valid_int(num, true) || !valid_int(den, false))
            throw ParseError("malformed rational: '" + std::string(text) + "'");
        std::string n(num);
        if (n[0] == '+') n.erase(0, 1);
        return Rational(Integer(n), Integer(std::string(den)));
    }

    const mpq_class& raw() const { return q_; }
    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    std::string to_string() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }
    double to_double() const { return q_.get_d(); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero();
        q_ /= o.q_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rational inverse() const {
        if (is_zero()) throw DivisionByZero();
        return Rational(mpq_class(1) / q_);
    }

    /// this * 2^e, exact for any sign of e.
    Rational mul_pow2(std::int64_t e) const {
        mpq_class r;
        if (e >= 0)
            mpq_mul_2exp(r.get_mpq_t(), q_.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
        else
            mpq_div_2exp(r.get_mpq_t(), q_.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
        return Rational(std::move(r));
    }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

private:
    mpq_class q_{0};
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

/// Square-and-multiply; negative exponents invert first.
inline Rational pow(const Rational& base, std::int64_t e) {
    Rational x = e < 0 ? base.inverse() : base;
    std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
    Rational acc(1);
    while (k) {
        if (k & 1U) acc *= x;
        k >>= 1U;
        if (k) x *= x;
    }
    return acc;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline bool is_perfect_square(const Integer& v) {
    return v >= 0 && mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

inline Integer isqrt(const Integer& v) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

/// a + b*sqrt(d) with d in {2, 5}.
class QuadraticElement {
public:
    QuadraticElement() = default;
    QuadraticElement(Rational a, Rational b, int d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        if (d_ != 2 && d_ != 5)
            throw UnsupportedField("quadratic field Q(sqrt " + std::to_string(d) +
                                   ") is not supported; only d = 2 and d = 5");
    }
    static QuadraticElement rational(Rational a, int d) { return {std::move(a), Rational(0), d}; }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    int d() const { return d_; }

    bool is_rational() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    QuadraticElement conj() const { return {a_, -b_, d_}; }
    Rational norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }
    Rational trace() const { return a_ + a_; }

    QuadraticElement inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero in Q(sqrt " + std::to_string(d_) + ")");
        Rational n = norm();
        return {a_ / n, -b_ / n, d_};
    }

    QuadraticElement operator-() const { return {-a_, -b_, d_}; }
    QuadraticElement& operator+=(const QuadraticElement& o) {
        check(o);
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    QuadraticElement& operator-=(const QuadraticElement& o) {
        check(o);
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    QuadraticElement& operator*=(const QuadraticElement& o) {
        check(o);
        Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d_);
        Rational b = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(a);
        b_ = std::move(b);
        return *this;
    }
    QuadraticElement& operator*=(const Rational& r) {
        a_ *= r;
        b_ *= r;
        return *this;
    }
    QuadraticElement& operator/=(const QuadraticElement& o) { return *this *= o.inverse(); }

    friend QuadraticElement operator+(QuadraticElement x, const QuadraticElement& y) { return x += y; }
    friend QuadraticElement operator-(QuadraticElement x, const QuadraticElement& y) { return x -= y; }
    friend QuadraticElement operator*(QuadraticElement x, const QuadraticElement& y) { return x *= y; }
    friend QuadraticElement operator*(QuadraticElement x, const Rational& r) { return x *= r; }
    friend QuadraticElement operator*(const Rational& r, QuadraticElement x) { return x *= r; }
    friend QuadraticElement operator/(QuadraticElement x, const QuadraticElement& y) { return x /= y; }
    friend QuadraticElement operator+(QuadraticElement x, const Rational& r) {
        x.a_ += r;
        return x;
    }
    friend QuadraticElement operator-(QuadraticElement x, const Rational& r) {
        x.a_ -= r;
        return x;
    }

    friend bool operator==(const QuadraticElement& x, const QuadraticElement& y) {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }

    double to_double() const { return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(d_)); }

    std::string to_string() const {
        if (b_.is_zero()) return a_.to_string();
        std::string s = a_.is_zero() ? "" : a_.to_string() + (b_.sign() > 0 ? " + " : " - ");
        if (a_.is_zero() && b_.sign() < 0) s = "-";
        Rational mag = b_.abs();
        if (mag != Rational(1)) s += mag.to_string() + "*";
        return s + "sqrt(" + std::to_string(d_) + ")";
    }

private:
    void check(const QuadraticElement& o) const {
        if (o.d_ != d_)
            throw DomainError("quadratic elements from different fields: sqrt " + std::to_string(d_) +
                              " vs sqrt " + std::to_string(o.d_));
    }

    Rational a_{0};
    Rational b_{0};
    int d_ = 5;
};

inline std::ostream& operator<<(std::ostream& os, const QuadraticElement& x) { return os << x.to_string(); }

inline QuadraticElement pow(const QuadraticElement& base, std::int64_t e) {
    QuadraticElement x = e < 0 ? base.inverse() : base;
    std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
    QuadraticElement acc = QuadraticElement::rational(Rational(1), base.d());
    while (k) {
        if (k & 1U) acc *= x;
        k >>= 1U;
        if (k) x *= x;
    }
    return acc;
}

inline QuadraticElement quad_mul(const QuadraticElement& x, const QuadraticElement& y) { return x * y; }
inline QuadraticElement quad_inv(const QuadraticElement& x) { return x.inverse(); }

/// (norm, trace) = (a^2 - d b^2, 2a).
inline std::pair<Rational, Rational> quad_norm_trace(const QuadraticElement& x) {
    return {x.norm(), x.trace()};
}

}  // namespace recap
