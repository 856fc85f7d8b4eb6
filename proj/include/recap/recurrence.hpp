#pragma once

// Linear recurrences over Q: two-sided exact evaluation, minimal order,
// structural classification and quadratic closed forms.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "recap/errors.hpp"
#include "recap/exactnum.hpp"
#include "recap/poly.hpp"
#include "recap/resultant.hpp"
#include "recap/roots.hpp"

namespace recap {

/// f_{n+d} = a_{d-1} f_{n+d-1} + ... + a_0 f_n, with coeffs stored as
/// [a_{d-1}, ..., a_0] and initial values [f_0, ..., f_{d-1}].
class LinearRecurrence {
public:
    LinearRecurrence() = default;
    LinearRecurrence(std::vector<Rational> coeffs, std::vector<Rational> initial)
        : coeffs_(std::move(coeffs)), initial_(std::move(initial)) {
        if (coeffs_.empty()) throw PreconditionError("recurrence order must be positive");
        if (coeffs_.size() != initial_.size())
            throw PreconditionError("recurrence needs as many initial values (" + std::to_string(initial_.size()) +
                                    ") as coefficients (" + std::to_string(coeffs_.size()) + ")");
        if (coeffs_.back().is_zero()) throw PreconditionError("recurrence needs a_0 != 0");
    }

    std::size_t order() const { return coeffs_.size(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const std::vector<Rational>& initial() const { return initial_; }
    /// a_i for 0 <= i < d.
    const Rational& a(std::size_t i) const { return coeffs_[order() - 1 - i]; }

    friend bool operator==(const LinearRecurrence&, const LinearRecurrence&) = default;

private:
    std::vector<Rational> coeffs_;
    std::vector<Rational> initial_;
};

inline LinearRecurrence make_recurrence(std::initializer_list<long> coeffs, std::initializer_list<long> initial) {
    std::vector<Rational> c(coeffs.begin(), coeffs.end()), i(initial.begin(), initial.end());
    return {std::move(c), std::move(i)};
}

inline LinearRecurrence fibonacci() { return make_recurrence({1, 1}, {0, 1}); }

/// Memoized two-sided evaluator. Values never change once computed and the
/// deques only grow at the back, so references returned by at() stay valid.
/// Extension itself is not synchronized.
class SequenceEvaluator {
public:
    explicit SequenceEvaluator(LinearRecurrence rec) : rec_(std::move(rec)), fwd_(rec_.initial().begin(), rec_.initial().end()) {}

    const LinearRecurrence& recurrence() const { return rec_; }

    const Rational& at(std::int64_t n) {
        const auto d = static_cast<std::int64_t>(rec_.order());
        if (n >= 0) {
            while (static_cast<std::int64_t>(fwd_.size()) <= n) {
                const std::size_t base = fwd_.size() - static_cast<std::size_t>(d);
                Rational next(0);
                for (std::size_t i = 0; i < static_cast<std::size_t>(d); ++i) next += rec_.a(i) * fwd_[base + i];
                fwd_.push_back(std::move(next));
            }
            return fwd_[static_cast<std::size_t>(n)];
        }
        // f_n = (f_{n+d} - sum_{i>=1} a_i f_{n+i}) / a_0
        const auto idx = static_cast<std::size_t>(-n - 1);
        while (bwd_.size() <= idx) {
            std::int64_t m = -static_cast<std::int64_t>(bwd_.size()) - 1;
            Rational acc = value(m + d);
            for (std::int64_t i = 1; i < d; ++i) acc -= rec_.a(static_cast<std::size_t>(i)) * value(m + i);
            bwd_.push_back(acc / rec_.a(0));
        }
        return bwd_[idx];
    }

    /// Ensure [lo, hi] is memoized.
    void fill(std::int64_t lo, std::int64_t hi) {
        if (hi >= 0) at(hi);
        if (lo < 0) at(lo);
    }

private:
    // already-computed neighbour; used while extending backwards
    const Rational& value(std::int64_t n) { return n >= 0 ? at(n) : bwd_[static_cast<std::size_t>(-n - 1)]; }

    LinearRecurrence rec_;
    std::deque<Rational> fwd_;  // f_0, f_1, ...
    std::deque<Rational> bwd_;  // f_{-1}, f_{-2}, ...
};

inline Rational eval_at(const LinearRecurrence& rec, std::int64_t n) {
    SequenceEvaluator ev(rec);
    return ev.at(n);
}

/// Monic companion X^d - a_{d-1} X^{d-1} - ... - a_0.
inline Polynomial companion(const LinearRecurrence& rec) {
    const std::size_t d = rec.order();
    std::vector<Rational> c(d + 1);
    c[d] = 1;
    for (std::size_t i = 0; i < d; ++i) c[i] = -rec.a(i);
    return Polynomial(std::move(c));
}

/// Recurrence with the given monic-able companion polynomial and initial values.
inline LinearRecurrence from_companion(const Polynomial& p, std::vector<Rational> initial) {
    if (p.degree() < 1) throw PreconditionError("companion polynomial needs degree >= 1");
    Polynomial m = p.monic();
    const auto d = static_cast<std::size_t>(m.degree());
    std::vector<Rational> coeffs(d);
    for (std::size_t i = 0; i < d; ++i) coeffs[d - 1 - i] = -m.coeff(i);
    return {std::move(coeffs), std::move(initial)};
}

/// Berlekamp-Massey over Q: the shortest connection polynomial
/// C = 1 + c_1 x + ... + c_L x^L with s_n + c_1 s_{n-1} + ... + c_L s_{n-L} = 0.
inline std::vector<Rational> berlekamp_massey(const std::vector<Rational>& s) {
    std::vector<Rational> c{Rational(1)}, b{Rational(1)};
    std::size_t len = 0;
    std::size_t shift = 1;
    Rational last_disc(1);
    for (std::size_t n = 0; n < s.size(); ++n) {
        Rational disc = s[n];
        for (std::size_t i = 1; i <= len && i < c.size(); ++i) disc += c[i] * s[n - i];
        if (disc.is_zero()) {
            ++shift;
            continue;
        }
        std::vector<Rational> t = c;
        Rational coef = disc / last_disc;
        if (c.size() < b.size() + shift) c.resize(b.size() + shift);
        for (std::size_t i = 0; i < b.size(); ++i) c[i + shift] -= coef * b[i];
        if (2 * len <= n) {
            len = n + 1 - len;
            b = std::move(t);
            last_disc = disc;
            shift = 1;
        } else {
            ++shift;
        }
    }
    c.resize(len + 1);
    return c;
}

/// Minimal-order recurrence generating the same two-sided sequence.
inline LinearRecurrence minimalize(const LinearRecurrence& rec) {
    const std::size_t d = rec.order();
    SequenceEvaluator ev(rec);
    std::vector<Rational> terms;
    bool all_zero = true;
    for (std::size_t i = 0; i < 2 * d; ++i) {
        terms.push_back(ev.at(static_cast<std::int64_t>(i)));
        all_zero = all_zero && terms.back().is_zero();
    }
    if (all_zero) throw DomainError("the zero sequence has no minimal recurrence (constant recurrence excluded)");
    auto c = berlekamp_massey(terms);
    const std::size_t len = c.size() - 1;
    // the minimal polynomial divides the input companion, whose constant term is nonzero
    if (c[len].is_zero()) throw NumericError("minimal generator has a vanishing constant term");
    std::vector<Rational> coeffs(len), initial(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(len));
    for (std::size_t i = 1; i <= len; ++i) coeffs[i - 1] = -c[i];
    return {std::move(coeffs), std::move(initial)};
}

struct SymmetricInfo {
    std::int64_t M = 0;
    friend bool operator==(const SymmetricInfo&, const SymmetricInfo&) = default;
};

struct ExceptionalInfo {
    std::int64_t N = 2;
    int K = 1;
    Rational gamma;
    Rational R;
    friend bool operator==(const ExceptionalInfo&, const ExceptionalInfo&) = default;
};

enum class SymmetricStatus { Determined, NotDetermined };

struct SymmetricDetection {
    SymmetricStatus status = SymmetricStatus::Determined;
    std::optional<SymmetricInfo> info;
    std::string note;
};

struct StructureReport {
    std::int64_t minimal_order = 0;
    bool is_simple = false;
    bool is_degenerate = false;
    bool is_unitary = false;
    std::optional<SymmetricInfo> symmetric;
    bool symmetric_determined = true;
    std::optional<ExceptionalInfo> exceptional;
    bool integer_defined = false;          // integral coefficients and initial values
    bool integer_window_verified = false;  // f_{-d}..f_{3d} all integral
};

namespace detail {

inline bool squarefree_is_degenerate(const Polynomial& sq) {
    const std::int64_t d = sq.degree();
    if (d < 2) return false;
    Polynomial r = ratio_polynomial(sq);
    Polynomial diag = pow(Polynomial({-1, 1}), static_cast<unsigned>(d));
    Polynomial rest = exact_quotient(r, diag);
    if (rest.degree() < 1) return false;
    const std::int64_t d2 = d * d;
    return !cyclotomic_part(rest, 2 * d2 * d2).orders.empty();
}

}  // namespace detail

/// Simple / degenerate / unitary / integer-defined flags. Expects a minimal recurrence.
inline StructureReport classify_roots(const LinearRecurrence& rec) {
    StructureReport out;
    const auto d = static_cast<std::int64_t>(rec.order());
    out.minimal_order = d;
    Polynomial p = companion(rec);
    out.is_simple = is_squarefree(p);
    Polynomial sq = squarefree_part(p);
    out.is_unitary = !cyclotomic_part(p, 2 * d * d).orders.empty();
    out.is_degenerate = detail::squarefree_is_degenerate(sq);
    out.integer_defined = std::all_of(rec.coeffs().begin(), rec.coeffs().end(), [](auto& c) { return c.is_integer(); }) &&
                          std::all_of(rec.initial().begin(), rec.initial().end(), [](auto& c) { return c.is_integer(); });
    SequenceEvaluator ev(rec);
    out.integer_window_verified = true;
    for (std::int64_t n = -d; n <= 3 * d; ++n) out.integer_window_verified &= ev.at(n).is_integer();
    return out;
}

/// Pairing of the roots into products that are roots of unity. Complete for
/// d = 2, by numeric pair matching certified against the cyclotomic factors of
/// the product polynomial for d = 4; odd d is never symmetric.
inline SymmetricDetection detect_symmetric(const LinearRecurrence& rec) {
    SymmetricDetection out;
    const std::size_t d = rec.order();
    if (d % 2 == 1) {
        out.status = SymmetricStatus::NotDetermined;
        out.note = "odd order: the roots cannot be paired";
        return out;
    }
    Polynomial p = companion(rec);
    if (d == 2) {
        Rational prod = p.coeff(0);
        if (prod == Rational(1)) out.info = SymmetricInfo{1};
        else if (prod == Rational(-1)) out.info = SymmetricInfo{2};
        return out;
    }
    if (d > 4 || !is_squarefree(p)) {
        out.status = SymmetricStatus::NotDetermined;
        out.note = d > 4 ? "pair matching is implemented up to order 4" : "repeated roots";
        return out;
    }
    auto orders = cyclotomic_part(product_polynomial(p), 2 * 16 * 16).orders;
    if (orders.empty()) return out;
    auto z = complex_roots(p);
    // the three perfect matchings of four roots
    const int matchings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    std::optional<std::int64_t> best;
    for (const auto& mt : matchings) {
        std::int64_t M = 1;
        bool ok = true;
        for (int pr = 0; pr < 2 && ok; ++pr) {
            std::complex<double> w = z[static_cast<std::size_t>(mt[2 * pr])] * z[static_cast<std::size_t>(mt[2 * pr + 1])];
            std::optional<std::int64_t> hit;
            for (auto [m, e] : orders) {
                (void)e;
                if (std::abs(std::pow(w, static_cast<double>(m)) - 1.0) < 1e-7) {
                    hit = m;
                    break;
                }
            }
            if (!hit) ok = false;
            else M = std::lcm(M, *hit);
        }
        if (ok && (!best || M < *best)) best = M;
    }
    if (best) out.info = SymmetricInfo{*best};
    return out;
}

/// Rational binary double-root case: companion (X-2)^2 or (X-1/2)^2 and
/// f_n = (c1 + c2 n) 2^{Kn} with c2 != 0.
inline std::optional<ExceptionalInfo> detect_exceptional(const LinearRecurrence& rec) {
    if (rec.order() != 2) return std::nullopt;
    Polynomial p = companion(rec);
    int K;
    if (p == Polynomial({4, -4, 1})) K = 1;
    else if (p == Polynomial(std::vector<Rational>{Rational(Integer(1), Integer(4)), Rational(-1), Rational(1)})) K = -1;
    else return std::nullopt;
    const Rational& f0 = rec.initial()[0];
    const Rational& f1 = rec.initial()[1];
    Rational c1 = f0;
    Rational c2 = f1.mul_pow2(-K) - f0;
    if (c2.is_zero()) return std::nullopt;
    return ExceptionalInfo{2, K, -c1 / c2, c2};
}

/// f_n = c1 alpha1^n + c2 alpha2^n over Q(sqrt 2) or Q(sqrt 5).
struct QuadClosedForm {
    QuadraticElement alpha1, alpha2, c1, c2;

    QuadraticElement term(std::int64_t n) const { return c1 * pow(alpha1, n) + c2 * pow(alpha2, n); }
    Rational eval(std::int64_t n) const {
        auto v = term(n);
        if (!v.is_rational()) throw NumericError("closed form produced an irrational value");
        return v.a();
    }
};

inline QuadClosedForm quad_closed_form(const LinearRecurrence& rec) {
    if (rec.order() != 2) throw PreconditionError("quadratic closed form needs order 2");
    const Rational& a1 = rec.a(1);
    const Rational& a0 = rec.a(0);
    Rational disc = a1 * a1 + Rational(4) * a0;
    if (disc.is_zero()) throw PreconditionError("closed form needs simple roots");
    // disc = N / den^2 with N = num * den
    Integer n = disc.num() * disc.den();
    if (n < 0) throw UnsupportedField("complex roots: the discriminant is negative");
    Integer s = 1, core = n;
    for (Integer f = 2; f * f <= core; ++f)
        while (core % (f * f) == 0) {
            core /= f * f;
            s *= f;
        }
    if (core == 1) throw UnsupportedField("rational roots: no quadratic field is involved");
    if (core != 2 && core != 5)
        throw UnsupportedField("discriminant field Q(sqrt " + core.get_str() + ") is not supported");
    int d = static_cast<int>(core.get_si());
    Rational half(Integer(1), Integer(2));
    QuadraticElement root_disc(Rational(0), Rational(s, disc.den()), d);
    QuadraticElement alpha1 = (QuadraticElement::rational(a1, d) + root_disc) * half;
    QuadraticElement alpha2 = (QuadraticElement::rational(a1, d) - root_disc) * half;
    QuadraticElement f0 = QuadraticElement::rational(rec.initial()[0], d);
    QuadraticElement f1 = QuadraticElement::rational(rec.initial()[1], d);
    QuadraticElement c1 = (f1 - f0 * alpha2) / (alpha1 - alpha2);
    QuadraticElement c2 = f0 - c1;
    return {alpha1, alpha2, c1, c2};
}

}  // namespace recap
