#pragma once

// Arithmetic progressions f_m + f_k = 2 f_n inside linear recurrences:
// exact brute force, the infinite family kinds, and their verification.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <future>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "recap/errors.hpp"
#include "recap/recurrence.hpp"
#include "recap/trinomial.hpp"

namespace recap {

/// Mean-canonical triple: n holds the middle term, outer indices m < k.
struct APSolution {
    std::int64_t m = 0;
    std::int64_t n = 0;
    std::int64_t k = 0;
    Rational fm, fn, fk;

    auto key() const { return std::tuple{n, m, k}; }
    friend bool operator==(const APSolution& x, const APSolution& y) { return x.key() == y.key(); }
    friend bool operator<(const APSolution& x, const APSolution& y) { return x.key() < y.key(); }
};

/// Indices listed in value order, oriented so the first index is below the last.
struct AP4Solution {
    std::array<std::int64_t, 4> idx{};
    std::array<Rational, 4> values;

    friend bool operator==(const AP4Solution& x, const AP4Solution& y) { return x.idx == y.idx; }
    friend bool operator<(const AP4Solution& x, const AP4Solution& y) { return x.idx < y.idx; }
};

inline constexpr std::int64_t kDefaultMaxWindow = 20000;

/// Window cap: RECAP_MAX_WINDOW when set to a positive integer, else the default.
inline std::int64_t configured_max_window() {
    if (const char* env = std::getenv("RECAP_MAX_WINDOW")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return kDefaultMaxWindow;
}

struct SearchOptions {
    bool allow_zero_mean = false;
    std::int64_t max_window = 0;  // 0: configured_max_window()
    unsigned workers = 0;         // 0: hardware concurrency, capped
};

namespace detail {

inline void check_window(std::int64_t lo, std::int64_t hi, const SearchOptions& opt) {
    if (lo > hi) throw PreconditionError("window needs lo <= hi");
    std::int64_t cap = opt.max_window > 0 ? opt.max_window : configured_max_window();
    if (hi - lo + 1 > cap)
        throw ResourceError("window of " + std::to_string(hi - lo + 1) + " indices exceeds the cap of " +
                            std::to_string(cap) + " (--window / RECAP_MAX_WINDOW)");
}

inline std::vector<Rational> window_values(const LinearRecurrence& rec, std::int64_t lo, std::int64_t hi) {
    SequenceEvaluator ev(rec);
    ev.fill(lo, hi);
    std::vector<Rational> v;
    v.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t i = lo; i <= hi; ++i) v.push_back(ev.at(i));
    return v;
}

template <class Fn>
void parallel_chunks(std::size_t count, unsigned workers, Fn&& fn) {
    if (workers == 0) workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    if (count < 256 || workers == 1) {
        fn(0, count, 0);
        return;
    }
    std::vector<std::future<void>> jobs;
    std::size_t step = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t b = w * step, e = std::min(count, b + step);
        if (b >= e) break;
        jobs.push_back(std::async(std::launch::async, [&fn, b, e, w] { fn(b, e, w); }));
    }
    for (auto& j : jobs) j.get();
}

}  // namespace detail

/// All three-term progressions in [lo, hi] with distinct indices and distinct
/// values, sorted by (mean, low outer, high outer).
inline std::vector<APSolution> brute_force_aps(const LinearRecurrence& rec, std::int64_t lo, std::int64_t hi,
                                               const SearchOptions& opt = {}) {
    detail::check_window(lo, hi, opt);
    const auto vals = detail::window_values(rec, lo, hi);
    const std::size_t w = vals.size();
    std::map<Rational, std::vector<std::size_t>> where;
    for (std::size_t i = 0; i < w; ++i) where[vals[i]].push_back(i);

    unsigned workers = opt.workers ? opt.workers : std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::vector<std::vector<APSolution>> parts(workers);
    const Rational half(Integer(1), Integer(2));
    detail::parallel_chunks(w, workers, [&](std::size_t b, std::size_t e, unsigned slot) {
        auto& out = parts[slot];
        for (std::size_t i = b; i < e; ++i)
            for (std::size_t j = i + 1; j < w; ++j) {
                // distinct outer values force the mean to differ from both
                if (vals[i] == vals[j]) continue;
                Rational mean = (vals[i] + vals[j]) * half;
                if (mean.is_zero() && !opt.allow_zero_mean) continue;
                auto it = where.find(mean);
                if (it == where.end()) continue;
                for (std::size_t c : it->second)
                    out.push_back({lo + static_cast<std::int64_t>(i), lo + static_cast<std::int64_t>(c),
                                   lo + static_cast<std::int64_t>(j), vals[i], mean, vals[j]});
            }
    });
    std::vector<APSolution> all;
    for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    std::sort(all.begin(), all.end());
    return all;
}

/// Four-term progressions in [lo, hi]: distinct indices and values, inner
/// zero terms dropped unless allowed.
inline std::vector<AP4Solution> brute_force_ap4(const LinearRecurrence& rec, std::int64_t lo, std::int64_t hi,
                                                const SearchOptions& opt = {}) {
    detail::check_window(lo, hi, opt);
    const auto vals = detail::window_values(rec, lo, hi);
    const std::size_t w = vals.size();
    std::map<Rational, std::vector<std::size_t>> where;
    for (std::size_t i = 0; i < w; ++i) where[vals[i]].push_back(i);
    std::vector<AP4Solution> out;
    for (std::size_t i = 0; i < w; ++i)
        for (std::size_t j = 0; j < w; ++j) {
            if (!(vals[i] < vals[j])) continue;  // first two terms in increasing value order
            Rational step = vals[j] - vals[i];
            Rational v2 = vals[j] + step, v3 = v2 + step;
            if (!opt.allow_zero_mean && (vals[j].is_zero() || v2.is_zero())) continue;
            auto i2 = where.find(v2);
            if (i2 == where.end()) continue;
            auto i3 = where.find(v3);
            if (i3 == where.end()) continue;
            for (std::size_t c : i2->second)
                for (std::size_t d : i3->second) {
                    std::array<std::int64_t, 4> idx{lo + static_cast<std::int64_t>(i), lo + static_cast<std::int64_t>(j),
                                                    lo + static_cast<std::int64_t>(c), lo + static_cast<std::int64_t>(d)};
                    std::array<Rational, 4> v{vals[i], vals[j], v2, v3};
                    if (idx[0] > idx[3]) {
                        std::reverse(idx.begin(), idx.end());
                        std::reverse(v.begin(), v.end());
                    }
                    out.push_back({idx, v});
                }
        }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------- families

/// For every n: MeanMid f_{n+a} + f_n = 2 f_{n+b}; MeanLow f_{n+a} + f_{n+b} = 2 f_n;
/// MeanHigh f_{n+b} + f_n = 2 f_{n+a}.
struct ShiftFamily {
    TrinomialVariant variant = TrinomialVariant::MeanMid;
    std::int64_t a = 0;
    std::int64_t b = 0;
    friend bool operator==(const ShiftFamily&, const ShiftFamily&) = default;

    /// (outer, mean, outer) indices of the instance with parameter n.
    std::array<std::int64_t, 3> instance(std::int64_t n) const {
        switch (variant) {
            case TrinomialVariant::MeanMid: return {n, n + b, n + a};
            case TrinomialVariant::MeanLow: return {n + b, n, n + a};
            case TrinomialVariant::MeanHigh: return {n, n + a, n + b};
        }
        return {n, n, n};
    }
};

enum class MeanSlot { M, N, K };

inline std::string to_string(MeanSlot s) { return s == MeanSlot::M ? "m" : (s == MeanSlot::N ? "n" : "k"); }

/// Indices m = Mt + a, n = Mt + b, k = -Mt + c; `ordering` names the index
/// holding the middle term.
struct SymmetricFamily {
    std::int64_t M = 1;
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;
    MeanSlot ordering = MeanSlot::K;
    friend bool operator==(const SymmetricFamily&, const SymmetricFamily&) = default;

    std::array<std::int64_t, 3> indices(std::int64_t t) const { return {M * t + a, M * t + b, -M * t + c}; }
};

/// Exceptional family for f_n = R (n - gamma) 2^{K n}:
/// m(s) = -K 2^{s - K gamma} + K s, n(s) = m(s) - K, k(s) = -K 2^{s - K gamma} + gamma.
struct ExceptionalFamily {
    int K = 1;
    std::int64_t gamma = 0;
    Rational R{1};

    /// Parameters must exceed this value; below it the triple collapses.
    std::int64_t s_min() const { return K * gamma + 1; }

    /// (m, n, k) with n the mean index.
    std::array<std::int64_t, 3> indices(std::int64_t s) const {
        std::int64_t e = s - K * gamma;
        if (e < 0 || e > 61) throw DomainError("exceptional index out of the supported range (s - K*gamma in [0, 61])");
        std::int64_t p = std::int64_t{1} << e;
        std::int64_t m = -K * p + K * s;
        return {m, m - K, -K * p + gamma};
    }

    Rational value(std::int64_t n) const { return (R * Rational(static_cast<long long>(n - gamma))).mul_pow2(K * n); }
};

/// Index pattern with affine maps in one integer parameter; `mean` is the
/// middle term. Declared families (such as the unitary one) use this directly.
struct AffineFamily {
    struct Map {
        std::int64_t slope = 0;
        std::int64_t offset = 0;
        std::int64_t at(std::int64_t t) const { return slope * t + offset; }
    };
    Map mean, outer1, outer2;
    std::string label;

    /// Parameters t with mean(t) = n, outers matching {lo, hi} in either order.
    bool contains(std::int64_t n, std::int64_t lo, std::int64_t hi) const {
        auto fits = [&](std::int64_t t) {
            std::int64_t x = outer1.at(t), y = outer2.at(t);
            return mean.at(t) == n && std::min(x, y) == lo && std::max(x, y) == hi;
        };
        for (const Map* mp : {&mean, &outer1, &outer2}) {
            if (mp->slope == 0) continue;
            for (std::int64_t target : {n, lo, hi}) {
                std::int64_t diff = target - mp->offset;
                if (diff % mp->slope == 0 && fits(diff / mp->slope)) return true;
            }
        }
        return fits(0);
    }
};

inline AffineFamily to_affine(const ShiftFamily& f) {
    auto i0 = f.instance(0);
    return {{1, i0[1]}, {1, i0[0]}, {1, i0[2]}, "shift " + to_string(f.variant) + "(" + std::to_string(f.a) + "," + std::to_string(f.b) + ")"};
}

inline AffineFamily to_affine(const SymmetricFamily& f) {
    AffineFamily::Map m{f.M, f.a}, n{f.M, f.b}, k{-f.M, f.c};
    std::string label = "symmetric M=" + std::to_string(f.M) + " (" + std::to_string(f.a) + "," + std::to_string(f.b) +
                        "," + std::to_string(f.c) + ") mean at " + to_string(f.ordering);
    switch (f.ordering) {
        case MeanSlot::M: return {m, n, k, label};
        case MeanSlot::N: return {n, m, k, label};
        case MeanSlot::K: return {k, m, n, label};
    }
    return {k, m, n, label};
}

struct DeclaredExceptional {
    ExceptionalFamily fam;
    bool contains(std::int64_t n, std::int64_t lo, std::int64_t hi) const {
        for (std::int64_t s = fam.s_min() + 1; s - fam.K * fam.gamma <= 61; ++s) {
            auto ix = fam.indices(s);
            if (ix[1] == n && std::min(ix[0], ix[2]) == lo && std::max(ix[0], ix[2]) == hi) return true;
            std::int64_t mag = std::int64_t{1} << (s - fam.K * fam.gamma);
            if (mag > 4 * (std::abs(n) + std::abs(lo) + std::abs(hi) + std::abs(fam.gamma) + s) + 8) break;
        }
        return false;
    }
};

using AnyFamily = std::variant<ShiftFamily, SymmetricFamily, ExceptionalFamily, AffineFamily>;

inline bool family_contains(const AnyFamily& fam, const APSolution& s) {
    return std::visit(
        [&](const auto& f) -> bool {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, ExceptionalFamily>) return DeclaredExceptional{f}.contains(s.n, s.m, s.k);
            else if constexpr (std::is_same_v<T, AffineFamily>) return f.contains(s.n, s.m, s.k);
            else return to_affine(f).contains(s.n, s.m, s.k);
        },
        fam);
}

inline std::string family_label(const AnyFamily& fam) {
    return std::visit(
        [](const auto& f) -> std::string {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, ExceptionalFamily>)
                return "exceptional K=" + std::to_string(f.K) + " gamma=" + std::to_string(f.gamma) +
                       " R=" + f.R.to_string();
            else if constexpr (std::is_same_v<T, AffineFamily>) return f.label;
            else return to_affine(f).label;
        },
        fam);
}

/// Shift families of the minimal recurrence with a <= max_a.
inline std::vector<ShiftFamily> detect_shift_families(const LinearRecurrence& rec, std::int64_t max_a) {
    auto m = minimalize(rec);
    std::vector<ShiftFamily> out;
    for (const auto& t : trinomial_multiples(companion(m), max_a)) out.push_back({t.variant, t.a, t.b});
    return out;
}

struct Violation {
    std::int64_t param = 0;
    std::array<std::int64_t, 3> indices{};  // outer, mean, outer
    std::string detail;
};

struct VerificationReport {
    std::int64_t checked = 0;
    std::vector<Violation> violations;
    /// The identity is an exponential polynomial with at most 2d terms in the
    /// parameter, so 2d consecutive passing parameters prove it for all of them.
    bool holds_for_all = false;
    bool ok() const { return violations.empty(); }
};

namespace detail {

inline std::string ap_detail(const Rational& x, const Rational& mean, const Rational& z) {
    return x.to_string() + " + " + z.to_string() + " != 2*" + mean.to_string();
}

}  // namespace detail

inline VerificationReport verify_shift_family(const LinearRecurrence& rec, const ShiftFamily& fam, std::int64_t lo,
                                              std::int64_t hi) {
    VerificationReport rep;
    SequenceEvaluator ev(rec);
    for (std::int64_t n = lo; n <= hi; ++n) {
        auto ix = fam.instance(n);
        Rational x = ev.at(ix[0]), y = ev.at(ix[1]), z = ev.at(ix[2]);
        ++rep.checked;
        if (x + z != y + y) rep.violations.push_back({n, ix, detail::ap_detail(x, y, z)});
    }
    // the defect sequence satisfies the same order-d recurrence
    rep.holds_for_all = rep.ok() && rep.checked >= static_cast<std::int64_t>(rec.order());
    return rep;
}

inline VerificationReport verify_symmetric_family(const LinearRecurrence& rec, const SymmetricFamily& fam,
                                                  std::int64_t t_lo, std::int64_t t_hi) {
    VerificationReport rep;
    SequenceEvaluator ev(rec);
    for (std::int64_t t = t_lo; t <= t_hi; ++t) {
        auto ix = fam.indices(t);
        Rational fm = ev.at(ix[0]), fn = ev.at(ix[1]), fk = ev.at(ix[2]);
        const Rational* mean = &fk;
        const Rational *x = &fm, *z = &fn;
        std::array<std::int64_t, 3> order{ix[0], ix[2], ix[1]};
        if (fam.ordering == MeanSlot::M) {
            mean = &fm;
            x = &fn;
            z = &fk;
            order = {ix[1], ix[0], ix[2]};
        } else if (fam.ordering == MeanSlot::N) {
            mean = &fn;
            x = &fm;
            z = &fk;
            order = {ix[0], ix[1], ix[2]};
        }
        ++rep.checked;
        if (*x + *z != *mean + *mean) rep.violations.push_back({t, order, detail::ap_detail(*x, *mean, *z)});
    }
    rep.holds_for_all = rep.ok() && rep.checked >= 2 * static_cast<std::int64_t>(rec.order());
    return rep;
}

inline VerificationReport verify_exceptional_family(const ExceptionalFamily& fam, std::int64_t s_lo, std::int64_t s_hi) {
    if (fam.R.is_zero()) throw DomainError("exceptional family needs R != 0");
    if (fam.K != 1 && fam.K != -1) throw DomainError("exceptional family needs K = +1 or -1");
    VerificationReport rep;
    if (s_lo > s_hi) return rep;
    if (s_lo <= fam.s_min())
        throw DomainError("s = " + std::to_string(s_lo) + " is at or below the validity threshold s > " +
                          std::to_string(fam.s_min()));
    for (std::int64_t s = s_lo; s <= s_hi; ++s) {
        auto ix = fam.indices(s);
        Rational fm = fam.value(ix[0]), fn = fam.value(ix[1]), fk = fam.value(ix[2]);
        ++rep.checked;
        if (fm + fk != fn + fn) rep.violations.push_back({s, {ix[0], ix[1], ix[2]}, detail::ap_detail(fm, fn, fk)});
    }
    return rep;
}

/// Order-2 search for symmetric families with |a|, |b|, |c| <= bound. Each
/// hit holds on 2d consecutive parameters, hence for every t.
inline std::vector<SymmetricFamily> detect_symmetric_families(const LinearRecurrence& rec, std::int64_t M,
                                                              std::int64_t bound) {
    std::vector<SymmetricFamily> out;
    if (rec.order() != 2 || M < 1) return out;
    SequenceEvaluator ev(rec);
    ev.fill(-M * 4 - bound - 1, M * 4 + bound + 1);
    auto nontrivial = [&](const SymmetricFamily& f) {
        // distinct indices and values at some parameter in the probe range
        for (std::int64_t t = 0; t < 4; ++t) {
            auto ix = f.indices(t);
            if (ix[0] == ix[1] || ix[0] == ix[2] || ix[1] == ix[2]) continue;
            if (ev.at(ix[0]) != ev.at(ix[1]) && ev.at(ix[0]) != ev.at(ix[2]) && ev.at(ix[1]) != ev.at(ix[2]))
                return true;
        }
        return false;
    };
    for (std::int64_t a = -bound; a <= bound; ++a)
        for (std::int64_t b = -bound; b <= bound; ++b) {
            if (a == b) continue;
            for (std::int64_t c = -bound; c <= bound; ++c)
                for (MeanSlot slot : {MeanSlot::K, MeanSlot::M}) {
                    // m and n play symmetric roles when k is the mean
                    if (slot == MeanSlot::K && a < b) continue;
                    SymmetricFamily f{M, a, b, c, slot};
                    auto rep = verify_symmetric_family(rec, f, 0, 3);
                    if (rep.ok() && nontrivial(f)) out.push_back(f);
                }
        }
    return out;
}

struct SplitResult {
    std::vector<std::pair<APSolution, std::size_t>> members;  // solution, index of the first matching family
    std::vector<APSolution> isolated;
};

inline SplitResult split_isolated(const std::vector<APSolution>& solutions, const std::vector<AnyFamily>& families) {
    SplitResult out;
    for (const auto& s : solutions) {
        std::optional<std::size_t> hit;
        for (std::size_t i = 0; i < families.size() && !hit; ++i)
            if (family_contains(families[i], s)) hit = i;
        if (hit) out.members.emplace_back(s, *hit);
        else out.isolated.push_back(s);
    }
    return out;
}

struct PowerEquationReport {
    std::vector<std::pair<std::int64_t, std::int64_t>> solutions;
    std::int64_t exact_comparisons = 0;
};

/// Pairs 1 <= a, b <= bound with a^a = (2b)^b. A log prescreen picks the only
/// b near each a that could match; equality is decided on exact integers.
inline PowerEquationReport power_equation_search(std::int64_t bound) {
    if (bound < 1) throw PreconditionError("power equation bound must be >= 1");
    PowerEquationReport rep;
    auto g = [](std::int64_t b) { return static_cast<long double>(b) * std::log(2.0L * static_cast<long double>(b)); };
    for (std::int64_t a = 1; a <= bound; ++a) {
        const long double target = static_cast<long double>(a) * std::log(static_cast<long double>(a));
        // b*log(2b) is increasing for b >= 1: find the first b with g(b) >= target
        std::int64_t lo = 1, hi = bound;
        while (lo < hi) {
            std::int64_t mid = lo + (hi - lo) / 2;
            if (g(mid) >= target) hi = mid;
            else lo = mid + 1;
        }
        for (std::int64_t b = std::max<std::int64_t>(1, lo - 1); b <= std::min(bound, lo + 1); ++b) {
            if (std::fabs(static_cast<double>(g(b) - target)) > 1e-6 * (1.0 + static_cast<double>(target))) continue;
            ++rep.exact_comparisons;
            if (ipow(Integer(static_cast<long>(a)), static_cast<unsigned long>(a)) ==
                ipow(Integer(static_cast<long>(2 * b)), static_cast<unsigned long>(b)))
                rep.solutions.emplace_back(a, b);
        }
    }
    return rep;
}

}  // namespace recap
