#pragma once

// Growth-rate limits for monotone-pattern avoidance, empirical n-th-root
// sequences from the exact counts, supermultiplicativity checks, and the
// simplex objectives whose maxima give the limits. Counts stay exact;
// floats appear only for roots and objective values.

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "parkav/bigint.hpp"
#include "parkav/closed_forms.hpp"
#include "parkav/words.hpp"

namespace parkav {

using Rational = boost::multiprecision::cpp_rational;

namespace detail {

inline BigInt int_pow(BigInt base, int exp) {
    BigInt r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

}  // namespace detail

/// Growth rate of words (and parking functions) avoiding the strictly
/// decreasing pattern of length k+1: (k+1)^{k+1} / k^{k-1}.
inline Rational decreasing_limit(int k) {
    if (k < 1) throw std::invalid_argument("decreasing_limit: k must be positive");
    return Rational(detail::int_pow(k + 1, k + 1), detail::int_pow(k, k - 1));
}

/// Growth rate for the weakly increasing pattern of length k+1:
/// k^{k+1} / (k-1)^{k-1}. k = 1 is degenerate (only the strictly
/// decreasing words survive) and is admitted only on request, with the
/// 0^0 = 1 convention giving limit 1.
inline Rational increasing_limit(int k, bool allow_degenerate = false) {
    if (k < 1 || (k == 1 && !allow_degenerate))
        throw std::invalid_argument("increasing_limit: k must be at least 2");
    if (k == 1) return 1;
    return Rational(detail::int_pow(k, k + 1), detail::int_pow(k - 1, k - 1));
}

/// log2 of a positive big integer, accurate to double precision.
inline double log2_big(const BigCount& v) {
    if (v <= 0) throw std::invalid_argument("log2_big: argument must be positive");
    const unsigned bits = boost::multiprecision::msb(v);
    if (bits <= 52) return std::log2(v.convert_to<double>());
    const BigInt top = v >> (bits - 52);
    return std::log2(top.convert_to<double>()) + static_cast<double>(bits - 52);
}

/// v^{1/n} as a double, stable for values far beyond double range.
inline double nth_root(const BigCount& v, int n) {
    if (n < 1) throw std::invalid_argument("nth_root: n must be positive");
    if (v == 0) return 0.0;
    return std::exp2(log2_big(v) / n);
}

/// w_{n,n}(pattern): the square-alphabet word count driving the growth
/// sequences. Decreasing r = 3 goes through the closed form, everything
/// else through the partition sum (kept to moderate n).
inline BigCount square_word_count(int n, const MonotoneSpec& spec) {
    const bool fast = spec.kind == MonotoneKind::StrictDecreasing && spec.r == 3;
    const int bound = fast ? 1000 : 64;
    if (n < 0 || n > bound) throw std::invalid_argument("square_word_count: n out of range");
    if (n == 0) return 1;
    if (fast) return w321_closed(n, n);
    return monotone_word_count(n, n, spec);
}

struct GrowthSample {
    int n;
    BigCount count;  // exact
    double root;     // count^{1/n}
};

struct GrowthReport {
    MonotoneSpec spec;
    int k;           // spec.r - 1, the parameter of the limit formulas
    Rational limit;  // exact
    std::vector<GrowthSample> samples;
};

/// Exact counts w_{n,n}(spec) with floating n-th roots for the given n's.
/// The increasing direction at r = 2 uses the degenerate k = 1 limit.
inline GrowthReport empirical_roots(const MonotoneSpec& spec, const std::vector<int>& ns) {
    GrowthReport report{spec, spec.r - 1,
                        spec.kind == MonotoneKind::StrictDecreasing
                            ? decreasing_limit(spec.r - 1)
                            : increasing_limit(spec.r - 1, /*allow_degenerate=*/true),
                        {}};
    for (int n : ns) {
        if (n < 1) throw std::invalid_argument("empirical_roots: n must be positive");
        BigCount c = square_word_count(n, spec);
        report.samples.push_back({n, c, nth_root(c, n)});
    }
    return report;
}

inline GrowthReport empirical_roots(const MonotoneSpec& spec, int n_max) {
    std::vector<int> ns;
    for (int n = 1; n <= n_max; ++n) ns.push_back(n);
    return empirical_roots(spec, ns);
}

/// a_n * a_m <= a_{n+m} for the square-alphabet counts, compared exactly.
inline bool supermultiplicativity_check(const MonotoneSpec& spec, int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("supermultiplicativity_check: sizes must be positive");
    return square_word_count(n, spec) * square_word_count(m, spec) <= square_word_count(n + m, spec);
}

namespace detail {

inline double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

}  // namespace detail

/// The simplex objective whose maximum is the growth rate: for the
/// decreasing direction prod (1+a_i)^{1+a_i} / a_i^{2 a_i}, for the
/// increasing one 1 / prod (1-a_i)^{1-a_i} a_i^{2 a_i}. Zero components
/// contribute a factor 1 (the x^x -> 1 limit).
inline double growth_objective(MonotoneKind kind, const std::vector<double>& a) {
    double sum = 0.0;
    for (double x : a) {
        if (x < 0.0 || x > 1.0) throw std::invalid_argument("growth_objective: component outside [0,1]");
        sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("growth_objective: components must sum to 1");
    double log_val = 0.0;
    for (double x : a) {
        if (kind == MonotoneKind::StrictDecreasing)
            log_val += detail::xlogx(1.0 + x) - 2.0 * detail::xlogx(x);
        else
            log_val += -detail::xlogx(1.0 - x) - 2.0 * detail::xlogx(x);
    }
    return std::exp(log_val);
}

/// Uniform barycenter (1/k, ..., 1/k).
inline std::vector<double> uniform_simplex_point(int k) {
    if (k < 1) throw std::invalid_argument("uniform_simplex_point: k must be positive");
    return std::vector<double>(k, 1.0 / k);
}

/// One point uniform on the standard simplex (normalized exponentials);
/// deterministic for a given engine state.
inline std::vector<double> sample_simplex(int k, std::mt19937_64& rng) {
    if (k < 1) throw std::invalid_argument("sample_simplex: k must be positive");
    std::vector<double> a(k);
    double total = 0.0;
    std::uniform_real_distribution<double> unit(std::numeric_limits<double>::min(), 1.0);
    for (double& x : a) total += x = -std::log(unit(rng));
    for (double& x : a) x /= total;
    return a;
}

/// w_{n,n}(k+1, k, ..., 1) <= C(2n-1, n) * |Av_n(k+1, k, ..., 1)|,
/// compared exactly.
inline bool surjection_bound_check(int n, int k, int exhaustive_bound = 8) {
    if (n < 1 || k < 1) throw std::invalid_argument("surjection_bound_check: n, k must be positive");
    Permutation pattern(k + 1);
    for (int i = 0; i < k + 1; ++i) pattern[i] = k + 1 - i;
    const BigCount lhs = square_word_count(n, MonotoneSpec(MonotoneKind::StrictDecreasing, k + 1));
    const BigCount rhs = binomial(2LL * n - 1, n) * av_count(n, pattern, exhaustive_bound);
    return lhs <= rhs;
}

}  // namespace parkav
