#pragma once

// Every closed-form enumeration: the 321 word/parking counts, monotone
// partition sums, the Sylvester / #-Sylvester class-count determinants, and
// the composition sums for parking functions avoiding one nonmonotone
// pattern of size 3.

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "parkav/bigint.hpp"
#include "parkav/compositions.hpp"
#include "parkav/dyck.hpp"
#include "parkav/parking.hpp"
#include "parkav/tableaux.hpp"
#include "parkav/words.hpp"

namespace parkav {

/// A monotone pattern: the strictly decreasing word r, r-1, ..., 1 or the
/// weakly increasing run 1, 2, ..., r (a forbidden subword of length r).
struct MonotoneSpec {
    MonotoneKind kind;
    int r;  // pattern length, at least 2

    MonotoneSpec(MonotoneKind k, int len) : kind(k), r(len) {
        if (len < 2) throw std::invalid_argument("MonotoneSpec: pattern length must be at least 2");
    }
};

/// w_{n,k}(321): words of length n over [k] with no strictly decreasing
/// subword of length 3, as the explicit two-row sum
///   sum over a of n! (k+n-a-1)_{n-a} (k+a-2)_a / (a! (n-2a)! (n-a+1)_a)^2.
inline BigCount w321_closed(long long n, long long k) {
    if (n < 0) throw std::invalid_argument("w321_closed: n must be nonnegative");
    if (k < 1) throw std::invalid_argument("w321_closed: k must be positive");
    BigCount total = 0;
    const BigCount nfact = factorial(n);
    for (long long a = 0; a <= n / 2; ++a) {
        BigInt num = nfact * falling_factorial(k + n - a - 1, n - a) * falling_factorial(k + a - 2, a);
        BigInt den = factorial(a) * factorial(n - 2 * a) * falling_factorial(n - a + 1, a);
        total += exact_div(num, den * den);
    }
    return total;
}

/// pf_n(321) = w_{n,n+1}(321) / (n+1); the division is exact.
inline BigCount pf321_closed(long long n) {
    if (n < 1) throw std::invalid_argument("pf321_closed: n must be positive");
    return exact_div(w321_closed(n, n + 1), n + 1);
}

/// Words of length n over [k] avoiding the monotone pattern, as the
/// partition sum of s_lambda(1^k) f^lambda with lambda ranging over
/// partitions of n with fewer than r rows (decreasing pattern) or first
/// part below r (weakly increasing pattern). By the standardization
/// corollaries the word-level and standardized counters coincide, so a
/// single sum serves both.
inline BigCount monotone_word_count(int n, long long k, const MonotoneSpec& spec) {
    if (n < 0) throw std::invalid_argument("monotone_word_count: n must be nonnegative");
    if (k < 1) throw std::invalid_argument("monotone_word_count: k must be positive");
    const int max_len = spec.kind == MonotoneKind::StrictDecreasing ? spec.r - 1 : kNoLimit;
    const int max_part = spec.kind == MonotoneKind::WeakIncreasing ? spec.r - 1 : kNoLimit;
    BigCount total = 0;
    for_each_partition(n, max_len, max_part, [&](const Partition& lam) {
        total += schur_ones(lam, k) * f_lambda(lam);
    });
    return total;
}

/// Parking functions of length n avoiding the monotone pattern:
/// monotone_word_count(n, n+1, spec) / (n+1), exactly.
inline BigCount monotone_pf_count(int n, const MonotoneSpec& spec) {
    if (n < 1) throw std::invalid_argument("monotone_pf_count: n must be positive");
    return exact_div(monotone_word_count(n, n + 1, spec), n + 1);
}

namespace detail {

// det[ C(j + s_i, j - (i - 1)) ] for 1 <= i, j <= k-1, where s is a vector
// of partial sums of length at least k-1.
inline BigCount class_count_det(const std::vector<long long>& sums, std::size_t k) {
    IntegerMatrix m(k - 1);
    for (std::size_t i = 1; i <= k - 1; ++i)
        for (std::size_t j = 1; j <= k - 1; ++j)
            m.at(i - 1, j - 1) = binomial(static_cast<long long>(j) + sums[i - 1],
                                          static_cast<long long>(j) - (static_cast<long long>(i) - 1));
    BigInt det = determinant(m);
    if (det < 0) throw std::logic_error("class_count_det: negative determinant");
    return det;
}

}  // namespace detail

/// Number of Sylvester classes of the words with packed content alpha:
/// det[ C(j + alpha_k + ... + alpha_{k+1-i}, j - (i-1)) ] over reversed
/// suffix sums. k = 1 gives the empty determinant, i.e. 1.
inline BigCount sylvester_class_count_det(const Composition& alpha) {
    if (!is_composition(alpha) || alpha.empty())
        throw std::invalid_argument("sylvester_class_count_det: content must be packed");
    return detail::class_count_det(prefix_sums(reversed(alpha)), alpha.size());
}

/// Number of #-Sylvester classes: the same determinant over forward prefix
/// sums, equal to sylvester_class_count_det(reversed(alpha)).
inline BigCount sharp_sylvester_class_count_det(const Composition& alpha) {
    if (!is_composition(alpha) || alpha.empty())
        throw std::invalid_argument("sharp_sylvester_class_count_det: content must be packed");
    return detail::class_count_det(prefix_sums(alpha), alpha.size());
}

/// True for the patterns whose parking-function count goes through the
/// Sylvester congruence (132, 231); 213 and 312 go through #-Sylvester.
inline bool is_sylvester_side_pattern(const Permutation& sigma) {
    return sigma == Permutation{1, 3, 2} || sigma == Permutation{2, 3, 1};
}

inline bool is_nonmonotone_pattern(const Permutation& sigma) {
    return sigma == Permutation{1, 3, 2} || sigma == Permutation{2, 3, 1} ||
           sigma == Permutation{2, 1, 3} || sigma == Permutation{3, 1, 2};
}

namespace detail {

// Compositions of n are indexed by (n-1)-bit masks of break positions,
// which gives workers an evenly splittable domain.
inline Composition composition_from_mask(int n, std::uint64_t mask) {
    Composition alpha;
    int run = 1;
    for (int b = 0; b < n - 1; ++b) {
        if (mask >> b & 1) {
            alpha.push_back(run);
            run = 1;
        } else {
            ++run;
        }
    }
    alpha.push_back(run);
    return alpha;
}

}  // namespace detail

/// Parking functions of length n avoiding one nonmonotone pattern of size
/// 3: the sum over compositions alpha of n of (Dyck paths with ascent
/// composition alpha) x (Sylvester or #-Sylvester classes of content
/// alpha). The 2^(n-1) terms are independent; they are sharded across
/// threads and reduced in a fixed per-worker order, so the exact result is
/// identical for any thread count (0 = hardware concurrency).
inline BigCount pf_nonmonotone_count(int n, const Permutation& sigma, unsigned thread_count = 0) {
    if (n < 1) throw std::invalid_argument("pf_nonmonotone_count: n must be positive");
    if (n > 63) throw std::invalid_argument("pf_nonmonotone_count: n out of range");
    if (!is_nonmonotone_pattern(sigma))
        throw std::invalid_argument("pf_nonmonotone_count: pattern must be 132, 231, 213 or 312");
    const bool sylvester_side = is_sylvester_side_pattern(sigma);
    const auto term = [sylvester_side](const Composition& alpha) {
        return dyck_by_ascent_det(alpha) * (sylvester_side ? sylvester_class_count_det(alpha)
                                                           : sharp_sylvester_class_count_det(alpha));
    };

    const std::uint64_t domain = std::uint64_t{1} << (n - 1);
    if (thread_count == 0) thread_count = std::max(1u, std::thread::hardware_concurrency());
    if (thread_count == 1 || domain < 2048) {
        BigCount total = 0;
        for (std::uint64_t mask = 0; mask < domain; ++mask)
            total += term(detail::composition_from_mask(n, mask));
        return total;
    }

    std::atomic<std::uint64_t> cursor{0};
    constexpr std::uint64_t kChunk = 256;
    std::vector<BigCount> partial(thread_count, BigCount(0));
    std::vector<std::exception_ptr> errors(thread_count);
    std::vector<std::thread> workers;
    workers.reserve(thread_count);
    for (unsigned w = 0; w < thread_count; ++w) {
        workers.emplace_back([&, w] {
            try {
                for (;;) {
                    const std::uint64_t begin = cursor.fetch_add(kChunk);
                    if (begin >= domain) return;
                    const std::uint64_t end = std::min(begin + kChunk, domain);
                    for (std::uint64_t mask = begin; mask < end; ++mask)
                        partial[w] += term(detail::composition_from_mask(n, mask));
                }
            } catch (...) {
                errors[w] = std::current_exception();
                cursor.store(domain);  // stop the other workers
            }
        });
    }
    for (auto& t : workers) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    BigCount total = 0;
    for (const BigCount& p : partial) total += p;
    return total;
}

/// Oracle for every pf_* formula: filter the full parking-function list.
inline BigCount pf_bruteforce_count(int n, const Permutation& sigma, int exhaustive_bound = 7) {
    BigCount count = 0;
    for_each_parking_function(
        n,
        [&](const ParkingFunction& p) {
            if (pf_avoids(p, sigma)) ++count;
        },
        exhaustive_bound);
    return count;
}

}  // namespace parkav
