#pragma once

// Compositions, weak compositions and integer partitions, plus the
// deterministic iteration orders the CLI's reproducibility contract
// depends on. All generators yield part lists in lexicographically
// ascending order.

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

#include "parkav/bigint.hpp"

namespace parkav {

using Composition = std::vector<int>;       // strictly positive parts
using WeakComposition = std::vector<int>;   // nonnegative parts
using Partition = std::vector<int>;         // weakly decreasing positive parts

inline bool is_composition(const Composition& a) {
    return std::all_of(a.begin(), a.end(), [](int p) { return p >= 1; });
}

inline bool is_weak_composition(const WeakComposition& a) {
    return std::all_of(a.begin(), a.end(), [](int p) { return p >= 0; });
}

inline bool is_partition(const Partition& lam) {
    for (std::size_t i = 0; i < lam.size(); ++i) {
        if (lam[i] < 1) return false;
        if (i > 0 && lam[i] > lam[i - 1]) return false;
    }
    return true;
}

inline long long parts_sum(const std::vector<int>& a) {
    long long s = 0;
    for (int p : a) s += p;
    return s;
}

inline Partition conjugate(const Partition& lam) {
    if (!is_partition(lam)) throw std::invalid_argument("conjugate: not a partition");
    Partition out;
    if (lam.empty()) return out;
    out.resize(lam[0]);
    for (int j = 0; j < lam[0]; ++j)
        out[j] = static_cast<int>(std::count_if(lam.begin(), lam.end(), [j](int p) { return p > j; }));
    return out;
}

/// Prefix sums a_1, a_1+a_2, ..., a_1+...+a_k.
inline std::vector<long long> prefix_sums(const std::vector<int>& a) {
    std::vector<long long> ps;
    ps.reserve(a.size());
    long long s = 0;
    for (int p : a) ps.push_back(s += p);
    return ps;
}

/// The positive parts of a weak composition, in order.
inline Composition positive_parts(const WeakComposition& c) {
    Composition out;
    for (int p : c)
        if (p > 0) out.push_back(p);
    return out;
}

inline Composition reversed(Composition a) {
    std::reverse(a.begin(), a.end());
    return a;
}

/// Visits every composition of n exactly once, lexicographically ascending:
/// (1,1,...,1) first, (n) last.
template <class F>
void for_each_composition(int n, F&& visit) {
    if (n < 1) throw std::invalid_argument("for_each_composition: n must be positive");
    Composition cur;
    auto rec = [&](auto&& self, int rem) -> void {
        if (rem == 0) {
            visit(static_cast<const Composition&>(cur));
            return;
        }
        for (int first = 1; first <= rem; ++first) {
            cur.push_back(first);
            self(self, rem - first);
            cur.pop_back();
        }
    };
    rec(rec, n);
}

inline std::vector<Composition> all_compositions(int n) {
    std::vector<Composition> out;
    for_each_composition(n, [&](const Composition& a) { out.push_back(a); });
    return out;
}

inline constexpr int kNoLimit = std::numeric_limits<int>::max();

/// Visits every partition of n with at most max_length parts, each at most
/// max_part, exactly once, lexicographically ascending ((1,...,1) first,
/// (n) last). n = 0 yields the single empty partition.
template <class F>
void for_each_partition(int n, int max_length, int max_part, F&& visit) {
    if (n < 0 || max_length < 0 || max_part < 0)
        throw std::invalid_argument("for_each_partition: negative constraint");
    Partition cur;
    auto rec = [&](auto&& self, int rem, int cap) -> void {
        if (rem == 0) {
            visit(static_cast<const Partition&>(cur));
            return;
        }
        if (static_cast<int>(cur.size()) >= max_length) return;
        // the part chosen here is the largest remaining one (cap for the tail),
        // so scanning it upward emits part lists in ascending lex order
        for (int head = 1; head <= std::min(rem, cap); ++head) {
            cur.push_back(head);
            self(self, rem - head, head);
            cur.pop_back();
        }
    };
    rec(rec, n, max_part);
}

template <class F>
void for_each_partition(int n, F&& visit) {
    for_each_partition(n, kNoLimit, kNoLimit, std::forward<F>(visit));
}

inline std::vector<Partition> all_partitions(int n, int max_length = kNoLimit,
                                             int max_part = kNoLimit) {
    std::vector<Partition> out;
    for_each_partition(n, max_length, max_part, [&](const Partition& p) { out.push_back(p); });
    return out;
}

}  // namespace parkav
