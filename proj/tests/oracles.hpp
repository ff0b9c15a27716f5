#pragma once

// Test-only oracles, kept independent of the library code paths they check:
// cofactor determinants, direct tableau enumeration, subsequence scans, and
// the pentagonal-number recurrence for partition counts.

#include <algorithm>
#include <map>
#include <vector>

#include "parkav/bigint.hpp"
#include "parkav/compositions.hpp"

namespace oracles {

using parkav::BigCount;
using parkav::BigInt;
using parkav::Partition;

// Laplace expansion along the first row.
inline BigInt cofactor_determinant(const std::vector<std::vector<BigInt>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    BigInt det = 0;
    for (std::size_t col = 0; col < n; ++col) {
        if (m[0][col] == 0) continue;
        std::vector<std::vector<BigInt>> minor(n - 1, std::vector<BigInt>(n - 1));
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == col) continue;
                minor[i - 1][jj++] = m[i][j];
            }
        }
        BigInt term = m[0][col] * cofactor_determinant(minor);
        det += col % 2 == 0 ? term : -term;
    }
    return det;
}

// Standard Young tableaux of shape lam, by placing 1..n one at a time.
inline BigCount syt_count(const Partition& lam) {
    std::vector<int> fill(lam.size(), 0);
    const long long n = parkav::parts_sum(lam);
    BigCount count = 0;
    auto rec = [&](auto&& self, long long placed) -> void {
        if (placed == n) {
            ++count;
            return;
        }
        for (std::size_t r = 0; r < lam.size(); ++r) {
            if (fill[r] >= lam[r]) continue;
            if (r > 0 && fill[r - 1] <= fill[r]) continue;
            ++fill[r];
            self(self, placed + 1);
            --fill[r];
        }
    };
    rec(rec, 0);
    return count;
}

// Semistandard Young tableaux of shape lam with entries at most t, filled
// cell by cell.
inline BigCount ssyt_count(const Partition& lam, int t) {
    std::vector<std::vector<int>> rows(lam.size());
    for (std::size_t i = 0; i < lam.size(); ++i) rows[i].assign(lam[i], 0);
    BigCount count = 0;
    auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
        if (i == rows.size()) {
            ++count;
            return;
        }
        if (j == rows[i].size()) {
            self(self, i + 1, 0);
            return;
        }
        int lo = j > 0 ? rows[i][j - 1] : 1;
        if (i > 0) lo = std::max(lo, rows[i - 1][j] + 1);
        for (int v = lo; v <= t; ++v) {
            rows[i][j] = v;
            self(self, i, j + 1);
        }
    };
    rec(rec, 0, 0);
    return count;
}

// Longest monotone subsequence by exhaustive subsequence extension.
inline int longest_subsequence(const std::vector<int>& w, bool strict_decreasing) {
    int best = 0;
    auto rec = [&](auto&& self, std::size_t from, int last, int len) -> void {
        best = std::max(best, len);
        for (std::size_t i = from; i < w.size(); ++i) {
            const bool ok = len == 0 || (strict_decreasing ? w[i] < last : w[i] >= last);
            if (ok) self(self, i + 1, w[i], len + 1);
        }
    };
    rec(rec, 0, 0, 0);
    return best;
}

// Partition numbers via Euler's pentagonal recurrence.
inline BigCount partition_number(int n) {
    static std::map<int, BigCount> memo;
    if (n < 0) return 0;
    if (n == 0) return 1;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    BigCount total = 0;
    for (int k = 1;; ++k) {
        const int g1 = k * (3 * k - 1) / 2;
        const int g2 = k * (3 * k + 1) / 2;
        if (g1 > n && g2 > n) break;
        const BigCount term = partition_number(n - g1) + partition_number(n - g2);
        if (k % 2 == 1)
            total += term;
        else
            total -= term;
    }
    memo[n] = total;
    return total;
}

}  // namespace oracles
