#pragma once

// Hook lengths, cell contents, the hook length and hook content formulas,
// Kostka numbers, and RSK row insertion for words.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "parkav/bigint.hpp"
#include "parkav/compositions.hpp"
#include "parkav/words.hpp"

namespace parkav {

using CellGrid = std::vector<std::vector<long long>>;

/// h(u): cells weakly right in the row plus cells strictly below in the
/// column, plus the cell itself.
inline CellGrid hook_lengths(const Partition& lam) {
    if (!is_partition(lam)) throw std::invalid_argument("hook_lengths: not a partition");
    const auto conj = conjugate(lam);
    CellGrid grid(lam.size());
    for (std::size_t i = 0; i < lam.size(); ++i) {
        grid[i].resize(lam[i]);
        for (int j = 0; j < lam[i]; ++j)
            grid[i][j] = (lam[i] - (j + 1)) + (conj[j] - (static_cast<int>(i) + 1)) + 1;
    }
    return grid;
}

/// c(u) = column - row. The first row reads 0, 1, 2, ...
inline CellGrid cell_contents(const Partition& lam) {
    if (!is_partition(lam)) throw std::invalid_argument("cell_contents: not a partition");
    CellGrid grid(lam.size());
    for (std::size_t i = 0; i < lam.size(); ++i) {
        grid[i].resize(lam[i]);
        for (int j = 0; j < lam[i]; ++j) grid[i][j] = j - static_cast<int>(i);
    }
    return grid;
}

namespace detail {

inline BigCount hook_product(const Partition& lam) {
    BigCount hp = 1;
    for (const auto& row : hook_lengths(lam))
        for (long long h : row) hp *= h;
    return hp;
}

}  // namespace detail

/// Number of standard Young tableaux of shape lam: n! / prod of hooks.
inline BigCount f_lambda(const Partition& lam) {
    if (!is_partition(lam)) throw std::invalid_argument("f_lambda: not a partition");
    return exact_div(factorial(parts_sum(lam)), detail::hook_product(lam));
}

/// Number of semistandard Young tableaux of shape lam with entries at most
/// t: the product of (t + c(u)) / h(u) over the cells. Zero when the shape
/// has more than t rows (a content factor vanishes); otherwise every factor
/// is positive and the one final division is exact.
inline BigCount schur_ones(const Partition& lam, long long t) {
    if (!is_partition(lam)) throw std::invalid_argument("schur_ones: not a partition");
    if (t < 0) throw std::invalid_argument("schur_ones: t must be nonnegative");
    BigInt num = 1;
    for (const auto& row : cell_contents(lam))
        for (long long c : row) num *= BigInt(t + c);
    if (num == 0) return 0;
    BigInt r = exact_div(num, detail::hook_product(lam));
    if (r < 0) throw std::logic_error("schur_ones: negative count");
    return r;
}

/// Rows weakly increasing, columns strictly increasing.
struct Tableau {
    std::vector<std::vector<int>> rows;

    Partition shape() const {
        Partition s;
        s.reserve(rows.size());
        for (const auto& r : rows) s.push_back(static_cast<int>(r.size()));
        return s;
    }

    friend bool operator==(const Tableau&, const Tableau&) = default;
};

inline bool is_semistandard(const Tableau& t) {
    if (!is_partition(t.shape()) && !t.rows.empty()) return false;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const auto& row = t.rows[i];
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] < 1) return false;
            if (j > 0 && row[j] < row[j - 1]) return false;
            if (i > 0 && t.rows[i - 1][j] >= row[j]) return false;
        }
    }
    return true;
}

inline bool is_standard(const Tableau& t) {
    if (!is_semistandard(t)) return false;
    std::vector<int> all;
    for (const auto& r : t.rows) all.insert(all.end(), r.begin(), r.end());
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] != static_cast<int>(i) + 1) return false;
    // rows strictly increasing as well
    for (const auto& r : t.rows)
        for (std::size_t j = 1; j < r.size(); ++j)
            if (r[j] <= r[j - 1]) return false;
    return true;
}

struct TableauPair {
    Tableau insertion;  // semistandard
    Tableau recording;  // standard, same shape
};

/// RSK row insertion of a word, left to right: each letter bumps the
/// leftmost entry strictly greater than it; the recording tableau tracks
/// the insertion order.
inline TableauPair rsk(const Word& w) {
    if (!is_word(w)) throw std::invalid_argument("rsk: letters must be positive");
    TableauPair out;
    for (std::size_t step = 0; step < w.size(); ++step) {
        int x = w[step];
        std::size_t row = 0;
        for (;; ++row) {
            if (row == out.insertion.rows.size()) {
                out.insertion.rows.push_back({x});
                out.recording.rows.push_back({static_cast<int>(step) + 1});
                break;
            }
            auto& r = out.insertion.rows[row];
            auto it = std::upper_bound(r.begin(), r.end(), x);
            if (it == r.end()) {
                r.push_back(x);
                out.recording.rows[row].push_back(static_cast<int>(step) + 1);
                break;
            }
            std::swap(x, *it);
        }
    }
    return out;
}

/// (longest weakly increasing, longest strictly decreasing) subsequence
/// lengths; by Greene's theorem these are lambda_1 and the row count of the
/// RSK shape.
inline std::pair<int, int> greene_invariants(const Word& w) {
    return {longest_monotone(w, MonotoneKind::WeakIncreasing),
            longest_monotone(w, MonotoneKind::StrictDecreasing)};
}

/// Kostka number: semistandard tableaux of shape mu and the given content,
/// counted by direct enumeration. Oracle-grade, small shapes only.
inline BigCount kostka(const Partition& mu, const WeakComposition& content, int cell_bound = 16) {
    if (!is_partition(mu)) throw std::invalid_argument("kostka: not a partition");
    if (!is_weak_composition(content)) throw std::invalid_argument("kostka: negative multiplicity");
    if (parts_sum(mu) != parts_sum(content))
        throw std::invalid_argument("kostka: size of shape and content differ");
    if (parts_sum(mu) > cell_bound) throw std::invalid_argument("kostka: size bound exceeded");

    std::vector<int> remaining(content);
    std::vector<std::vector<int>> rows(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) rows[i].assign(mu[i], 0);
    BigCount count = 0;
    // fill row-major; rows weakly increase, columns strictly increase
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
        for (int v = lo; v <= static_cast<int>(remaining.size()); ++v) {
            if (remaining[v - 1] == 0) continue;
            --remaining[v - 1];
            rows[i][j] = v;
            self(self, i, j + 1);
            ++remaining[v - 1];
        }
    };
    rec(rec, 0, 0);
    return count;
}

/// Aligned plain-text rendering (documentation aid).
inline std::string render_tableau(const Tableau& t) {
    std::size_t width = 1;
    for (const auto& r : t.rows)
        for (int v : r) width = std::max(width, std::to_string(v).size());
    std::string out;
    for (const auto& r : t.rows) {
        for (std::size_t j = 0; j < r.size(); ++j) {
            std::string s = std::to_string(r[j]);
            out += std::string(width - s.size(), ' ') + s;
            if (j + 1 < r.size()) out += ' ';
        }
        out += '\n';
    }
    return out;
}

}  // namespace parkav
