#pragma once

// Words over positive integers, permutations, standardization, descent
// statistics, and pattern containment. The exhaustive counters here are the
// oracles for the closed forms, so the containment searches favor clarity
// and use simple prefix pruning.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "parkav/bigint.hpp"
#include "parkav/compositions.hpp"

namespace parkav {

using Word = std::vector<int>;         // letters >= 1
using Permutation = std::vector<int>;  // one-line form, rearrangement of 1..n

inline bool is_word(const Word& w) {
    return std::all_of(w.begin(), w.end(), [](int x) { return x >= 1; });
}

inline bool is_permutation(const Permutation& p) {
    const int n = static_cast<int>(p.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : p) {
        if (v < 1 || v > n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

/// A Cayley word uses exactly the letters 1..max.
inline bool is_cayley_word(const Word& c) {
    if (c.empty()) return true;
    int m = *std::max_element(c.begin(), c.end());
    if (*std::min_element(c.begin(), c.end()) < 1) return false;
    std::vector<char> seen(static_cast<std::size_t>(m) + 1, 0);
    for (int x : c) seen[x] = 1;
    for (int v = 1; v <= m; ++v)
        if (!seen[v]) return false;
    return true;
}

/// std(w): the unique permutation order-isomorphic to w, ties broken left
/// to right (equal letters get increasing ranks).
inline Permutation standardize(const Word& w) {
    if (!is_word(w)) throw std::invalid_argument("standardize: letters must be positive");
    const std::size_t n = w.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return w[a] < w[b]; });
    Permutation out(n);
    for (std::size_t rank = 0; rank < n; ++rank) out[idx[rank]] = static_cast<int>(rank) + 1;
    return out;
}

inline Permutation inverse(const Permutation& p) {
    if (!is_permutation(p)) throw std::invalid_argument("inverse: not a permutation");
    Permutation out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[p[i] - 1] = static_cast<int>(i) + 1;
    return out;
}

namespace detail {

inline int sign3(int a, int b) { return (a > b) - (a < b); }

// Backtracking subsequence search: chosen positions must relate to the new
// candidate exactly as the corresponding pattern letters relate.
inline bool contains_rec(const std::vector<int>& text, const std::vector<int>& pat,
                         std::vector<std::size_t>& chosen, std::size_t from) {
    const std::size_t k = pat.size();
    if (chosen.size() == k) return true;
    const std::size_t need = k - chosen.size();
    if (text.size() - from < need) return false;
    for (std::size_t i = from; i + need <= text.size(); ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < chosen.size(); ++j) {
            if (sign3(text[chosen[j]], text[i]) != sign3(pat[j], pat[chosen.size()])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        chosen.push_back(i);
        if (contains_rec(text, pat, chosen, i + 1)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace detail

/// True iff some subsequence of pi is order-isomorphic to sigma.
inline bool perm_contains(const Permutation& pi, const Permutation& sigma) {
    if (!is_permutation(pi) || !is_permutation(sigma))
        throw std::invalid_argument("perm_contains: arguments must be permutations");
    if (sigma.size() > pi.size()) return false;
    if (sigma.empty()) return true;
    std::vector<std::size_t> chosen;
    return detail::contains_rec(pi, sigma, chosen, 0);
}

/// Cayley-word containment: some subword of w order-isomorphic to c, with
/// equal pattern letters mapped to equal text letters.
inline bool word_contains(const Word& w, const Word& c) {
    if (!is_cayley_word(c)) throw std::invalid_argument("word_contains: pattern is not a Cayley word");
    if (!is_word(w)) throw std::invalid_argument("word_contains: text letters must be positive");
    if (c.size() > w.size()) return false;
    if (c.empty()) return true;
    std::vector<std::size_t> chosen;
    return detail::contains_rec(w, c, chosen, 0);
}

enum class MonotoneKind { StrictDecreasing, WeakIncreasing };

/// Length of the longest strictly decreasing (resp. weakly increasing)
/// subsequence of w.
inline int longest_monotone(const Word& w, MonotoneKind kind) {
    const std::size_t n = w.size();
    if (n == 0) return 0;
    std::vector<int> best(n, 1);
    int result = 1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const bool extends = kind == MonotoneKind::StrictDecreasing ? w[j] > w[i] : w[j] <= w[i];
            if (extends) best[i] = std::max(best[i], best[j] + 1);
        }
        result = std::max(result, best[i]);
    }
    return result;
}

/// Des(p) = { i : p_i > p_{i+1} }, positions 1-based, sorted.
inline std::vector<int> descent_set(const Permutation& p) {
    if (!is_permutation(p)) throw std::invalid_argument("descent_set: not a permutation");
    std::vector<int> out;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] > p[i + 1]) out.push_back(static_cast<int>(i) + 1);
    return out;
}

/// iDes(p) = Des(p^{-1}).
inline std::vector<int> ides(const Permutation& p) { return descent_set(inverse(p)); }

/// Composition of n whose proper partial sums are exactly S (subset of [n-1]).
inline Composition comp_of_set(const std::vector<int>& s, int n) {
    if (n < 1) throw std::invalid_argument("comp_of_set: n must be positive");
    std::vector<int> sorted(s);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() != s.size()) throw std::invalid_argument("comp_of_set: repeated elements");
    for (int x : sorted)
        if (x < 1 || x > n - 1) throw std::invalid_argument("comp_of_set: element outside [n-1]");
    Composition out;
    int prev = 0;
    for (int x : sorted) {
        out.push_back(x - prev);
        prev = x;
    }
    out.push_back(n - prev);
    return out;
}

/// Proper partial sums of a composition, the inverse of comp_of_set.
inline std::vector<int> set_of_comp(const Composition& a) {
    if (!is_composition(a)) throw std::invalid_argument("set_of_comp: parts must be positive");
    std::vector<int> out;
    int s = 0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) out.push_back(s += a[i]);
    return out;
}

/// Visits every word with letter-i multiplicity content[i-1], exactly once,
/// in lexicographic order.
template <class F>
void for_each_word_with_content(const WeakComposition& content, F&& visit) {
    if (!is_weak_composition(content))
        throw std::invalid_argument("for_each_word_with_content: negative multiplicity");
    Word w;
    for (std::size_t i = 0; i < content.size(); ++i)
        w.insert(w.end(), content[i], static_cast<int>(i) + 1);
    if (w.empty()) {
        visit(static_cast<const Word&>(w));
        return;
    }
    do {
        visit(static_cast<const Word&>(w));
    } while (std::next_permutation(w.begin(), w.end()));
}

/// Visits all permutations of 1..n in lexicographic order.
template <class F>
void for_each_permutation(int n, F&& visit) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 1);
    if (n == 0) {
        visit(static_cast<const Permutation&>(p));
        return;
    }
    do {
        visit(static_cast<const Permutation&>(p));
    } while (std::next_permutation(p.begin(), p.end()));
}

/// |Av_n(sigma)| by filtering all n! permutations.
inline BigCount av_count(int n, const Permutation& sigma, int exhaustive_bound = 9) {
    if (n < 0 || n > exhaustive_bound)
        throw std::invalid_argument("av_count: n exceeds the exhaustive bound");
    BigCount count = 0;
    for_each_permutation(n, [&](const Permutation& p) {
        if (!perm_contains(p, sigma)) ++count;
    });
    return count;
}

}  // namespace parkav
