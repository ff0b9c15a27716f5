#pragma once

// Binary search tree insertion P(w), the Sylvester and #-Sylvester
// congruences, class partitioning of the words with a fixed content, and
// canonical 132-avoiding representatives.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "parkav/compositions.hpp"
#include "parkav/words.hpp"

namespace parkav {

/// Binary search tree with duplicates going left: left subtree holds labels
/// <= node, right subtree holds labels > node.
class SearchTree {
public:
    SearchTree() = default;

    void insert(int x) {
        if (root_ < 0) {
            root_ = new_node(x);
            return;
        }
        int cur = root_;
        for (;;) {
            const bool go_left = x <= label_[cur];
            const int child = go_left ? left_[cur] : right_[cur];
            if (child < 0) {
                const int fresh = new_node(x);  // may reallocate node storage
                (go_left ? left_[cur] : right_[cur]) = fresh;
                return;
            }
            cur = child;
        }
    }

    bool empty() const { return root_ < 0; }
    int root() const { return root_; }
    int label(int node) const { return label_[node]; }
    int left(int node) const { return left_[node]; }
    int right(int node) const { return right_[node]; }
    std::size_t size() const { return label_.size(); }

    /// Canonical parenthesized encoding; equal trees encode equally.
    std::string encode() const {
        std::string out;
        encode_rec(root_, out);
        return out;
    }

    friend bool operator==(const SearchTree& a, const SearchTree& b) {
        return equal_rec(a, a.root_, b, b.root_);
    }

private:
    int new_node(int x) {
        label_.push_back(x);
        left_.push_back(-1);
        right_.push_back(-1);
        return static_cast<int>(label_.size()) - 1;
    }

    void encode_rec(int node, std::string& out) const {
        if (node < 0) {
            out += '.';
            return;
        }
        out += '(';
        out += std::to_string(label_[node]);
        encode_rec(left_[node], out);
        encode_rec(right_[node], out);
        out += ')';
    }

    static bool equal_rec(const SearchTree& a, int na, const SearchTree& b, int nb) {
        if (na < 0 || nb < 0) return na < 0 && nb < 0;
        return a.label_[na] == b.label_[nb] && equal_rec(a, a.left_[na], b, b.left_[nb]) &&
               equal_rec(a, a.right_[na], b, b.right_[nb]);
    }

    std::vector<int> label_, left_, right_;
    int root_ = -1;
};

/// P(w): insert the letters of w reading right to left.
inline SearchTree bst_of(const Word& w) {
    if (!is_word(w)) throw std::invalid_argument("bst_of: letters must be positive");
    SearchTree t;
    for (auto it = w.rbegin(); it != w.rend(); ++it) t.insert(*it);
    return t;
}

namespace detail {

// u and v must agree except for two swapped adjacent letters; returns that
// position or -1.
inline int swapped_adjacent_pos(const Word& u, const Word& v) {
    if (u.size() != v.size()) return -1;
    int pos = -1;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == v[i]) continue;
        if (pos >= 0 || i + 1 >= u.size()) return -1;
        if (u[i] != v[i + 1] || u[i + 1] != v[i] || u[i] == u[i + 1]) return -1;
        pos = static_cast<int>(i);
        ++i;  // skip the matched partner
    }
    return pos;
}

}  // namespace detail

/// One Sylvester rewriting move apart: u = x..ac..b..y and v = x..ca..b..y
/// (either orientation) with a <= b < c and the witness b somewhere after
/// the swapped pair.
inline bool sylv_adjacent(const Word& u, const Word& v) {
    const int p = detail::swapped_adjacent_pos(u, v);
    if (p < 0) return false;
    const int a = std::min(u[p], u[p + 1]);
    const int c = std::max(u[p], u[p + 1]);
    for (std::size_t q = p + 2; q < u.size(); ++q)
        if (a <= u[q] && u[q] < c) return true;
    return false;
}

/// One #-Sylvester move apart: the witness b sits before the swapped pair,
/// with a < b <= c.
inline bool sharp_adjacent(const Word& u, const Word& v) {
    const int p = detail::swapped_adjacent_pos(u, v);
    if (p < 0) return false;
    const int a = std::min(u[p], u[p + 1]);
    const int c = std::max(u[p], u[p + 1]);
    for (int q = 0; q < p; ++q)
        if (a < u[q] && u[q] <= c) return true;
    return false;
}

inline WeakComposition word_content(const Word& w) {
    WeakComposition c;
    for (int x : w) {
        if (c.size() < static_cast<std::size_t>(x)) c.resize(x, 0);
        ++c[x - 1];
    }
    return c;
}

/// u and v are Sylvester equivalent iff P(u) = P(v). The content check is
/// the label-multiset precondition; tree equality decides the rest.
inline bool sylv_equivalent(const Word& u, const Word& v) {
    if (word_content(u) != word_content(v)) return false;
    return bst_of(u) == bst_of(v);
}

/// Reverse-complement within the packed alphabet: reverse the word and send
/// each letter x to (max + 1) - x.
inline Word reverse_complement(const Word& w) {
    if (!is_word(w)) throw std::invalid_argument("reverse_complement: letters must be positive");
    if (w.empty()) return {};
    const int m = *std::max_element(w.begin(), w.end());
    Word out(w.rbegin(), w.rend());
    for (int& x : out) x = (m + 1) - x;
    return out;
}

/// #-Sylvester equivalence, decided through the reverse-complement transfer
/// to the Sylvester congruence.
inline bool sharp_equivalent(const Word& u, const Word& v) {
    if (word_content(u) != word_content(v)) return false;
    return bst_of(reverse_complement(u)) == bst_of(reverse_complement(v));
}

/// The unique member of a Sylvester class whose standardization avoids 132.
inline Word canonical_rep(const std::vector<Word>& cls) {
    if (cls.empty()) throw std::invalid_argument("canonical_rep: empty class");
    const Word* found = nullptr;
    for (const Word& w : cls) {
        if (!perm_contains(standardize(w), {1, 3, 2})) {
            if (found) throw std::logic_error("canonical_rep: multiple 132-avoiding members");
            found = &w;
        }
    }
    if (!found) throw std::logic_error("canonical_rep: no 132-avoiding member");
    return *found;
}

/// Equivalence classes of the words with a fixed content. Classes are
/// ordered by their lexicographically smallest member; members are in
/// lexicographic order.
struct ClassTable {
    WeakComposition content;
    std::vector<std::vector<Word>> classes;
    std::vector<Word> canonical;  // one representative per class
};

namespace detail {

template <class KeyFn>
ClassTable partition_words(const WeakComposition& content, int exhaustive_bound, KeyFn&& key) {
    if (parts_sum(content) > exhaustive_bound)
        throw std::invalid_argument("class partition: content sum exceeds the exhaustive bound");
    ClassTable table;
    table.content = content;
    std::map<std::string, std::size_t> index;
    for_each_word_with_content(content, [&](const Word& w) {
        auto [it, inserted] = index.try_emplace(key(w), table.classes.size());
        if (inserted) table.classes.emplace_back();
        table.classes[it->second].push_back(w);
    });
    // words arrive in lexicographic order, so each class is already sorted
    // and classes compare by their first member
    std::sort(table.classes.begin(), table.classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return table;
}

}  // namespace detail

/// Sylvester classes of the words with the given content; canonical
/// representatives standardize to 132-avoiding permutations.
inline ClassTable sylv_classes(const WeakComposition& content, int exhaustive_bound = 8) {
    ClassTable table = detail::partition_words(content, exhaustive_bound,
                                               [](const Word& w) { return bst_of(w).encode(); });
    for (const auto& cls : table.classes) table.canonical.push_back(canonical_rep(cls));
    return table;
}

/// #-Sylvester classes; the canonical representative is the member carried
/// to the Sylvester canonical by reverse-complement.
inline ClassTable sharp_classes(const WeakComposition& content, int exhaustive_bound = 8) {
    ClassTable table = detail::partition_words(content, exhaustive_bound, [](const Word& w) {
        return bst_of(reverse_complement(w)).encode();
    });
    for (const auto& cls : table.classes) {
        const Word* found = nullptr;
        for (const Word& w : cls) {
            if (!perm_contains(standardize(reverse_complement(w)), {1, 3, 2})) {
                if (found) throw std::logic_error("sharp_classes: multiple canonical members");
                found = &w;
            }
        }
        if (!found) throw std::logic_error("sharp_classes: no canonical member");
        table.canonical.push_back(*found);
    }
    return table;
}

/// Sideways plain-text tree rendering, right subtree above the root
/// (documentation aid).
inline std::string render_tree(const SearchTree& t) {
    std::string out;
    auto rec = [&](auto&& self, int node, int depth) -> void {
        if (node < 0) return;
        self(self, t.right(node), depth + 1);
        out += std::string(static_cast<std::size_t>(depth) * 3, ' ');
        out += std::to_string(t.label(node));
        out += '\n';
        self(self, t.left(node), depth + 1);
    };
    rec(rec, t.root(), 0);
    return out;
}

}  // namespace parkav
