#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <numeric>
#include <set>

#include "parkav/closed_forms.hpp"
#include "parkav/sylvester.hpp"

using namespace parkav;

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

std::vector<Word> words_of_content(const WeakComposition& content) {
    std::vector<Word> out;
    for_each_word_with_content(content, [&](const Word& w) { out.push_back(w); });
    return out;
}

// partition of the index set under the reflexive-transitive closure of adj
template <class Adj>
std::vector<std::set<std::size_t>> closure_classes(const std::vector<Word>& words, Adj&& adj) {
    UnionFind uf(words.size());
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            if (adj(words[i], words[j])) uf.unite(i, j);
    std::map<std::size_t, std::set<std::size_t>> grouped;
    for (std::size_t i = 0; i < words.size(); ++i) grouped[uf.find(i)].insert(i);
    std::vector<std::set<std::size_t>> out;
    for (auto& [root, members] : grouped) out.push_back(std::move(members));
    return out;
}

template <class Eq>
std::vector<std::set<std::size_t>> equivalence_classes(const std::vector<Word>& words, Eq&& eq) {
    std::vector<std::set<std::size_t>> out;
    std::vector<char> assigned(words.size(), 0);
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (assigned[i]) continue;
        std::set<std::size_t> cls{i};
        assigned[i] = 1;
        for (std::size_t j = i + 1; j < words.size(); ++j)
            if (!assigned[j] && eq(words[i], words[j])) {
                cls.insert(j);
                assigned[j] = 1;
            }
        out.push_back(std::move(cls));
    }
    return out;
}

std::set<std::set<std::size_t>> as_set(const std::vector<std::set<std::size_t>>& classes) {
    return {classes.begin(), classes.end()};
}

// all contents of words of length <= max_len over the alphabet [max_letter]
template <class F>
void for_each_content(int max_len, int max_letter, F&& f) {
    for (int len = 1; len <= max_len; ++len) {
        WeakComposition c(max_letter, 0);
        auto rec = [&](auto&& self, int pos, int rem) -> void {
            if (pos == max_letter - 1) {
                c[pos] = rem;
                f(static_cast<const WeakComposition&>(c));
                return;
            }
            for (int v = 0; v <= rem; ++v) {
                c[pos] = v;
                self(self, pos + 1, rem - v);
            }
        };
        rec(rec, 0, len);
    }
}

}  // namespace

TEST_CASE("binary search tree insertion") {
    CHECK(bst_of({1, 5, 5, 4, 3, 2}) == bst_of({5, 5, 4, 3, 1, 2}));
    CHECK(bst_of({1, 5, 5, 4, 3, 2}).encode() == bst_of({5, 5, 4, 3, 1, 2}).encode());

    const auto single = bst_of({7});
    CHECK(single.size() == 1);
    CHECK(single.label(single.root()) == 7);

    // right-to-left insertion of 321: right chain 1 - 2 - 3
    const auto chain = bst_of({3, 2, 1});
    int node = chain.root();
    CHECK(chain.label(node) == 1);
    CHECK(chain.left(node) == -1);
    node = chain.right(node);
    CHECK(chain.label(node) == 2);
    node = chain.right(node);
    CHECK(chain.label(node) == 3);
    CHECK(chain.right(node) == -1);

    CHECK(bst_of({}).empty());
    CHECK_FALSE(bst_of({1, 2}) == bst_of({2, 1}));
}

TEST_CASE("sylvester adjacency") {
    CHECK(sylv_adjacent({1, 5, 5, 4, 3, 2}, {5, 1, 5, 4, 3, 2}));
    CHECK(sylv_adjacent({5, 5, 4, 1, 3, 2}, {5, 5, 4, 3, 1, 2}));
    CHECK(sylv_adjacent({5, 1, 5, 4, 3, 2}, {1, 5, 5, 4, 3, 2}));  // symmetric
    CHECK_FALSE(sylv_adjacent({1, 2, 3}, {1, 2, 3}));
    CHECK_FALSE(sylv_adjacent({1, 3}, {3, 1}));      // no witness after the pair
    CHECK_FALSE(sylv_adjacent({2, 2, 3}, {2, 2, 3}));
    CHECK(sylv_adjacent({1, 3, 2}, {3, 1, 2}));      // witness b = 2, a=1 <= 2 < 3
    CHECK_FALSE(sylv_adjacent({1, 2, 2}, {2, 1, 2}));  // a=1,c=2 but no b with 1<=b<2 after
}

TEST_CASE("adjacency chains join the example words") {
    const std::vector<Word> sylv_chain = {{1, 5, 5, 4, 3, 2},
                                          {5, 1, 5, 4, 3, 2},
                                          {5, 5, 1, 4, 3, 2},
                                          {5, 5, 4, 1, 3, 2},
                                          {5, 5, 4, 3, 1, 2}};
    for (std::size_t i = 0; i + 1 < sylv_chain.size(); ++i)
        REQUIRE(sylv_adjacent(sylv_chain[i], sylv_chain[i + 1]));
    REQUIRE(sylv_equivalent(sylv_chain.front(), sylv_chain.back()));

    const std::vector<Word> sharp_chain = {{4, 3, 2, 1, 1, 5},
                                           {4, 3, 2, 1, 5, 1},
                                           {4, 3, 2, 5, 1, 1},
                                           {4, 3, 5, 2, 1, 1},
                                           {4, 5, 3, 2, 1, 1}};
    for (std::size_t i = 0; i + 1 < sharp_chain.size(); ++i)
        REQUIRE(sharp_adjacent(sharp_chain[i], sharp_chain[i + 1]));
    REQUIRE(sharp_equivalent(sharp_chain.front(), sharp_chain.back()));
}

TEST_CASE("sharp adjacency") {
    CHECK(sharp_adjacent({4, 3, 2, 1, 1, 5}, {4, 3, 2, 1, 5, 1}));
    CHECK(sharp_adjacent({4, 3, 2, 1, 5, 1}, {4, 3, 2, 1, 1, 5}));
    CHECK_FALSE(sharp_adjacent({1, 3}, {3, 1}));
    CHECK(sharp_adjacent({2, 1, 3}, {2, 3, 1}));     // witness b = 2 before, a=1 < 2 <= 3
    CHECK_FALSE(sharp_adjacent({1, 1, 3}, {1, 3, 1}));  // only 1s before, need a < b
}

TEST_CASE("sylvester equivalence via trees") {
    CHECK(sylv_equivalent({1, 5, 5, 4, 3, 2}, {5, 5, 4, 3, 1, 2}));
    CHECK_FALSE(sylv_equivalent({1, 2}, {1, 1}));  // different contents
    CHECK_FALSE(sylv_equivalent({1, 2}, {2, 1}));
    CHECK(sylv_equivalent({1, 3, 2}, {3, 1, 2}));
}

TEST_CASE("sharp equivalence via reverse-complement transfer") {
    CHECK(reverse_complement({4, 3, 2, 1, 1, 5}) == Word{1, 5, 5, 4, 3, 2});
    CHECK(reverse_complement({4, 5, 3, 2, 1, 1}) == Word{5, 5, 4, 3, 1, 2});
    CHECK(sharp_equivalent({4, 3, 2, 1, 1, 5}, {4, 5, 3, 2, 1, 1}));
    CHECK_FALSE(sharp_equivalent({1, 2}, {1, 1}));
    // involution on packed words
    CHECK(reverse_complement(reverse_complement({2, 1, 3, 1})) == Word{2, 1, 3, 1});
}

TEST_CASE("equivalences equal the closures of their adjacencies") {
    for_each_content(6, 4, [&](const WeakComposition& content) {
        const auto words = words_of_content(content);
        if (words.size() > 200) return;  // content (1,1,1,1) plus repeats stays modest

        const auto sylv_close = closure_classes(words, sylv_adjacent);
        const auto sylv_trees = equivalence_classes(words, sylv_equivalent);
        REQUIRE(as_set(sylv_close) == as_set(sylv_trees));

        const auto sharp_close = closure_classes(words, sharp_adjacent);
        const auto sharp_trees = equivalence_classes(words, sharp_equivalent);
        REQUIRE(as_set(sharp_close) == as_set(sharp_trees));

        for (std::size_t i = 0; i < words.size(); ++i) {
            for (std::size_t j = i + 1; j < words.size(); ++j) {
                const bool sylv = sylv_equivalent(words[i], words[j]);
                // equivalence is content + standardization equivalence
                REQUIRE(sylv == sylv_equivalent(standardize(words[i]), standardize(words[j])));
                // reverse-complement transfers sylvester to #-sylvester
                REQUIRE(sylv == sharp_equivalent(reverse_complement(words[i]),
                                                 reverse_complement(words[j])));
            }
        }
    });
}

TEST_CASE("class tables and canonical representatives") {
    const auto table = sylv_classes({2, 2, 1});
    CHECK(table.classes.size() == 7);
    CHECK(table.canonical.size() == 7);
    std::size_t members = 0;
    for (const auto& cls : table.classes) members += cls.size();
    CHECK(members == 30);
    for (std::size_t i = 0; i < table.classes.size(); ++i) {
        for (const Word& w : table.classes[i])
            REQUIRE(sylv_equivalent(w, table.canonical[i]));
        REQUIRE_FALSE(perm_contains(standardize(table.canonical[i]), {1, 3, 2}));
    }

    CHECK(sylv_classes({5}).classes.size() == 1);
    CHECK(sylv_classes({1, 1, 1}).classes.size() == 5);
    CHECK(sharp_classes({2, 2, 1}).classes.size() == 12);
    CHECK(sharp_classes({1, 1, 1}).classes.size() == 5);
    CHECK_THROWS_AS(sylv_classes({5, 4}), std::invalid_argument);  // sum over default bound
}

TEST_CASE("full class partition of content (2,2,1)") {
    // pinned from the adjacency closure; note 12231 ~ 21231 via the move
    // (12)231 -> (21)231 witnessed by the trailing 1
    const std::vector<std::vector<Word>> expected{
        {{1, 1, 2, 2, 3}},
        {{1, 1, 2, 3, 2}, {1, 1, 3, 2, 2}, {1, 3, 1, 2, 2}, {3, 1, 1, 2, 2}},
        {{1, 2, 1, 2, 3}, {2, 1, 1, 2, 3}},
        {{1, 2, 1, 3, 2}, {1, 2, 3, 1, 2}, {1, 3, 2, 1, 2}, {2, 1, 1, 3, 2},
         {2, 1, 3, 1, 2}, {2, 3, 1, 1, 2}, {3, 1, 2, 1, 2}, {3, 2, 1, 1, 2}},
        {{1, 2, 2, 1, 3}, {2, 1, 2, 1, 3}, {2, 2, 1, 1, 3}},
        {{1, 2, 2, 3, 1}, {2, 1, 2, 3, 1}, {2, 2, 1, 3, 1}, {2, 2, 3, 1, 1}},
        {{1, 2, 3, 2, 1}, {1, 3, 2, 2, 1}, {2, 1, 3, 2, 1}, {2, 3, 1, 2, 1},
         {2, 3, 2, 1, 1}, {3, 1, 2, 2, 1}, {3, 2, 1, 2, 1}, {3, 2, 2, 1, 1}}};
    const auto table = sylv_classes({2, 2, 1});
    REQUIRE(table.classes == expected);
    REQUIRE(sylv_adjacent({1, 2, 2, 3, 1}, {2, 1, 2, 3, 1}));
}

TEST_CASE("canonical_rep picks the unique 132-avoiding standardization") {
    const auto table = sylv_classes({1, 2, 2, 1});
    for (const auto& cls : table.classes) {
        const Word rep = canonical_rep(cls);
        int avoiding = 0;
        for (const Word& w : cls)
            if (!perm_contains(standardize(w), {1, 3, 2})) ++avoiding;
        REQUIRE(avoiding == 1);
        REQUIRE_FALSE(perm_contains(standardize(rep), {1, 3, 2}));
    }
    CHECK(canonical_rep({{2, 2, 2}}) == Word{2, 2, 2});
    // the S_3 class {132, 312} is represented by 312
    CHECK(canonical_rep({{1, 3, 2}, {3, 1, 2}}) == Word{3, 1, 2});
    CHECK_THROWS_AS(canonical_rep({}), std::invalid_argument);
}

TEST_CASE("class counts match the determinants") {
    for (int sum = 1; sum <= 6; ++sum) {
        for_each_composition(sum, [&](const Composition& alpha) {
            REQUIRE(BigCount(sylv_classes(alpha).classes.size()) ==
                    sylvester_class_count_det(alpha));
            REQUIRE(BigCount(sharp_classes(alpha).classes.size()) ==
                    sharp_sylvester_class_count_det(alpha));
        });
    }
}

TEST_CASE("tree rendering smoke") {
    const auto tree = bst_of({1, 5, 5, 4, 3, 2});
    const auto drawn = render_tree(tree);
    CHECK_FALSE(drawn.empty());
    CHECK(drawn.find('2') != std::string::npos);
}
