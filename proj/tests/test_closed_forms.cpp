#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "parkav/closed_forms.hpp"
#include "parkav/sylvester.hpp"

using namespace parkav;

namespace {

const MonotoneSpec kDec2{MonotoneKind::StrictDecreasing, 2};
const MonotoneSpec kDec3{MonotoneKind::StrictDecreasing, 3};
const MonotoneSpec kInc2{MonotoneKind::WeakIncreasing, 2};
const MonotoneSpec kInc4{MonotoneKind::WeakIncreasing, 4};

// exhaustive word filter over [k]^n by the subword criterion
BigCount filter_words(int n, int k, const MonotoneSpec& spec) {
    if (n == 0) return 1;
    std::vector<int> w(n, 1);
    BigCount count = 0;
    for (;;) {
        const int len = longest_monotone(w, spec.kind);
        if (len < spec.r) ++count;
        int i = n - 1;
        while (i >= 0 && w[i] == k) w[i--] = 1;
        if (i < 0) break;
        ++w[i];
    }
    return count;
}

}  // namespace

TEST_CASE("w321 closed form") {
    CHECK(w321_closed(2, 2) == 4);
    CHECK(w321_closed(3, 3) == 26);
    CHECK(w321_closed(3, 4) == 60);
    CHECK(w321_closed(0, 5) == 1);
    CHECK_THROWS_AS(w321_closed(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(w321_closed(2, 0), std::invalid_argument);

    // agrees with the partition sum everywhere we can afford
    for (int n = 0; n <= 12; ++n)
        for (int k = 1; k <= 12; ++k)
            REQUIRE(w321_closed(n, k) == monotone_word_count(n, k, kDec3));
}

TEST_CASE("pf321 closed form") {
    CHECK(pf321_closed(1) == 1);
    CHECK(pf321_closed(3) == 15);
    CHECK(pf321_closed(4) == 97);
    CHECK_THROWS_AS(pf321_closed(0), std::invalid_argument);
    for (int n = 1; n <= 5; ++n)
        REQUIRE(pf321_closed(n) == pf_bruteforce_count(n, {3, 2, 1}));
}

TEST_CASE("monotone word counts against exhaustive filtering") {
    CHECK(monotone_word_count(3, 3, kDec3) == 26);
    CHECK(monotone_word_count(2, 2, kInc2) == 1);  // only the word 21
    CHECK(monotone_word_count(0, 4, kDec3) == 1);

    for (int n = 0; n <= 5; ++n)
        for (int k = 1; k <= 5; ++k)
            for (int r = 2; r <= 4; ++r) {
                const MonotoneSpec dec{MonotoneKind::StrictDecreasing, r};
                const MonotoneSpec inc{MonotoneKind::WeakIncreasing, r};
                REQUIRE(monotone_word_count(n, k, dec) == filter_words(n, k, dec));
                REQUIRE(monotone_word_count(n, k, inc) == filter_words(n, k, inc));
            }
}

TEST_CASE("monotone word count equals the standardized-pattern count") {
    // the subword criterion and standardization-avoidance coincide
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 4; ++k)
            for (int r = 2; r <= 3; ++r) {
                std::vector<int> w(n, 1);
                BigCount dec_std = 0, inc_std = 0;
                Permutation dec_pat(r), inc_pat(r);
                for (int i = 0; i < r; ++i) {
                    dec_pat[i] = r - i;
                    inc_pat[i] = i + 1;
                }
                for (;;) {
                    const Permutation st = standardize(w);
                    if (!perm_contains(st, dec_pat)) ++dec_std;
                    if (!perm_contains(st, inc_pat)) ++inc_std;
                    int i = n - 1;
                    while (i >= 0 && w[i] == k) w[i--] = 1;
                    if (i < 0) break;
                    ++w[i];
                }
                REQUIRE(monotone_word_count(n, k, {MonotoneKind::StrictDecreasing, r}) == dec_std);
                REQUIRE(monotone_word_count(n, k, {MonotoneKind::WeakIncreasing, r}) == inc_std);
            }
}

TEST_CASE("monotone parking-function counts") {
    CHECK(monotone_pf_count(3, kDec3) == 15);
    CHECK(monotone_pf_count(3, kDec2) == 5);  // weakly increasing parking functions
    CHECK(monotone_pf_count(3, kInc4) == 16);

    // brute force via the word-level criterion on parking functions
    for (int n = 1; n <= 5; ++n)
        for (int r = 2; r <= 4; ++r)
            for (MonotoneKind kind : {MonotoneKind::StrictDecreasing, MonotoneKind::WeakIncreasing}) {
                const MonotoneSpec spec{kind, r};
                BigCount brute = 0;
                for_each_parking_function(n, [&](const ParkingFunction& p) {
                    if (longest_monotone(p, kind) < r) ++brute;
                });
                REQUIRE(monotone_pf_count(n, spec) == brute);
            }
}

TEST_CASE("class count determinants") {
    CHECK(sylvester_class_count_det({2, 2, 1}) == 7);
    CHECK(sylvester_class_count_det({6}) == 1);
    CHECK(sylvester_class_count_det({1, 1, 1}) == 5);
    CHECK(sharp_sylvester_class_count_det({1, 2, 2}) == 7);
    CHECK(sharp_sylvester_class_count_det({6}) == 1);
    CHECK(sharp_sylvester_class_count_det({1, 1, 1}) == 5);
    CHECK_THROWS_AS(sylvester_class_count_det({2, 0, 1}), std::invalid_argument);

    for (int sum = 1; sum <= 9; ++sum)
        for_each_composition(sum, [&](const Composition& alpha) {
            REQUIRE(sharp_sylvester_class_count_det(alpha) ==
                    sylvester_class_count_det(reversed(alpha)));
        });
}

TEST_CASE("nonmonotone parking-function counts") {
    CHECK(pf_nonmonotone_count(3, {1, 3, 2}) == 13);
    CHECK(pf_nonmonotone_count(3, {2, 1, 3}) == 14);
    CHECK(pf_nonmonotone_count(1, {1, 3, 2}) == 1);
    CHECK(pf_nonmonotone_count(1, {3, 1, 2}) == 1);
    CHECK_THROWS_AS(pf_nonmonotone_count(3, {3, 2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(pf_nonmonotone_count(0, {1, 3, 2}), std::invalid_argument);

    for (int n = 1; n <= 5; ++n) {
        const BigCount sylvester_side = pf_nonmonotone_count(n, {1, 3, 2});
        REQUIRE(sylvester_side == pf_nonmonotone_count(n, {2, 3, 1}));
        REQUIRE(sylvester_side == pf_bruteforce_count(n, {1, 3, 2}));
        REQUIRE(sylvester_side == pf_bruteforce_count(n, {2, 3, 1}));

        const BigCount sharp_side = pf_nonmonotone_count(n, {2, 1, 3});
        REQUIRE(sharp_side == pf_nonmonotone_count(n, {3, 1, 2}));
        REQUIRE(sharp_side == pf_bruteforce_count(n, {2, 1, 3}));
        REQUIRE(sharp_side == pf_bruteforce_count(n, {3, 1, 2}));
    }
}

TEST_CASE("pf321 closed form at n = 7", "[slow]") {
    REQUIRE(pf321_closed(7) == pf_bruteforce_count(7, {3, 2, 1}));
    CHECK(pf321_closed(7) == 53427);
}

TEST_CASE("regression constants for the sequences") {
    const std::vector<long long> pf321{1, 3, 15, 97, 728, 6024, 53427, 499125, 4855422};
    for (std::size_t i = 0; i < pf321.size(); ++i)
        REQUIRE(pf321_closed(static_cast<int>(i) + 1) == pf321[i]);

    const std::vector<long long> pf132{1, 3, 13, 69, 417, 2759, 19517, 145353};
    const std::vector<long long> pf213{1, 3, 14, 81, 533, 3822, 29146, 232788};
    for (std::size_t i = 0; i < pf132.size(); ++i) {
        REQUIRE(pf_nonmonotone_count(static_cast<int>(i) + 1, {1, 3, 2}) == pf132[i]);
        REQUIRE(pf_nonmonotone_count(static_cast<int>(i) + 1, {2, 1, 3}) == pf213[i]);
    }
}

TEST_CASE("parallel composition sum is exact for any thread count") {
    for (const Permutation& sigma : {Permutation{1, 3, 2}, Permutation{3, 1, 2}}) {
        const BigCount serial = pf_nonmonotone_count(12, sigma, 1);
        REQUIRE(pf_nonmonotone_count(12, sigma, 2) == serial);
        REQUIRE(pf_nonmonotone_count(12, sigma, 5) == serial);
        REQUIRE(pf_nonmonotone_count(12, sigma) == serial);
    }
}

TEST_CASE("pf brute force oracle") {
    CHECK(pf_bruteforce_count(3, {3, 2, 1}) == 15);
    CHECK(pf_bruteforce_count(3, {1, 3, 2}) == 13);
    CHECK(pf_bruteforce_count(2, {1, 3, 2}) == 3);
    CHECK(pf_bruteforce_count(2, {3, 2, 1}) == 3);
    CHECK_THROWS_AS(pf_bruteforce_count(9, {1, 3, 2}), std::invalid_argument);
}

TEST_CASE("per-composition decomposition: contents times classes") {
    for (int n = 1; n <= 5; ++n) {
        // stratify the brute force by the positive-part composition of the content
        std::map<Composition, BigCount> brute_by_comp;
        std::map<Composition, BigCount> contents_by_comp;
        std::map<WeakComposition, char> seen_content;
        for_each_parking_function(n, [&](const ParkingFunction& p) {
            const auto content = content_of(p);
            const auto alpha = positive_parts(content);
            if (pf_avoids(p, {1, 3, 2})) ++brute_by_comp[alpha];
            if (!seen_content.count(content)) {
                seen_content[content] = 1;
                ++contents_by_comp[alpha];
            }
        });
        for_each_composition(n, [&](const Composition& alpha) {
            const BigCount contents = contents_by_comp[alpha];
            REQUIRE(contents == dyck_by_ascent_det(alpha));
            const BigCount classes = sylvester_class_count_det(alpha);
            REQUIRE(brute_by_comp[alpha] == contents * classes);
        });
    }
}

TEST_CASE("determinants of random large compositions behave like counts") {
    std::mt19937 rng(987654321);
    for (int trial = 0; trial < 300; ++trial) {
        std::uniform_int_distribution<int> size(1, 28);
        const int n = size(rng);
        Composition alpha;
        int rem = n;
        while (rem > 0) {
            std::uniform_int_distribution<int> part(1, rem);
            const int p = part(rng);
            alpha.push_back(p);
            rem -= p;
        }
        REQUIRE(dyck_by_ascent_det(alpha) >= 1);   // every composition is some ascent comp
        REQUIRE(sylvester_class_count_det(alpha) >= 1);
        REQUIRE(sharp_sylvester_class_count_det(alpha) ==
                sylvester_class_count_det(reversed(alpha)));
    }
}

TEST_CASE("class count of a content with zeros matches its packed composition") {
    // letters that do not occur are invisible to the congruence
    CHECK(BigCount(sylv_classes({2, 0, 2, 0, 1}).classes.size()) ==
          sylvester_class_count_det({2, 2, 1}));
    CHECK(BigCount(sharp_classes({0, 1, 0, 2, 2}).classes.size()) ==
          sharp_sylvester_class_count_det({1, 2, 2}));
}
