#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "khopf/words.hpp"

using namespace khopf;

TEST_CASE("is_multiword") {
    CHECK(is_multiword({1, 1, 3, 3, 3, 4, 2, 2}, {1, 3, 4, 2}));
    CHECK(!is_multiword({3, 4, 4, 4, 2}, {1, 3, 4, 2}));
    CHECK(!is_multiword({1, 1, 3, 3, 2, 4, 4}, {1, 3, 4, 2}));
    CHECK(is_multiword({1, 3, 4, 2}, {1, 3, 4, 2}));
    CHECK(is_multiword({}, {}));
    CHECK(!is_multiword({}, {1}));
    CHECK(!is_multiword({1}, {}));
    // Repeated letters in the target: both copies must be visited.
    CHECK(is_multiword({1, 1, 2, 1}, {1, 2, 1}));
    CHECK(!is_multiword({1, 2, 2, 1}, {1, 2, 1, 2}));
}

TEST_CASE("shift") {
    CHECK(shift({2, 1}, 4) == Word{6, 5});
    CHECK(shift({1, 3, 4, 2}, 0) == Word{1, 3, 4, 2});
    CHECK(shift({1, 3, 4, 2}, 4) == Word{5, 7, 8, 6});
}

TEST_CASE("multishuffles at small lengths") {
    CHECK(multishuffles({1}, {2}, 2) == std::vector<Word>{{1, 2}, {2, 1}});
    CHECK(multishuffles({1}, {2}, 3) == std::vector<Word>{{1, 2, 1}, {2, 1, 2}});
    CHECK(multishuffles({1}, {2}, 1).empty());

    auto length4 = multishuffles({1}, {3, 4, 2}, 4);
    CHECK(length4 == std::vector<Word>{{1, 3, 4, 2}, {3, 1, 4, 2}, {3, 4, 1, 2}, {3, 4, 2, 1}});

    CHECK_THROWS_AS(multishuffles({1, 2}, {2, 3}, 4), std::invalid_argument);
    CHECK_THROWS_AS(multishuffles({1, 1}, {2}, 3), std::invalid_argument);
}

TEST_CASE("a length-11 multishuffle with letter repetitions") {
    Word v{1, 6, 1, 6, 1, 3, 4, 6, 2, 5, 2};
    auto all = multishuffles({1, 3, 4, 2}, {6, 5}, 11);
    CHECK(std::find(all.begin(), all.end(), v) != all.end());
}

TEST_CASE("multishuffle outputs restrict correctly") {
    Word u{1, 3, 4, 2}, v{6, 5};
    for (int n = 6; n <= 8; ++n) {
        for (const Word& w : multishuffles(u, v, n)) {
            CHECK(is_m_permutation(w));
            Word ru, rv;
            for (int x : w) (x <= 4 ? ru : rv).push_back(x);
            CHECK(is_multiword(ru, u));
            CHECK(is_multiword(rv, v));
        }
    }
}

TEST_CASE("cuut") {
    auto splits = cuut({1, 3, 2});
    REQUIRE(splits.size() == 7);
    CHECK(splits[0] == TensorSplit{{}, {1, 3, 2}});
    CHECK(splits[1] == TensorSplit{{1}, {1, 3, 2}});
    CHECK(splits[2] == TensorSplit{{1}, {3, 2}});
    CHECK(splits[3] == TensorSplit{{1, 3}, {3, 2}});
    CHECK(splits[4] == TensorSplit{{1, 3}, {2}});
    CHECK(splits[5] == TensorSplit{{1, 3, 2}, {2}});
    CHECK(splits[6] == TensorSplit{{1, 3, 2}, {}});

    auto single = cuut({7});
    REQUIRE(single.size() == 3);
    CHECK(single[0] == TensorSplit{{}, {7}});
    CHECK(single[1] == TensorSplit{{7}, {7}});
    CHECK(single[2] == TensorSplit{{7}, {}});

    CHECK(cuut({}).size() == 1);

    for (int n = 0; n <= 8; ++n) {
        Word w(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
        CHECK(static_cast<int>(cuut(w).size()) == 2 * n + 1);
    }
}

namespace {

// The poset from the worked linear multi-extension: 1 below 3 and 4, and 3
// below 2, with elements named by their labels.
LabeledPoset example_poset() {
    return LabeledPoset(4, {{0, 2}, {0, 3}, {2, 1}}, {1, 2, 3, 4});
}

}  // namespace

TEST_CASE("linear multi-extensions") {
    LabeledPoset single(1, {}, {1});
    auto exts = linear_multi_extensions(single, 1);
    REQUIRE(exts.size() == 1);
    CHECK(exts[0][0] == std::vector<int>{1});

    LabeledPoset antichain(2, {}, {1, 2});
    CHECK(linear_multi_extensions(antichain, 2).size() == 2);

    auto by7 = linear_multi_extensions(example_poset(), 7);
    MultiExtension wanted{{1}, {7}, {3, 5}, {2, 4, 6}};
    CHECK(std::find(by7.begin(), by7.end(), wanted) != by7.end());
    for (const auto& ext : by7) {
        std::vector<bool> used(8, false);
        for (const auto& block : ext) {
            CHECK(!block.empty());
            for (std::size_t i = 0; i + 1 < block.size(); ++i)
                CHECK(block[i + 1] > block[i] + 1);
            for (int x : block) {
                CHECK(!used[static_cast<std::size_t>(x)]);
                used[static_cast<std::size_t>(x)] = true;
            }
        }
        for (int x = 1; x <= 7; ++x) CHECK(used[static_cast<std::size_t>(x)]);
    }

    CHECK_THROWS_AS(linear_multi_extensions(antichain, 1), std::invalid_argument);
}

TEST_CASE("multi Jordan-Holder words") {
    auto words = multi_jordan_holder(example_poset(), 7);
    CHECK(std::find(words.begin(), words.end(), Word{1, 4, 3, 4, 3, 4, 2}) != words.end());
    for (const Word& w : words) {
        CHECK(w.size() == 7);
        CHECK(is_m_permutation(w));
        std::set<int> letters(w.begin(), w.end());
        CHECK(letters == std::set<int>{1, 2, 3, 4});
    }

    Word increasing{1, 2, 3};
    auto chain_words = multi_jordan_holder(LabeledPoset::chain(increasing), 3);
    CHECK(chain_words == std::vector<Word>{{1, 2, 3}});

    auto flipped = multi_jordan_holder(LabeledPoset::chain({2, 1}), 2);
    CHECK(flipped == std::vector<Word>{{2, 1}});
}

TEST_CASE("i-extension counts") {
    CHECK(i_extension_count({1, 2}, 3, {1, 2, 3}, 1) == 3);
    CHECK(i_extension_count({1, 2}, 4, {1, 3, 4}, 1) == 0);
    CHECK(i_extension_count({1, 3}, 4, {1, 3}, 0) == 1);
    CHECK(i_extension_count({}, 1, {}, 0) == 1);
    // Size mismatch forces zero.
    CHECK(i_extension_count({1, 2}, 3, {1, 2}, 1) == 0);
    CHECK(i_extension_count({1}, 3, {1, 2, 3}, 1) == 0);
}
