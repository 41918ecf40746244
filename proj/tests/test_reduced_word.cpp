#include <catch2/catch_amalgamated.hpp>

#include "algcomb/partition.hpp"
#include "algcomb/reduced_word.hpp"

using namespace algcomb;

TEST_CASE("word evaluation", "[reduced_word]") {
    // sigma = s1 s2 = 3 1 2, built right-to-left
    CHECK(evaluate_word(3, {1, 2}) == Permutation({3, 1, 2}));
    CHECK(evaluate_word(3, {}) == Permutation::identity(3));
    CHECK_THROWS_AS(evaluate_word(3, {3}), std::invalid_argument);
    CHECK(is_reduced(3, {1, 2}));
    CHECK_FALSE(is_reduced(3, {1, 1}));
}

TEST_CASE("reduced word enumeration", "[reduced_word]") {
    // #reduced words of the longest element equals the number of standard
    // tableaux of staircase shape
    CHECK(reduced_words(Permutation::longest(4)).size() ==
          static_cast<std::size_t>(syt_count(Partition({3, 2, 1}))));  // 16
    CHECK(reduced_words(Permutation::longest(5)).size() ==
          static_cast<std::size_t>(syt_count(Partition({4, 3, 2, 1}))));  // 768

    for_each_permutation(5, [&](const Permutation& w) {
        auto words = reduced_words(w);
        CHECK(std::is_sorted(words.begin(), words.end()));
        for (const auto& word : words) {
            CHECK(static_cast<int>(word.size()) == length(w));
            CHECK(evaluate_word(5, word) == w);
        }
    });
}

TEST_CASE("commutation classes", "[reduced_word]") {
    auto classes3 = commutation_classes(Permutation::longest(3));
    REQUIRE(classes3.size() == 2);
    CHECK(classes3[0] == Word{1, 2, 1});
    CHECK(classes3[1] == Word{2, 1, 2});

    CHECK(commutation_classes(Permutation::identity(4)) == std::vector<Word>{Word{}});

    CHECK(commutation_classes(Permutation::longest(4)).size() == 8);
    CHECK(commutation_classes(Permutation::longest(5)).size() == 62);
}

TEST_CASE("canonical words agree with BFS classes", "[reduced_word]") {
    for (int n = 2; n <= 5; ++n) {
        std::vector<Word> canon;
        for_each_longest_element_class(n, [&](const Word& w) { canon.push_back(w); });
        auto classes = commutation_classes(Permutation::longest(n));
        std::sort(canon.begin(), canon.end());
        CHECK(canon == classes);
        for (const auto& w : canon) {
            CHECK(is_commutation_canonical(w));
            CHECK(evaluate_word(n, w) == Permutation::longest(n));
        }
    }
    // class counts for the longest element: 1, 2, 8, 62, 908
    long long count6 = 0;
    for_each_longest_element_class(6, [&](const Word&) { ++count6; });
    CHECK(count6 == 908);
}

TEST_CASE("canonicality predicate", "[reduced_word]") {
    CHECK(is_commutation_canonical({1, 2, 1}));
    CHECK(is_commutation_canonical({2, 1, 2}));
    CHECK_FALSE(is_commutation_canonical({3, 1}));
    CHECK(is_commutation_canonical({1, 3}));
    CHECK(is_commutation_canonical({2, 1}));
}
