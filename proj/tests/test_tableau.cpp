#include <catch2/catch_amalgamated.hpp>

#include "algcomb/tableau.hpp"

using namespace algcomb;

TEST_CASE("tableau validation", "[tableau]") {
    CHECK_NOTHROW(Tableau({{1, 2, 4}, {3, 5}}, TableauFlavor::standard));
    CHECK_THROWS_AS(Tableau({{1, 3, 2}}, TableauFlavor::standard), std::invalid_argument);
    CHECK_THROWS_AS(Tableau({{1, 2}, {2, 3}}, TableauFlavor::standard), std::invalid_argument);
    // weak rows allowed only for semistandard
    CHECK_THROWS_AS(Tableau({{1, 1}}, TableauFlavor::standard), std::invalid_argument);
    CHECK_NOTHROW(Tableau({{1, 1}, {2, 2}}, TableauFlavor::semistandard));
    // strict columns in both flavors
    CHECK_THROWS_AS(Tableau({{1, 1}, {1, 2}}, TableauFlavor::semistandard), std::invalid_argument);
    // rows must form a partition shape
    CHECK_THROWS_AS(Tableau({{1}, {2, 3}}, TableauFlavor::standard), std::invalid_argument);
}

TEST_CASE("SYT enumeration matches hook length formula", "[tableau]") {
    long long direct = 0;
    for_each_syt(Partition({3, 2, 2}), [&](const Tableau& t) {
        CHECK(t.check(TableauFlavor::standard));
        ++direct;
    });
    CHECK(direct == 21);
    CHECK(syt_count(Partition({3, 2, 2})) == 21);

    for (int n = 1; n <= 7; ++n)
        for (const auto& shape : partitions_of(n)) {
            long long count = 0;
            for_each_syt(shape, [&](const Tableau&) { ++count; });
            CHECK(count == syt_count(shape));
        }
}

TEST_CASE("SSYT enumeration", "[tableau]") {
    // 2x2 with entries <= 4: 20 fillings
    CHECK(count_ssyt(Partition({2, 2}), 4) == 20);
    long long all_valid = 0;
    for_each_ssyt(Partition({2, 2}), 4, [&](const Tableau& t) {
        CHECK(t.check(TableauFlavor::semistandard));
        ++all_valid;
    });
    CHECK(all_valid == 20);
    // single column of height h with entries <= m: binomial(m, h)
    CHECK(count_ssyt(Partition({1, 1, 1}), 5) == 10);
    // single row: multisets
    CHECK(count_ssyt(Partition({3}), 3) == 10);
}
