#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "algcomb/characters.hpp"
#include "algcomb/permutation.hpp"

using namespace algcomb;

namespace {

Partition cycle_type(const Permutation& w) {
    std::vector<char> seen(static_cast<std::size_t>(w.n()) + 1, 0);
    std::vector<int> cycles;
    for (int i = 1; i <= w.n(); ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        int len = 0, j = i;
        while (!seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = 1;
            j = w(j);
            ++len;
        }
        cycles.push_back(len);
    }
    std::sort(cycles.rbegin(), cycles.rend());
    return Partition(std::move(cycles));
}

int sign_of_class(const Partition& mu) {
    return (mu.sum() - mu.num_parts()) % 2 == 0 ? 1 : -1;
}

}  // namespace

TEST_CASE("character spot values", "[characters]") {
    CHECK(character(Partition({3, 1, 1}), Partition({2, 2, 1})) == -2);
    // trivial representation
    for (const auto& mu : partitions_of(6)) CHECK(character(Partition({6}), mu) == 1);
    // sign character
    CHECK(character(Partition({1, 1, 1, 1}), Partition({2, 1, 1})) == -1);
    for (const auto& mu : partitions_of(5))
        CHECK(character(Partition({1, 1, 1, 1, 1}), mu) == sign_of_class(mu));
    CHECK_THROWS_AS(character(Partition({2}), Partition({3})), std::invalid_argument);
}

TEST_CASE("character at the identity class is the SYT count", "[characters]") {
    Partition identity_class({1, 1, 1, 1, 1, 1, 1});
    for (const auto& lam : partitions_of(7))
        CHECK(character(lam, identity_class) == syt_count(lam));
}

TEST_CASE("standard representation row for n=3", "[characters]") {
    // chi of the standard representation equals (#fixed points - 1)
    CharacterTable table(3);
    const auto& ps = partitions_of(3);
    std::map<Partition, long long> expected;
    for_each_permutation(3, [&](const Permutation& w) {
        int fixed = 0;
        for (int i = 1; i <= 3; ++i)
            if (w(i) == i) ++fixed;
        expected[cycle_type(w)] = fixed - 1;
    });
    std::vector<long long> row;
    for (const auto& mu : ps) row.push_back(table.value(Partition({2, 1}), mu));
    // classes in lex order: (1,1,1), (2,1), (3)
    CHECK(row == std::vector<long long>{2, 0, -1});
    for (const auto& mu : ps) CHECK(table.value(Partition({2, 1}), mu) == expected[mu]);
}

TEST_CASE("class sizes", "[characters]") {
    CHECK(class_size(Partition({1, 1, 1})) == 1);
    // count n-cycles brute force
    for (int n = 2; n <= 6; ++n) {
        long long ncycles = 0;
        for_each_permutation(n, [&](const Permutation& w) {
            if (cycle_type(w) == Partition({n})) ++ncycles;
        });
        CHECK(class_size(Partition({n})) == ncycles);
        CHECK(ncycles == factorial(n - 1));
    }
    // class equation
    for (int n = 1; n <= 10; ++n) {
        long long total = 0;
        for (const auto& mu : partitions_of(n)) total += class_size(mu);
        CHECK(total == factorial(n));
    }
    // brute-force class sizes for n = 6
    std::map<Partition, long long> counts;
    for_each_permutation(6, [&](const Permutation& w) { ++counts[cycle_type(w)]; });
    for (const auto& mu : partitions_of(6)) CHECK(class_size(mu) == counts[mu]);
}

TEST_CASE("table and evaluator agree", "[characters]") {
    CharacterTable table(8);
    CharacterEvaluator ev;
    const auto& ps = partitions_of(8);
    for (const auto& lam : ps)
        for (const auto& mu : ps) CHECK(table.value(lam, mu) == ev.value(lam, mu));
}

TEST_CASE("orthogonality and symmetry", "[characters]") {
    for (int n = 1; n <= 8; ++n) {
        CharacterTable table(n);
        const auto& ps = partitions_of(n);
        std::vector<long long> sizes;
        for (const auto& mu : ps) sizes.push_back(class_size(mu));
        for (std::size_t a = 0; a < ps.size(); ++a)
            for (std::size_t b = a; b < ps.size(); ++b) {
                long long dot = 0;
                for (std::size_t m = 0; m < ps.size(); ++m)
                    dot += sizes[m] * table.value(n, a, m) * table.value(n, b, m);
                CHECK(dot == (a == b ? factorial(n) : 0));
            }
        // sum over lambda of chi(identity)^2 = n!
        std::size_t id_idx = table.index_of(n, ps.front());
        REQUIRE(ps.front() == Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
        long long sq = 0;
        for (std::size_t l = 0; l < ps.size(); ++l) {
            long long v = table.value(n, l, id_idx);
            sq += v * v;
        }
        CHECK(sq == factorial(n));
        // conjugation symmetry
        for (const auto& lam : ps)
            for (const auto& mu : ps)
                CHECK(table.value(lam.conjugate(), mu) ==
                      sign_of_class(mu) * table.value(lam, mu));
    }
}

TEST_CASE("partition count for n=18 squares to the published table size", "[characters]") {
    CHECK(partitions_of(18).size() == 385);
    CHECK(385LL * 385LL == 148225LL);  // 118,580 train + 29,645 test
}
