#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "algcomb/schubert.hpp"

using namespace algcomb;

namespace {

// Monk's rule: S_{s_r} * S_w = sum of S_{w t_{ab}} over a <= r < b with
// l(w t_{ab}) = l(w) + 1.
std::map<Permutation, long long> monk_oracle(int r, const Permutation& w, int ambient) {
    std::map<Permutation, long long> out;
    std::vector<int> line = w.oneline();
    line.resize(static_cast<std::size_t>(ambient));
    for (int i = w.n(); i < ambient; ++i) line[static_cast<std::size_t>(i)] = i + 1;
    Permutation we = Permutation::unchecked(line);
    for (int a = 1; a <= r; ++a)
        for (int b = r + 1; b <= ambient; ++b) {
            Permutation wt = swap_positions(we, a, b);
            if (length(wt) == length(we) + 1)
                out[Permutation::unchecked(trim_fixed_tail(wt.oneline()))] += 1;
        }
    return out;
}

}  // namespace

TEST_CASE("schubert base cases", "[schubert]") {
    CHECK(schubert_poly(Permutation::identity(3)) == MultiPolynomial::constant(1));
    // S_{s_1} = x1
    CHECK(schubert_poly(Permutation({2, 1, 3})) == MultiPolynomial::monomial({1}, 1));
    // S_{s_r} = x1 + ... + x_r; the 1 2 3 5 4 case is s_4
    MultiPolynomial expect;
    for (int i = 0; i < 4; ++i) {
        std::vector<int> e(static_cast<std::size_t>(i) + 1, 0);
        e.back() = 1;
        expect.add_term(e, 1);
    }
    CHECK(schubert_poly(Permutation({1, 2, 3, 5, 4})) == expect);
    // staircase monomial for the longest element
    CHECK(schubert_poly(Permutation::longest(4)) == MultiPolynomial::monomial({3, 2, 1}, 1));
}

TEST_CASE("schubert polynomial structure", "[schubert]") {
    SchubertCache cache;
    auto trim_zeros = [](std::vector<int> v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
        return v;
    };
    for_each_permutation(5, [&](const Permutation& w) {
        const MultiPolynomial& p = cache.poly(w);
        CHECK(p.homogeneous_degree() == length(w));
        for (const auto& [e, c] : p.terms()) CHECK(c > 0);
        // leading exponent vector is the Lehmer code
        CHECK(p.terms().rbegin()->first == trim_zeros(lehmer_code(w)));
    });
}

TEST_CASE("expansion is the inverse of the basis", "[schubert]") {
    SchubertCache cache;
    for_each_permutation(4, [&](const Permutation& w) {
        auto ex = cache.expand(cache.poly(w));
        REQUIRE(ex.size() == 1);
        CHECK(ex.begin()->first == Permutation::unchecked(trim_fixed_tail(w.oneline())));
        CHECK(ex.begin()->second == 1);
    });
}

TEST_CASE("appendix product identity", "[schubert]") {
    SchubertCache cache;
    Permutation a({1, 2, 3, 5, 4});
    auto ex = cache.expand(cache.poly(a) * cache.poly(a));
    REQUIRE(ex.size() == 2);
    CHECK(ex.at(Permutation({1, 2, 3, 6, 4, 5})) == 1);
    CHECK(ex.at(Permutation({1, 2, 4, 5, 3})) == 1);
    CHECK(cache.structure_constant(a, a, Permutation({1, 2, 3, 6, 4, 5})) == 1);
    // grading mismatch gives zero
    CHECK(cache.structure_constant(a, a, Permutation({1, 2, 3, 5, 4})) == 0);
}

TEST_CASE("Monk's rule oracle over S_4", "[schubert]") {
    SchubertCache cache;
    for (int r = 1; r <= 3; ++r) {
        Permutation sr = Permutation::adjacent_transposition(4, r);
        for_each_permutation(4, [&](const Permutation& w) {
            auto got = cache.expand(cache.poly(sr) * cache.poly(w));
            auto expect = monk_oracle(r, w, 8);
            CHECK(got == expect);
        });
    }
}

TEST_CASE("structure constant stability under embedding", "[schubert]") {
    SchubertCache cache;
    for_each_permutation(4, [&](const Permutation& a) {
        for_each_permutation(4, [&](const Permutation& b) {
            if (length(a) + length(b) > 4) return;  // keep the sweep cheap
            auto ex = cache.expand(cache.poly(a) * cache.poly(b));
            std::vector<int> a5 = a.oneline(), b5 = b.oneline();
            a5.push_back(5);
            b5.push_back(5);
            auto ex5 = cache.expand(cache.poly(Permutation(a5)) * cache.poly(Permutation(b5)));
            CHECK(ex == ex5);
        });
    });
}

TEST_CASE("commutativity on random S_5 pairs", "[schubert]") {
    SchubertCache cache;
    auto s5 = all_permutations(5);
    SplitMix64 rng(99);
    for (int t = 0; t < 200; ++t) {
        const Permutation& a = s5[rng.below(s5.size())];
        const Permutation& b = s5[rng.below(s5.size())];
        const Permutation& g = s5[rng.below(s5.size())];
        CHECK(cache.structure_constant(a, b, g) == cache.structure_constant(b, a, g));
    }
}

TEST_CASE("dataset sampler for n=4", "[schubert]") {
    std::map<long long, long long> hist;
    long long parity_hits = 0, total = 0;
    std::set<std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>> seen;
    sample_schubert_dataset(4, 2024, [&](const SchubertTriple& t) {
        ++hist[t.coefficient];
        ++total;
        // grading built in for both classes
        CHECK(length(t.gamma) == length(t.alpha) + length(t.beta));
        CHECK(seen.insert({t.alpha.oneline(), t.beta.oneline(), t.gamma.oneline()}).second);
        // parity predicate from the program-synthesis case study
        int parity = (length(t.alpha) + length(t.beta) + length(t.gamma)) % 2;
        bool predicted_nonzero = (parity == 0);
        if (predicted_nonzero == (t.coefficient != 0)) ++parity_hits;
    });
    CHECK(hist[1] == 1053);  // published nonzero count for n = 4
    CHECK(hist[0] >= 1000);  // approximately balanced
    CHECK(hist[0] <= 1053);
    // the parity predicate must not beat chance + 5%
    double chance = static_cast<double>(std::max(hist[0], hist[1])) / static_cast<double>(total);
    CHECK(static_cast<double>(parity_hits) / static_cast<double>(total) <= chance + 0.05);
}
