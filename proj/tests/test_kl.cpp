#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "algcomb/kl.hpp"

using namespace algcomb;

namespace {

// Independent oracle: R-polynomials by their own recursion, then P by
// inverting the Kazhdan-Lusztig system
//   q^{l(w)-l(x)} P(1/q) - P(q) = sum_{x<z<=w} R_{x,z} P_{z,w}.
struct KlOracle {
    std::map<std::pair<Permutation, Permutation>, IntPolynomial> rmemo, pmemo;
    std::vector<Permutation> group;

    explicit KlOracle(int n) : group(all_permutations(n)) {}

    IntPolynomial r_poly(const Permutation& x, const Permutation& w) {
        if (x == w) return IntPolynomial::one();
        if (!bruhat_leq(x, w)) return {};
        auto key = std::make_pair(x, w);
        if (auto it = rmemo.find(key); it != rmemo.end()) return it->second;
        // first left descent s of w
        Permutation iw = inverse(w);
        int s = 0;
        for (int i = 1; i < w.n(); ++i)
            if (iw(i) > iw(i + 1)) {
                s = i;
                break;
            }
        Permutation sw = compose(Permutation::adjacent_transposition(w.n(), s), w);
        Permutation sx = compose(Permutation::adjacent_transposition(w.n(), s), x);
        IntPolynomial out;
        if (length(sx) < length(x)) {
            out = r_poly(sx, sw);
        } else {
            // (q-1) R_{x,sw} + q R_{sx,sw}
            out = r_poly(x, sw) * IntPolynomial({-1, 1});
            out.add_scaled(r_poly(sx, sw), 1, 1);
        }
        rmemo.emplace(key, out);
        return out;
    }

    IntPolynomial p_poly(const Permutation& x, const Permutation& w) {
        if (x == w) return IntPolynomial::one();
        if (!bruhat_leq(x, w)) return {};
        auto key = std::make_pair(x, w);
        if (auto it = pmemo.find(key); it != pmemo.end()) return it->second;
        IntPolynomial s_sum;
        for (const auto& z : group)
            if (length(z) > length(x) && bruhat_leq(x, z) && bruhat_leq(z, w))
                s_sum = s_sum + r_poly(x, z) * p_poly(z, w);
        int gap = length(w) - length(x);
        std::vector<long long> coeffs;
        for (int j = 0; j <= (gap - 1) / 2; ++j) coeffs.push_back(s_sum.coeff(gap - j));
        IntPolynomial out{std::move(coeffs)};
        pmemo.emplace(key, out);
        return out;
    }
};

}  // namespace

TEST_CASE("polynomial type basics", "[kl]") {
    IntPolynomial z;
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    IntPolynomial p({1, 2, 0});
    CHECK(p.degree() == 1);  // trailing zero trimmed
    CHECK(p.coeff(1) == 2);
    CHECK(p.coeff(7) == 0);
    CHECK((p * IntPolynomial::one()) == p);
    CHECK((p + z) == p);
    CHECK(IntPolynomial::monomial(3, 2).coeffs() == std::vector<long long>{0, 0, 3});
}

TEST_CASE("kl trivial values", "[kl]") {
    KlEngine engine = KlEngine::whole_group(4);
    for_each_permutation(4, [&](const Permutation& w) {
        CHECK(engine.polynomial(w, w).is_one());
        CHECK(engine.polynomial(Permutation::identity(4), w).coeff(0) == 1);
    });
    // vanishing off the order
    CHECK(engine.polynomial(Permutation({2, 1, 4, 3}), Permutation({1, 3, 2, 4})).is_zero());
    CHECK_THROWS_AS(kl_polynomial(Permutation::identity(3), Permutation::identity(4)),
                    std::invalid_argument);
}

TEST_CASE("the first nontrivial pair", "[kl]") {
    // P_{1324,3412} = 1 + q
    KlEngine engine = KlEngine::whole_group(4);
    CHECK(engine.polynomial(Permutation({1, 3, 2, 4}), Permutation({3, 4, 1, 2})).coeffs() ==
          std::vector<long long>{1, 1});
    CHECK(kl_polynomial(Permutation({1, 3, 2, 4}), Permutation({3, 4, 1, 2})).coeffs() ==
          std::vector<long long>{1, 1});
    // P_{e,4231} = 1 + q  (the other singular Schubert variety in S_4)
    CHECK(engine.polynomial(Permutation::identity(4), Permutation({4, 2, 3, 1})).coeffs() ==
          std::vector<long long>{1, 1});
}

TEST_CASE("R-polynomial oracle agreement on all of S_4", "[kl]") {
    KlEngine engine = KlEngine::whole_group(4);
    KlOracle oracle(4);
    for_each_permutation(4, [&](const Permutation& x) {
        for_each_permutation(4, [&](const Permutation& w) {
            CHECK(engine.polynomial(x, w) == oracle.p_poly(x, w));
        });
    });
}

TEST_CASE("R-polynomial oracle agreement on random S_5 pairs", "[kl]") {
    KlEngine engine = KlEngine::whole_group(5);
    KlOracle oracle(5);
    auto s5 = all_permutations(5);
    std::mt19937_64 rng(20240517);
    for (int trial = 0; trial < 1000; ++trial) {
        const Permutation& x = s5[rng() % s5.size()];
        const Permutation& w = s5[rng() % s5.size()];
        CHECK(engine.polynomial(x, w) == oracle.p_poly(x, w));
    }
}

TEST_CASE("kl invariants on S_5", "[kl]") {
    KlEngine engine = KlEngine::whole_group(5);
    long long comparable = 0, constant_one = 0;
    engine.sweep([&](int32_t xi, int32_t wi, const IntPolynomial& p) {
        Permutation x = engine.permutation_of(xi), w = engine.permutation_of(wi);
        bool leq = bruhat_leq(x, w);
        if (leq) ++comparable;
        if (p.coeff(0) == 1) ++constant_one;
        if (!leq) {
            CHECK(p.is_zero());
        } else {
            CHECK(p.coeff(0) == 1);
            int gap = length(w) - length(x);
            CHECK(p.degree() <= std::max(0, (gap - 1) / 2));
            if (gap <= 2) CHECK(p.is_one());
            for (long long c : p.coeffs()) CHECK(c >= 0);
        }
    });
    CHECK(comparable == constant_one);
    CHECK(comparable == 3781);  // published table sums: 3,024 + 757
}

TEST_CASE("n=5 coefficient histograms match the published sums", "[kl]") {
    KlEngine engine = KlEngine::whole_group(5);
    std::map<long long, long long> h0, h1, h2;
    engine.sweep([&](int32_t, int32_t, const IntPolynomial& p) {
        ++h0[p.coeff(0)];
        ++h1[p.coeff(1)];
        ++h2[p.coeff(2)];
    });
    CHECK(h0[0] == 10619);
    CHECK(h0[1] == 3781);
    CHECK(h1[0] == 14012);
    CHECK(h1[1] == 344);
    CHECK(h1[2] == 44);
    CHECK(h2[0] == 14390);
    CHECK(h2[1] == 10);
}

TEST_CASE("mu coefficients", "[kl]") {
    KlEngine engine = KlEngine::whole_group(4);
    auto s4 = all_permutations(4);
    for (const auto& x : s4)
        for (const auto& w : s4) {
            if (x == w || !bruhat_leq(x, w)) continue;
            int gap = length(w) - length(x);
            long long m = engine.mu(x, w);
            if (gap == 1) CHECK(m == 1);
            if (gap % 2 == 0) CHECK(m == 0);
            // post-hoc recomputation equals the polynomial's top permitted term
            if (gap % 2 == 1) CHECK(m == engine.polynomial(x, w).coeff((gap - 1) / 2));
        }
    CHECK_THROWS_AS(engine.mu(Permutation({2, 1, 3, 4}), Permutation::identity(4)),
                    std::invalid_argument);
    CHECK(mu_coefficient(Permutation::identity(4), Permutation({4, 2, 3, 1})) == 0);
}

TEST_CASE("appendix ten-letter pair", "[kl][slow]") {
    Permutation x = Permutation::from_zero_indexed({0, 2, 1, 3, 5, 4, 6, 9, 7, 8});
    Permutation w = Permutation::from_zero_indexed({2, 3, 0, 5, 9, 6, 7, 8, 1, 4});
    CHECK(kl_polynomial(x, w).coeffs() == std::vector<long long>{1, 6, 13, 12, 4});
}
