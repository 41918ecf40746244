#pragma once

// Schubert polynomials by divided differences descending from the staircase
// monomial, expansion of products in the Schubert basis by lex-leading-term
// peeling, structure constants, and the grading-safe dataset sampler.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "algcomb/permutation.hpp"
#include "algcomb/rng.hpp"

namespace algcomb {

// Strips fixed points n, n-1, ... so that S_n -> S_{n+1} embeddings of the
// same permutation share a representative.
inline std::vector<int> trim_fixed_tail(std::vector<int> line) {
    while (!line.empty() && line.back() == static_cast<int>(line.size())) line.pop_back();
    return line;
}

// Compares exponent vectors from the last variable down (implicit zero
// padding). The maximum of a Schubert polynomial under this order is the
// Lehmer-code monomial of its permutation, which is what makes the
// peel-off expansion terminate.
struct ExponentOrder {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        std::size_t m = std::max(a.size(), b.size());
        for (std::size_t k = m; k-- > 0;) {
            int av = k < a.size() ? a[k] : 0;
            int bv = k < b.size() ? b[k] : 0;
            if (av != bv) return av < bv;
        }
        return false;
    }
};

// Sparse polynomial in x_1, x_2, ...: exponent vector (no trailing zeros)
// -> integer coefficient.
class MultiPolynomial {
public:
    using Exponents = std::vector<int>;
    using Terms = std::map<Exponents, long long, ExponentOrder>;

    MultiPolynomial() = default;
    static MultiPolynomial constant(long long c) {
        MultiPolynomial p;
        if (c != 0) p.terms_[{}] = c;
        return p;
    }
    static MultiPolynomial monomial(Exponents e, long long c) {
        MultiPolynomial p;
        while (!e.empty() && e.back() == 0) e.pop_back();
        if (c != 0) p.terms_[std::move(e)] = c;
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    long long coeff(Exponents e) const {
        while (!e.empty() && e.back() == 0) e.pop_back();
        auto it = terms_.find(e);
        return it == terms_.end() ? 0 : it->second;
    }

    void add_term(const Exponents& e, long long c) {
        if (c == 0) return;
        Exponents key = e;
        while (!key.empty() && key.back() == 0) key.pop_back();
        auto [it, inserted] = terms_.try_emplace(std::move(key), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MultiPolynomial& operator+=(const MultiPolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPolynomial& add_scaled(const MultiPolynomial& o, long long s) {
        for (const auto& [e, c] : o.terms_) add_term(e, c * s);
        return *this;
    }

    friend MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b) {
        MultiPolynomial out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(std::max(ea.size(), eb.size()), 0);
                for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
                for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }

    bool operator==(const MultiPolynomial&) const = default;

    // total degree of every monomial when homogeneous; -1 when zero
    int homogeneous_degree() const {
        int deg = -1;
        for (const auto& [e, c] : terms_) {
            int d = 0;
            for (int v : e) d += v;
            if (deg < 0)
                deg = d;
            else if (deg != d)
                throw std::logic_error("polynomial is not homogeneous");
        }
        return deg;
    }

private:
    Terms terms_;
};

// Divided difference: (f - s_i f) / (x_i - x_{i+1}).
inline MultiPolynomial divided_difference(const MultiPolynomial& f, int i) {
    MultiPolynomial out;
    for (const auto& [e, c] : f.terms()) {
        int p = i - 1 < static_cast<int>(e.size()) ? e[static_cast<std::size_t>(i - 1)] : 0;
        int q = i < static_cast<int>(e.size()) ? e[static_cast<std::size_t>(i)] : 0;
        if (p == q) continue;
        std::vector<int> base(e);
        if (static_cast<int>(base.size()) <= i) base.resize(static_cast<std::size_t>(i) + 1, 0);
        // (x^p y^q - x^q y^p)/(x-y) = sign * sum of x^a y^b, a+b = p+q-1,
        // min(p,q) <= a,b <= max(p,q)-1
        int lo = std::min(p, q), hi = std::max(p, q);
        long long sign = (p > q) ? c : -c;
        for (int a = lo; a <= hi - 1; ++a) {
            base[static_cast<std::size_t>(i - 1)] = a;
            base[static_cast<std::size_t>(i)] = p + q - 1 - a;
            out.add_term(base, sign);
        }
    }
    return out;
}

// Schubert polynomials with a shared memo over one-line keys. Computes
// S_w = del_i S_{w s_i} walking up the first-ascent chain to the staircase
// monomial S_{w0}.
class SchubertCache {
public:
    const MultiPolynomial& poly(const Permutation& w) {
        auto key = trim_fixed_tail(w.oneline());
        return poly_impl(key);
    }

    // Expansion of F in the Schubert basis: peel leading monomials under
    // ExponentOrder; the leading exponent vector is the Lehmer code of its
    // permutation. Keys are permutations trimmed to their minimal symmetric
    // group.
    std::map<Permutation, long long> expand(MultiPolynomial f) {
        std::map<Permutation, long long> out;
        while (!f.is_zero()) {
            auto lead = f.terms().rbegin();
            const std::vector<int>& code = lead->first;
            long long c = lead->second;
            if (c < 0) throw std::logic_error("negative leading coefficient in Schubert expansion");
            std::vector<int> gamma = trim_fixed_tail(decode_lehmer(code).oneline());
            f.add_scaled(poly_impl(gamma), -c);
            out[Permutation::unchecked(std::move(gamma))] = c;
        }
        return out;
    }

    long long structure_constant(const Permutation& alpha, const Permutation& beta,
                                 const Permutation& gamma) {
        if (length(gamma) != length(alpha) + length(beta)) return 0;  // grading
        MultiPolynomial prod = poly(alpha) * poly(beta);
        auto expansion = expand(std::move(prod));
        auto key = Permutation::unchecked(trim_fixed_tail(gamma.oneline()));
        auto it = expansion.find(key);
        return it == expansion.end() ? 0 : it->second;
    }

private:
    const MultiPolynomial& poly_impl(const std::vector<int>& key) {
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const int n = static_cast<int>(key.size());
        MultiPolynomial result;
        if (n <= 1) {
            result = MultiPolynomial::constant(1);
        } else {
            // first ascent; none means key is the longest element: staircase
            int ascent = 0;
            for (int i = 1; i < n; ++i)
                if (key[static_cast<std::size_t>(i - 1)] < key[static_cast<std::size_t>(i)]) {
                    ascent = i;
                    break;
                }
            if (ascent == 0) {
                std::vector<int> stair(static_cast<std::size_t>(n - 1));
                for (int i = 0; i < n - 1; ++i) stair[static_cast<std::size_t>(i)] = n - 1 - i;
                result = MultiPolynomial::monomial(stair, 1);
            } else {
                std::vector<int> up = key;
                std::swap(up[static_cast<std::size_t>(ascent - 1)], up[static_cast<std::size_t>(ascent)]);
                result = divided_difference(poly_impl(up), ascent);
            }
        }
        return memo_.emplace(key, std::move(result)).first->second;
    }

    std::map<std::vector<int>, MultiPolynomial> memo_;
};

inline MultiPolynomial schubert_poly(const Permutation& w) {
    SchubertCache cache;
    return cache.poly(w);
}

inline std::map<Permutation, long long> expand_in_schubert_basis(const MultiPolynomial& f) {
    SchubertCache cache;
    return cache.expand(f);
}

inline long long structure_constant(const Permutation& alpha, const Permutation& beta,
                                    const Permutation& gamma) {
    SchubertCache cache;
    return cache.structure_constant(alpha, beta, gamma);
}

struct SchubertTriple {
    Permutation alpha, beta, gamma;
    long long coefficient;
};

// All nonzero triples from S_n x S_n products plus grading-matched sampled
// zeros: a geometric(1/2) number of random transpositions walks gamma to a
// gamma' of the same length with vanishing coefficient; up to 100 attempts
// per positive, then the positive is skipped for negative generation.
inline void sample_schubert_dataset(int n, uint64_t seed,
                                    const std::function<void(const SchubertTriple&)>& fn) {
    if (n < 2) throw std::invalid_argument("schubert dataset requires n >= 2");
    SchubertCache cache;
    auto group = all_permutations(n);
    uint64_t pair_index = 0;
    for (const auto& alpha : group)
        for (const auto& beta : group) {
            SplitMix64 rng(seed ^ (0x9e3779b97f4a7c15ULL * ++pair_index));
            auto expansion = cache.expand(cache.poly(alpha) * cache.poly(beta));
            const int target_len = length(alpha) + length(beta);
            std::set<Permutation> negatives;
            for (const auto& [gamma, c] : expansion) {
                fn({alpha, beta, gamma, c});
                // negative companion with the same grading, walked inside the
                // ambient group where all expansion terms live
                const int m = std::max(2 * n - 1, gamma.n());
                for (int attempt = 0; attempt < 100; ++attempt) {
                    std::vector<int> g(gamma.oneline());
                    g.resize(static_cast<std::size_t>(m));
                    for (int i = gamma.n(); i < m; ++i) g[static_cast<std::size_t>(i)] = i + 1;
                    Permutation walk = Permutation::unchecked(std::move(g));
                    int steps = 1 + rng.geometric_half();
                    for (int t = 0; t < steps; ++t) {
                        int a = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(m)));
                        int b = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(m)));
                        if (a != b) walk = swap_positions(walk, a, b);
                    }
                    if (length(walk) != target_len) continue;
                    Permutation trimmed = Permutation::unchecked(trim_fixed_tail(walk.oneline()));
                    if (trimmed == gamma || expansion.count(trimmed)) continue;
                    if (!negatives.insert(trimmed).second) continue;
                    fn({alpha, beta, trimmed, 0});
                    break;
                }
            }
        }
}

}  // namespace algcomb
