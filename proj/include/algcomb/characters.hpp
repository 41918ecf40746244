#pragma once

// Irreducible symmetric group characters via the Murnaghan-Nakayama
// border-strip recursion, exact in 64-bit integers (enough through n = 22,
// where |chi| peaks near 5.5e9).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "algcomb/partition.hpp"

namespace algcomb {

// Applies fn(lambda', height) for every way of removing a border strip of
// size L from lambda. Uses beta-numbers: B_i = lambda_i + (r - i); removing a
// strip moves one beta down by L, valid iff the target is free; the strip
// height is the number of betas jumped over.
inline void for_each_border_strip_removal(
    const Partition& lam, int L,
    const std::function<void(const Partition&, int)>& fn) {
    const int r = lam.num_parts();
    std::vector<int> beta(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) beta[static_cast<std::size_t>(i)] = lam[i] + (r - 1 - i);
    for (int i = 0; i < r; ++i) {
        int b = beta[static_cast<std::size_t>(i)] - L;
        if (b < 0) continue;
        bool occupied = false;
        int height = 0;
        for (int j = 0; j < r; ++j) {
            if (j == i) continue;
            int bj = beta[static_cast<std::size_t>(j)];
            if (bj == b) {
                occupied = true;
                break;
            }
            if (bj > b && bj < beta[static_cast<std::size_t>(i)]) ++height;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[static_cast<std::size_t>(i)] = b;
        std::sort(nb.begin(), nb.end(), std::greater<>());
        std::vector<int> parts;
        for (int j = 0; j < r; ++j) {
            int p = nb[static_cast<std::size_t>(j)] - (r - 1 - j);
            if (p > 0) parts.push_back(p);
        }
        fn(Partition(std::move(parts)), height);
    }
}

namespace detail {
inline long long add_checked(long long a, long long b) {
    long long out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("character arithmetic overflowed 64 bits");
    return out;
}
inline long long mul_checked(long long a, long long b) {
    long long out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("character arithmetic overflowed 64 bits");
    return out;
}
}  // namespace detail

// Single-query evaluator with an insert-only memo keyed on (lambda, mu).
// Always strips the largest remaining part of mu.
class CharacterEvaluator {
public:
    long long value(const Partition& lam, const Partition& mu) {
        if (lam.sum() != mu.sum())
            throw std::invalid_argument("character: lambda and mu must partition the same n");
        return eval(lam, mu);
    }

private:
    long long eval(const Partition& lam, const Partition& mu) {
        if (lam.empty()) return 1;  // chi of the empty partition pair
        auto key = std::make_pair(lam, mu);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const int L = mu[0];
        std::vector<int> tail(mu.parts().begin() + 1, mu.parts().end());
        Partition mu_rest(std::move(tail));
        long long acc = 0;
        for_each_border_strip_removal(lam, L, [&](const Partition& rest, int height) {
            long long term = eval(rest, mu_rest);
            acc = detail::add_checked(acc, (height % 2 == 0) ? term : -term);
        });
        memo_.emplace(std::move(key), acc);
        return acc;
    }

    std::map<std::pair<Partition, Partition>, long long> memo_;
};

inline long long character(const Partition& lam, const Partition& mu) {
    CharacterEvaluator ev;
    return ev.value(lam, mu);
}

// Full character tables for all sizes 0..n, computed bottom-up over the
// lexicographic partition lists. table(k)[l][m] = chi^{lambda_l}_{mu_m}.
class CharacterTable {
public:
    explicit CharacterTable(int n) : n_(n), parts_(static_cast<std::size_t>(n) + 1) {
        for (int k = 0; k <= n; ++k) parts_[static_cast<std::size_t>(k)] = partitions_of(k);
        tables_.resize(static_cast<std::size_t>(n) + 1);
        tables_[0] = {{1}};
        for (int k = 1; k <= n; ++k) {
            const auto& pk = parts_[static_cast<std::size_t>(k)];
            auto& tk = tables_[static_cast<std::size_t>(k)];
            tk.assign(pk.size(), std::vector<long long>(pk.size(), 0));
            for (std::size_t m = 0; m < pk.size(); ++m) {
                const Partition& mu = pk[m];
                const int L = mu[0];
                std::vector<int> tail(mu.parts().begin() + 1, mu.parts().end());
                const std::size_t rest_idx = index_of(k - L, Partition(std::move(tail)));
                for (std::size_t l = 0; l < pk.size(); ++l) {
                    long long acc = 0;
                    for_each_border_strip_removal(pk[l], L, [&](const Partition& rest, int height) {
                        long long term =
                            tables_[static_cast<std::size_t>(k - L)][index_of(k - L, rest)][rest_idx];
                        acc = detail::add_checked(acc, (height % 2 == 0) ? term : -term);
                    });
                    tk[l][m] = acc;
                }
            }
        }
    }

    int n() const { return n_; }
    const std::vector<Partition>& partitions(int k) const {
        return parts_[static_cast<std::size_t>(k)];
    }
    long long value(int k, std::size_t lam_idx, std::size_t mu_idx) const {
        return tables_[static_cast<std::size_t>(k)][lam_idx][mu_idx];
    }
    long long value(const Partition& lam, const Partition& mu) const {
        if (lam.sum() != mu.sum())
            throw std::invalid_argument("character: lambda and mu must partition the same n");
        int k = lam.sum();
        return value(k, index_of(k, lam), index_of(k, mu));
    }

    std::size_t index_of(int k, const Partition& p) const {
        const auto& pk = parts_[static_cast<std::size_t>(k)];
        auto it = std::lower_bound(pk.begin(), pk.end(), p);
        return static_cast<std::size_t>(it - pk.begin());
    }

private:
    int n_;
    std::vector<std::vector<Partition>> parts_;
    std::vector<std::vector<std::vector<long long>>> tables_;
};

// n!/z_mu, the size of the conjugacy class of cycle type mu.
// Exact through n = 20; throws on 64-bit overflow beyond that.
inline long long class_size(const Partition& mu) {
    const int n = mu.sum();
    long long num = 1;
    for (int k = 2; k <= n; ++k) num = detail::mul_checked(num, k);
    long long z = 1;
    int prev = -1, mult = 0;
    for (int i = 0; i < mu.num_parts(); ++i) {
        int p = mu[i];
        if (p == prev)
            ++mult;
        else {
            prev = p;
            mult = 1;
        }
        z *= static_cast<long long>(p) * mult;
    }
    return num / z;
}

}  // namespace algcomb
