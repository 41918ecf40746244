#pragma once

// Permutations of {1..n} in one-line notation, with the statistics the rest
// of the library is built on: length, Lehmer code, descents, 3412 patterns,
// Bruhat order, lexicographic enumeration.

#include <array>
#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace algcomb {

class Permutation {
public:
    Permutation() = default;  // the unique permutation of the empty set

    explicit Permutation(std::vector<int> oneline) : w_(std::move(oneline)) {
        const int n = static_cast<int>(w_.size());
        std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
        for (int v : w_) {
            if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("one-line notation must be a rearrangement of 1..n");
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> w(static_cast<std::size_t>(n));
        std::iota(w.begin(), w.end(), 1);
        return unchecked(std::move(w));
    }

    // n n-1 ... 1, the longest element
    static Permutation longest(int n) {
        std::vector<int> w(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
        return unchecked(std::move(w));
    }

    // s_i: swaps i and i+1 (1 <= i <= n-1)
    static Permutation adjacent_transposition(int n, int i) {
        if (i < 1 || i >= n) throw std::invalid_argument("adjacent transposition index out of range");
        Permutation w = identity(n);
        std::swap(w.w_[static_cast<std::size_t>(i - 1)], w.w_[static_cast<std::size_t>(i)]);
        return w;
    }

    // Values given 0-indexed (file formats); internal representation is 1-indexed.
    static Permutation from_zero_indexed(const std::vector<int>& z) {
        std::vector<int> w(z.size());
        for (std::size_t i = 0; i < z.size(); ++i) w[i] = z[i] + 1;
        return Permutation(std::move(w));
    }

    static Permutation unchecked(std::vector<int> oneline) {
        Permutation p;
        p.w_ = std::move(oneline);
        return p;
    }

    int n() const { return static_cast<int>(w_.size()); }
    int operator()(int i) const { return w_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& oneline() const { return w_; }

    std::vector<int> zero_indexed() const {
        std::vector<int> z(w_.size());
        for (std::size_t i = 0; i < w_.size(); ++i) z[i] = w_[i] - 1;
        return z;
    }

    bool is_identity() const {
        for (int i = 1; i <= n(); ++i)
            if ((*this)(i) != i) return false;
        return true;
    }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> w_;
};

// (u o v)(i) = u(v(i))
inline Permutation compose(const Permutation& u, const Permutation& v) {
    if (u.n() != v.n()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> w(static_cast<std::size_t>(u.n()));
    for (int i = 1; i <= u.n(); ++i) w[static_cast<std::size_t>(i - 1)] = u(v(i));
    return Permutation::unchecked(std::move(w));
}

inline Permutation inverse(const Permutation& w) {
    std::vector<int> inv(static_cast<std::size_t>(w.n()));
    for (int i = 1; i <= w.n(); ++i) inv[static_cast<std::size_t>(w(i) - 1)] = i;
    return Permutation::unchecked(std::move(inv));
}

// Number of inversions; equals the letter count of any reduced word.
inline int length(const Permutation& w) {
    int inv = 0;
    for (int i = 1; i <= w.n(); ++i)
        for (int j = i + 1; j <= w.n(); ++j)
            if (w(i) > w(j)) ++inv;
    return inv;
}

// Lehmer code: c_i = #{j > i : w(j) < w(i)}
inline std::vector<int> lehmer_code(const Permutation& w) {
    std::vector<int> code(static_cast<std::size_t>(w.n()));
    for (int i = 1; i <= w.n(); ++i) {
        int c = 0;
        for (int j = i + 1; j <= w.n(); ++j)
            if (w(j) < w(i)) ++c;
        code[static_cast<std::size_t>(i - 1)] = c;
    }
    return code;
}

// Inverse of lehmer_code, accepting any non-negative integer sequence
// (trailing zeros ignored): the result lives in S_m for the least adequate m.
inline Permutation decode_lehmer(const std::vector<int>& code) {
    for (int c : code)
        if (c < 0) throw std::invalid_argument("Lehmer code entries must be non-negative");
    int m = 0;
    for (std::size_t i = 0; i < code.size(); ++i)
        m = std::max(m, static_cast<int>(i) + 1 + code[i]);
    std::vector<int> avail(static_cast<std::size_t>(m));
    std::iota(avail.begin(), avail.end(), 1);
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i) {
        int c = i < code.size() ? code[i] : 0;
        w.push_back(avail[static_cast<std::size_t>(c)]);
        avail.erase(avail.begin() + c);
    }
    return Permutation::unchecked(std::move(w));
}

// Descent positions i with w(i) > w(i+1), 1-indexed.
inline std::vector<int> descent_set(const Permutation& w) {
    std::vector<int> d;
    for (int i = 1; i < w.n(); ++i)
        if (w(i) > w(i + 1)) d.push_back(i);
    return d;
}

// All index quadruples (i,j,k,l), 1-indexed, with i<j<k<l and
// w(k) < w(l) < w(i) < w(j).
inline std::vector<std::array<int, 4>> find_patterns_3412(const Permutation& w) {
    std::vector<std::array<int, 4>> out;
    const int n = w.n();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (w(j) <= w(i)) continue;
            for (int k = j + 1; k <= n; ++k) {
                if (w(k) >= w(i)) continue;
                for (int l = k + 1; l <= n; ++l)
                    if (w(k) < w(l) && w(l) < w(i)) out.push_back({i, j, k, l});
            }
        }
    return out;
}

// Strong Bruhat order via the rank-matrix (dot) criterion:
// x <= w iff for all (i,j), #{k <= i : x(k) <= j} >= #{k <= i : w(k) <= j}.
inline bool bruhat_leq(const Permutation& x, const Permutation& w) {
    if (x.n() != w.n()) throw std::invalid_argument("bruhat_leq: size mismatch");
    const int n = x.n();
    std::vector<int> rx(static_cast<std::size_t>(n) + 1, 0), rw(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i < n; ++i) {  // i = n row is equal for all permutations
        for (int j = x(i); j <= n; ++j) ++rx[static_cast<std::size_t>(j)];
        for (int j = w(i); j <= n; ++j) ++rw[static_cast<std::size_t>(j)];
        for (int j = 1; j < n; ++j)
            if (rx[static_cast<std::size_t>(j)] < rw[static_cast<std::size_t>(j)]) return false;
    }
    return true;
}

// w * t_ab (right multiplication by a transposition): swaps the entries at
// positions a and b.
inline Permutation swap_positions(const Permutation& w, int a, int b) {
    std::vector<int> v = w.oneline();
    std::swap(v[static_cast<std::size_t>(a - 1)], v[static_cast<std::size_t>(b - 1)]);
    return Permutation::unchecked(std::move(v));
}

// Lexicographic enumeration of S_n, calling fn on each permutation.
inline void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do {
        fn(Permutation::unchecked(w));
    } while (std::next_permutation(w.begin(), w.end()));
}

inline std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    for_each_permutation(n, [&](const Permutation& w) { out.push_back(w); });
    return out;
}

inline long long factorial(int n) {
    long long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

}  // namespace algcomb
