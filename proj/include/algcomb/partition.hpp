#pragma once

// Integer partitions: weakly decreasing sequences of positive parts.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace algcomb {

class Partition {
public:
    Partition() = default;  // the empty partition of 0

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw std::invalid_argument("partition parts must be positive");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int num_parts() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }

    // |lambda|, the number being partitioned
    int sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    Partition conjugate() const {
        std::vector<int> c;
        if (parts_.empty()) return Partition{};
        c.resize(static_cast<std::size_t>(parts_[0]), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
        return Partition(std::move(c));
    }

    bool operator==(const Partition& o) const = default;
    auto operator<=>(const Partition& o) const = default;

private:
    std::vector<int> parts_;
};

// All partitions of n in ascending lexicographic order on the parts vector,
// e.g. partitions_of(4) = [1,1,1,1], [2,1,1], [2,2], [3,1], [4].
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int min_part) -> void {
        if (remaining == 0) {
            std::vector<int> p(cur.rbegin(), cur.rend());
            out.emplace_back(Partition(std::move(p)));
            return;
        }
        for (int part = min_part; part <= remaining; ++part) {
            cur.push_back(part);
            self(self, remaining - part, part);
            cur.pop_back();
        }
    };
    rec(rec, n, 1);
    std::sort(out.begin(), out.end());
    return out;
}

// p(n) by the pentagonal-number recurrence; independent of partitions_of.
inline std::vector<long long> partition_counts(int n_max) {
    std::vector<long long> p(static_cast<std::size_t>(n_max) + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        long long acc = 0;
        for (int k = 1;; ++k) {
            long long g1 = static_cast<long long>(k) * (3 * k - 1) / 2;
            long long g2 = static_cast<long long>(k) * (3 * k + 1) / 2;
            if (g1 > n && g2 > n) break;
            long long sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= n) acc += sign * p[static_cast<std::size_t>(n - g1)];
            if (g2 <= n) acc += sign * p[static_cast<std::size_t>(n - g2)];
        }
        p[static_cast<std::size_t>(n)] = acc;
    }
    return p;
}

// Hook length of cell (r, c), 0-indexed, for a valid cell of lambda.
inline int hook_length(const Partition& lambda, int r, int c) {
    int arm = lambda[r] - c - 1;
    int leg = 0;
    for (int i = r + 1; i < lambda.num_parts() && lambda[i] > c; ++i) ++leg;
    return arm + leg + 1;
}

// Number of standard Young tableaux of shape lambda (hook length formula),
// exact in unsigned 128-bit intermediate arithmetic.
inline long long syt_count(const Partition& lambda) {
    int n = lambda.sum();
    unsigned __int128 num = 1;
    std::vector<int> hooks;
    for (int r = 0; r < lambda.num_parts(); ++r)
        for (int c = 0; c < lambda[r]; ++c) hooks.push_back(hook_length(lambda, r, c));
    // n! / prod(hooks), dividing as we go to limit growth
    std::sort(hooks.begin(), hooks.end(), std::greater<>());
    unsigned __int128 den = 1;
    for (int k = 1; k <= n; ++k) {
        num *= static_cast<unsigned>(k);
        if (!hooks.empty()) {
            den *= static_cast<unsigned>(hooks.back());
            hooks.pop_back();
        }
        unsigned __int128 g = std::__gcd(num, den);
        num /= g;
        den /= g;
    }
    while (!hooks.empty()) {
        den *= static_cast<unsigned>(hooks.back());
        hooks.pop_back();
        unsigned __int128 g = std::__gcd(num, den);
        num /= g;
        den /= g;
    }
    return static_cast<long long>(num / den);
}

inline std::string to_string(const Partition& p) {
    std::string s = "[";
    for (int i = 0; i < p.num_parts(); ++i) {
        if (i) s += ',';
        s += std::to_string(p[i]);
    }
    s += ']';
    return s;
}

}  // namespace algcomb
