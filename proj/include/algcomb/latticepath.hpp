#pragma once

// Northeast lattice paths strictly below the rational diagonal, their
// snake-graph matching numbers (continuants of the run-length continued
// fraction) and Lagrange numbers (exact quadratic irrationals of the
// periodized continued fraction), and cover pairs in both induced orders.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "algcomb/quadratic.hpp"

namespace algcomb {

class LatticePath {
public:
    // steps: 1 = east, 0 = north; endpoint (a, b) with gcd(a, b) = 1;
    // every proper prefix stays strictly below y = (b/a) x.
    explicit LatticePath(std::vector<int> steps) : steps_(std::move(steps)) {
        long long x = 0, y = 0;
        for (int s : steps_) {
            if (s != 0 && s != 1) throw std::invalid_argument("lattice path steps must be 0/1");
            x += s;
            y += 1 - s;
        }
        a_ = static_cast<int>(x);
        b_ = static_cast<int>(y);
        if (a_ == 0 || b_ == 0 || std::gcd(a_, b_) != 1)
            throw std::invalid_argument("lattice path endpoint must be coprime (a,b), a,b >= 1");
        x = y = 0;
        for (std::size_t i = 0; i + 1 < steps_.size(); ++i) {
            x += steps_[i];
            y += 1 - steps_[i];
            if (y * a_ >= x * b_)
                throw std::invalid_argument("lattice path touches or crosses the diagonal");
        }
    }

    const std::vector<int>& steps() const { return steps_; }
    int a() const { return a_; }
    int b() const { return b_; }

    // run lengths of the step word; admissible paths start east and end
    // north, so runs alternate E,N,E,N,... and the count is even
    std::vector<int> continued_fraction() const {
        std::vector<int> runs;
        for (std::size_t i = 0; i < steps_.size();) {
            std::size_t j = i;
            while (j < steps_.size() && steps_[j] == steps_[i]) ++j;
            runs.push_back(static_cast<int>(j - i));
            i = j;
        }
        return runs;
    }

    bool operator==(const LatticePath&) const = default;
    auto operator<=>(const LatticePath&) const = default;

private:
    std::vector<int> steps_;
    int a_ = 0, b_ = 0;
};

// K(a_1..a_k) = a_k K(a_1..a_{k-1}) + K(a_1..a_{k-2}), K() = 1, K(a_1) = a_1.
inline long long continuant(const std::vector<int>& word) {
    long long km1 = 0, k0 = 1;
    for (int a : word) {
        long long next = a * k0 + km1;
        km1 = k0;
        k0 = next;
    }
    return k0;
}

// Perfect matchings of the path's snake graph.
inline long long matching_number(const LatticePath& w) {
    return continuant(w.continued_fraction());
}

// Lagrange number of the bi-infinite continued fraction with the path's run
// word as period: sqrt((K(word) + K(interior))^2 - 4*(-1)^k) / K(tail),
// where interior drops both ends and tail drops the first entry.
inline QuadraticValue lagrange_number(const LatticePath& w) {
    std::vector<int> word = w.continued_fraction();
    const int k = static_cast<int>(word.size());
    long long p = continuant(word);
    std::vector<int> interior(word.begin() + 1, word.end() - (word.size() > 1 ? 1 : 0));
    if (word.size() <= 1) interior.clear();
    long long q_inner = continuant(interior);
    std::vector<int> tail(word.begin() + 1, word.end());
    long long q = continuant(tail);
    long long sign = (k % 2 == 0) ? 1 : -1;
    long long d = (p + q_inner) * (p + q_inner) - 4 * sign;
    return QuadraticValue::sqrt_over(d, q);
}

// All admissible paths to (a, b), lexicographic on the step word.
inline void for_each_lattice_path(int a, int b, const std::function<void(const LatticePath&)>& fn) {
    if (a < 1 || b < 1 || std::gcd(a, b) != 1)
        throw std::invalid_argument("lattice path endpoint must be coprime (a,b), a,b >= 1");
    std::vector<int> steps;
    auto admissible = [&](int x, int y) {
        if (x == a && y == b) return true;  // the endpoint sits on the diagonal
        return static_cast<long long>(y) * a < static_cast<long long>(x) * b;
    };
    auto rec = [&](auto&& self, int x, int y) -> void {
        if (x == a && y == b) {
            fn(LatticePath(steps));
            return;
        }
        // north (0) before east (1) for lexicographic order on the step word
        if (y < b && admissible(x, y + 1)) {
            steps.push_back(0);
            self(self, x, y + 1);
            steps.pop_back();
        }
        if (x < a && admissible(x + 1, y)) {
            steps.push_back(1);
            self(self, x + 1, y);
            steps.pop_back();
        }
    };
    rec(rec, 0, 0);
}

struct CoverPairs {
    std::vector<std::pair<LatticePath, LatticePath>> matching;  // covers only in matching order
    std::vector<std::pair<LatticePath, LatticePath>> lagrange;  // covers only in Lagrange order
    long long removed_double_covers = 0;                        // covers in both orders
};

enum class PathOrder { matching, lagrange };

// Cover pairs of one order: value(w) < value(w') consecutive among distinct
// values (ties make elements incomparable, so covers join adjacent value
// classes).
template <typename Value>
std::vector<std::pair<LatticePath, LatticePath>> covers_by_value(
    const std::vector<LatticePath>& paths, const std::vector<Value>& values) {
    std::vector<std::size_t> idx(paths.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });
    std::vector<std::pair<LatticePath, LatticePath>> out;
    // group boundaries of equal values
    std::vector<std::pair<std::size_t, std::size_t>> groups;
    for (std::size_t i = 0; i < idx.size();) {
        std::size_t j = i;
        while (j < idx.size() && !(values[idx[i]] < values[idx[j]])) ++j;
        groups.push_back({i, j});
        i = j;
    }
    for (std::size_t g = 0; g + 1 < groups.size(); ++g)
        for (std::size_t i = groups[g].first; i < groups[g].second; ++i)
            for (std::size_t j = groups[g + 1].first; j < groups[g + 1].second; ++j)
                out.push_back({paths[idx[i]], paths[idx[j]]});
    std::sort(out.begin(), out.end());
    return out;
}

// Cover pairs in both orders for endpoint (a, b); pairs that are covers in
// both orders are dropped from the per-order lists and counted.
inline CoverPairs cover_pairs(int a, int b) {
    std::vector<LatticePath> paths;
    for_each_lattice_path(a, b, [&](const LatticePath& p) { paths.push_back(p); });
    std::vector<long long> mvals;
    std::vector<QuadraticValue> lvals;
    mvals.reserve(paths.size());
    lvals.reserve(paths.size());
    for (const auto& p : paths) {
        mvals.push_back(matching_number(p));
        lvals.push_back(lagrange_number(p));
    }
    auto mcov = covers_by_value(paths, mvals);
    auto lcov = covers_by_value(paths, lvals);
    CoverPairs out;
    std::vector<std::pair<LatticePath, LatticePath>> both;
    std::set_intersection(mcov.begin(), mcov.end(), lcov.begin(), lcov.end(),
                          std::back_inserter(both));
    out.removed_double_covers = static_cast<long long>(both.size());
    std::set_difference(mcov.begin(), mcov.end(), both.begin(), both.end(),
                        std::back_inserter(out.matching));
    std::set_difference(lcov.begin(), lcov.end(), both.begin(), both.end(),
                        std::back_inserter(out.lagrange));
    return out;
}

}  // namespace algcomb
