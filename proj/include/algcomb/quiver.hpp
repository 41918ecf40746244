#pragma once

// Quiver (exchange matrix) mutation and depth-limited mutation-class BFS for
// the seven 11-vertex seed classes. Deduplication is up to vertex relabeling
// (graph isomorphism) by default, which is the convention that reproduces the
// published full-class sizes for A11 and D11; exact-matrix deduplication is
// available behind a flag.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "algcomb/rng.hpp"

namespace algcomb {

struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class ExchangeMatrix {
public:
    ExchangeMatrix() = default;
    explicit ExchangeMatrix(std::vector<std::vector<int>> rows) {
        n_ = static_cast<int>(rows.size());
        b_.reserve(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != n_)
                throw std::invalid_argument("exchange matrix must be square");
            b_.insert(b_.end(), r.begin(), r.end());
        }
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (at(i, j) != -at(j, i))
                    throw std::invalid_argument("exchange matrix must be skew-symmetric");
    }
    static ExchangeMatrix zero(int n) {
        ExchangeMatrix b;
        b.n_ = n;
        b.b_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
        return b;
    }

    int n() const { return n_; }
    int at(int i, int j) const { return b_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)]; }
    int& at(int i, int j) { return b_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)]; }
    const std::vector<int>& flat() const { return b_; }

    bool is_skew_symmetric() const {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j <= i; ++j)
                if (at(i, j) != -at(j, i)) return false;
        return true;
    }

    bool operator==(const ExchangeMatrix&) const = default;

private:
    int n_ = 0;
    std::vector<int> b_;
};

// Standard matrix mutation at vertex k.
inline ExchangeMatrix mutate(const ExchangeMatrix& b, int k) {
    const int n = b.n();
    if (k < 0 || k >= n) throw std::invalid_argument("mutate: vertex index out of range");
    ExchangeMatrix out = b;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == k || j == k)
                out.at(i, j) = -b.at(i, j);
            else
                out.at(i, j) =
                    b.at(i, j) + (std::abs(b.at(i, k)) * b.at(k, j) + b.at(i, k) * std::abs(b.at(k, j))) / 2;
        }
    return out;
}

// Canonical key under vertex relabeling: the minimum over admissible
// orderings of the L-shaped read-out (for each k: column entries above k,
// then row entries left of k). Orderings are restricted by iterated
// neighborhood color refinement, which is label-invariant.
class QuiverCanonicalizer {
public:
    std::vector<int> key(const ExchangeMatrix& b) {
        const int n = b.n();
        // color refinement
        std::vector<uint64_t> color(static_cast<std::size_t>(n), 0x9ae16a3b2f90404fULL);
        std::vector<std::pair<uint64_t, uint64_t>> sig;
        for (int round = 0; round < 3; ++round) {
            std::vector<uint64_t> next(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v) {
                std::vector<uint64_t> neigh;
                for (int u = 0; u < n; ++u) {
                    if (u == v || b.at(v, u) == 0) continue;
                    neigh.push_back(mix(color[static_cast<std::size_t>(u)],
                                        static_cast<uint64_t>(b.at(v, u) + 1024)));
                }
                std::sort(neigh.begin(), neigh.end());
                uint64_t h = mix(color[static_cast<std::size_t>(v)], 0x1fULL);
                for (uint64_t x : neigh) h = mix(h, x);
                next[static_cast<std::size_t>(v)] = h;
            }
            color = std::move(next);
        }

        best_.clear();
        have_best_ = false;
        perm_.assign(static_cast<std::size_t>(n), -1);
        used_.assign(static_cast<std::size_t>(n), 0);
        partial_.clear();
        dfs(b, color, 0, true);
        return best_;
    }

private:
    static uint64_t mix(uint64_t a, uint64_t x) {
        a ^= x + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2);
        a *= 0xff51afd7ed558ccdULL;
        return a ^ (a >> 33);
    }

    // `tight`: the partial read-out so far equals best_'s prefix; only then
    // does a positional comparison of the new segment justify pruning.
    void dfs(const ExchangeMatrix& b, const std::vector<uint64_t>& color, int depth, bool tight) {
        const int n = b.n();
        if (depth == n) {
            if (!have_best_ || partial_ < best_) {
                best_ = partial_;
                have_best_ = true;
            }
            return;
        }
        // candidates: unused vertices of minimal color
        uint64_t min_color = 0;
        bool found = false;
        for (int v = 0; v < n; ++v)
            if (!used_[static_cast<std::size_t>(v)] &&
                (!found || color[static_cast<std::size_t>(v)] < min_color)) {
                min_color = color[static_cast<std::size_t>(v)];
                found = true;
            }
        for (int v = 0; v < n; ++v) {
            if (used_[static_cast<std::size_t>(v)] || color[static_cast<std::size_t>(v)] != min_color)
                continue;
            const std::size_t mark = partial_.size();
            for (int i = 0; i < depth; ++i) partial_.push_back(b.at(perm_[static_cast<std::size_t>(i)], v));
            for (int i = 0; i < depth; ++i) partial_.push_back(b.at(v, perm_[static_cast<std::size_t>(i)]));
            bool viable = true, next_tight = tight;
            if (tight && have_best_) {
                for (std::size_t i = mark; i < partial_.size(); ++i) {
                    if (partial_[i] < best_[i]) {
                        next_tight = false;
                        break;
                    }
                    if (partial_[i] > best_[i]) {
                        viable = false;
                        break;
                    }
                }
            }
            if (viable) {
                perm_[static_cast<std::size_t>(depth)] = v;
                used_[static_cast<std::size_t>(v)] = 1;
                dfs(b, color, depth + 1, next_tight);
                used_[static_cast<std::size_t>(v)] = 0;
            }
            partial_.resize(mark);
        }
    }

    std::vector<int> best_, partial_;
    std::vector<int> perm_;
    std::vector<char> used_;
    bool have_best_ = false;
};

enum class QuiverDedup { isomorphism, exact };

struct MutationClassOptions {
    int depth_limit = -1;  // -1: full class
    QuiverDedup dedup = QuiverDedup::isomorphism;
    long long node_budget = 2'000'000;
};

struct MutationClassResult {
    std::vector<ExchangeMatrix> matrices;  // first-seen representatives, BFS order
    std::vector<int> depths;               // matching BFS depth per matrix
};

inline MutationClassResult mutation_class(const ExchangeMatrix& seed,
                                          const MutationClassOptions& opt = {}) {
    MutationClassResult out;
    QuiverCanonicalizer canon;
    struct KeyHash {
        std::size_t operator()(const std::vector<int>& v) const {
            std::size_t h = 1469598103934665603ULL;
            for (int x : v) {
                h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL;
                h *= 1099511628211ULL;
            }
            return h;
        }
    };
    auto key_of = [&](const ExchangeMatrix& b) {
        return opt.dedup == QuiverDedup::isomorphism ? canon.key(b) : b.flat();
    };
    std::unordered_set<std::vector<int>, KeyHash> seen;
    seen.insert(key_of(seed));
    out.matrices.push_back(seed);
    out.depths.push_back(0);
    std::size_t head = 0;
    int depth = 0;
    std::size_t level_end = 1;
    while (head < out.matrices.size()) {
        if (opt.depth_limit >= 0 && depth >= opt.depth_limit) break;
        std::size_t stop = level_end;
        for (; head < stop; ++head) {
            ExchangeMatrix cur = out.matrices[head];  // copy: vector may reallocate
            for (int k = 0; k < cur.n(); ++k) {
                ExchangeMatrix next = mutate(cur, k);
                if (seen.insert(key_of(next)).second) {
                    if (static_cast<long long>(out.matrices.size()) >= opt.node_budget)
                        throw ResourceLimitError("mutation class exceeded node budget");
                    out.matrices.push_back(std::move(next));
                    out.depths.push_back(depth + 1);
                }
            }
        }
        ++depth;
        level_end = out.matrices.size();
    }
    return out;
}

// The seven 11-vertex seeds. Backbone arrows point along increasing index;
// B ends carry a weight-2 arrow; D ends fork into two leaves; E ends carry
// the trivalent node with arms of lengths 1 and 2.
inline const std::vector<std::string>& quiver_class_labels() {
    static const std::vector<std::string> labels{"A11", "BB11", "BD11", "BE11",
                                                 "D11", "DE11", "E11"};
    return labels;
}

inline ExchangeMatrix seed_quiver(const std::string& label) {
    auto build = [](int n, const std::vector<std::array<int, 3>>& arrows) {
        ExchangeMatrix b = ExchangeMatrix::zero(n);
        for (const auto& [i, j, w] : arrows) {
            b.at(i, j) = w;
            b.at(j, i) = -w;
        }
        return b;
    };
    if (label == "A11")
        return build(11, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}, {5, 6, 1},
                          {6, 7, 1}, {7, 8, 1}, {8, 9, 1}, {9, 10, 1}});
    if (label == "D11")
        return build(11, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}, {5, 6, 1},
                          {6, 7, 1}, {7, 8, 1}, {8, 9, 1}, {8, 10, 1}});
    if (label == "E11")
        return build(11, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}, {5, 6, 1},
                          {6, 7, 1}, {7, 8, 1}, {8, 9, 1}, {7, 10, 1}});
    if (label == "BB11")
        return build(11, {{0, 1, 2}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}, {5, 6, 1},
                          {6, 7, 1}, {7, 8, 1}, {8, 9, 1}, {9, 10, 2}});
    if (label == "BD11")
        return build(11, {{0, 1, 2}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}, {5, 6, 1},
                          {6, 7, 1}, {7, 8, 1}, {8, 9, 1}, {8, 10, 1}});
    if (label == "BE11")
        return build(11, {{0, 1, 2}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}, {5, 6, 1},
                          {6, 7, 1}, {7, 8, 1}, {8, 9, 1}, {7, 10, 1}});
    if (label == "DE11")
        return build(11, {{0, 2, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}, {5, 6, 1},
                          {6, 7, 1}, {7, 8, 1}, {8, 9, 1}, {7, 10, 1}});
    throw std::invalid_argument("unknown quiver class label: " + label);
}

// Published depth limits for the mutation-infinite classes; -1 = full class.
inline int quiver_class_depth(const std::string& label) {
    if (label == "A11" || label == "D11") return -1;
    if (label == "BB11") return 10;
    if (label == "BD11") return 9;
    if (label == "BE11") return 8;
    if (label == "DE11") return 9;
    if (label == "E11") return 9;
    throw std::invalid_argument("unknown quiver class label: " + label);
}

}  // namespace algcomb
