#pragma once

// Robinson-Schensted row insertion: the bijection between S_n and pairs of
// same-shape standard Young tableaux, plus the binary target encodings used
// by the dataset files.

#include <stdexcept>
#include <utility>
#include <vector>

#include "algcomb/permutation.hpp"
#include "algcomb/tableau.hpp"

namespace algcomb {

// Row-inserts w(1), ..., w(n); bumps the leftmost entry strictly greater
// than the incoming value. Returns (P, Q): insertion and recording tableaux.
inline std::pair<Tableau, Tableau> rsk(const Permutation& w) {
    std::vector<std::vector<int>> p, q;
    for (int step = 1; step <= w.n(); ++step) {
        int x = w(step);
        std::size_t row = 0;
        for (;; ++row) {
            if (row == p.size()) {
                p.push_back({x});
                q.push_back({step});
                break;
            }
            auto& r = p[row];
            auto it = std::upper_bound(r.begin(), r.end(), x);
            if (it == r.end()) {
                r.push_back(x);
                q[row].push_back(step);
                break;
            }
            std::swap(*it, x);  // bump and continue downward
        }
    }
    return {Tableau::unchecked(std::move(p), TableauFlavor::standard),
            Tableau::unchecked(std::move(q), TableauFlavor::standard)};
}

// Reverse row insertion. Requires two standard tableaux of equal shape.
inline Permutation inverse_rsk(const Tableau& p, const Tableau& q) {
    if (p.shape() != q.shape()) throw std::invalid_argument("inverse_rsk: shape mismatch");
    if (!p.check(TableauFlavor::standard) || !q.check(TableauFlavor::standard))
        throw std::invalid_argument("inverse_rsk: tableaux must be standard");
    const int n = p.size();
    std::vector<std::vector<int>> rows = p.rows();
    // locate k = 1..n in Q once
    std::vector<std::pair<int, int>> where(static_cast<std::size_t>(n) + 1);
    for (std::size_t r = 0; r < q.rows().size(); ++r)
        for (std::size_t c = 0; c < q.rows()[r].size(); ++c)
            where[static_cast<std::size_t>(q.rows()[r][c])] = {static_cast<int>(r),
                                                               static_cast<int>(c)};
    std::vector<int> oneline(static_cast<std::size_t>(n));
    for (int k = n; k >= 1; --k) {
        auto [r, c] = where[static_cast<std::size_t>(k)];
        int x = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        rows[static_cast<std::size_t>(r)].pop_back();
        for (int row = r - 1; row >= 0; --row) {
            auto& cur = rows[static_cast<std::size_t>(row)];
            // rightmost entry strictly smaller than x gets bumped back up
            auto it = std::lower_bound(cur.begin(), cur.end(), x);
            --it;
            std::swap(*it, x);
        }
        oneline[static_cast<std::size_t>(k - 1)] = x;
    }
    return Permutation(std::move(oneline));
}

// Binary regression targets: descent indicator (length n-1) and pairwise
// inversion indicator over pairs (1,2),(1,3),...,(n-1,n) (length n(n-1)/2).
inline std::pair<std::vector<int>, std::vector<int>> encode_targets(const Permutation& w) {
    std::vector<int> descents, inversions;
    for (int i = 1; i < w.n(); ++i) descents.push_back(w(i) > w(i + 1) ? 1 : 0);
    for (int i = 1; i <= w.n(); ++i)
        for (int j = i + 1; j <= w.n(); ++j) inversions.push_back(w(i) > w(j) ? 1 : 0);
    return {std::move(descents), std::move(inversions)};
}

// Permutation from its pairwise inversion indicator, for dataset verification.
inline Permutation decode_inversion_vector(int n, const std::vector<int>& bits) {
    if (static_cast<int>(bits.size()) != n * (n - 1) / 2)
        throw std::invalid_argument("inversion vector has wrong length");
    // entry-by-entry: w(i) is determined by how many later values are smaller
    // and how many earlier values are larger; reconstruct greedily.
    // c_i = #{j > i : w(j) < w(i)} is the Lehmer code; bits give it directly.
    std::vector<int> code(static_cast<std::size_t>(n), 0);
    std::size_t idx = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j, ++idx) code[static_cast<std::size_t>(i - 1)] += bits[idx];
    Permutation w = decode_lehmer(code);
    if (w.n() != n || encode_targets(w).second != bits)
        throw std::invalid_argument("inversion vector is not consistent");
    return w;
}

}  // namespace algcomb
