#pragma once

// mHeight of a permutation: the minimum over all 3412 patterns of the number
// of values strictly between the pattern's w(i) and w(l), i.e. w(i)-w(l)-1.
// This offset matches the published labeled data.
//
// Dataset records are restricted to 4231-avoiding permutations (the
// Lakshmibai-Sandhya companion pattern); that restriction reproduces the
// published per-label counts exactly.

#include <functional>
#include <optional>
#include <stdexcept>

#include "algcomb/permutation.hpp"

namespace algcomb {

// Returns nothing when w is 3412-free.
inline std::optional<int> mheight_opt(const Permutation& w) {
    const int n = w.n();
    std::optional<int> best;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (w(j) <= w(i)) continue;
            for (int k = j + 1; k <= n; ++k) {
                if (w(k) >= w(i)) continue;
                for (int l = k + 1; l <= n; ++l) {
                    if (w(k) < w(l) && w(l) < w(i)) {
                        int h = w(i) - w(l) - 1;
                        if (!best || h < *best) best = h;
                        if (*best == 0) return best;
                    }
                }
            }
        }
    }
    return best;
}

inline int mheight(const Permutation& w) {
    auto h = mheight_opt(w);
    if (!h) throw std::domain_error("mheight: permutation contains no 3412 pattern");
    return *h;
}

inline bool avoids_4231(const Permutation& w) {
    const int n = w.n();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (w(j) >= w(i)) continue;
            for (int k = j + 1; k <= n; ++k) {
                if (w(k) <= w(j) || w(k) >= w(i)) continue;
                for (int l = k + 1; l <= n; ++l)
                    if (w(l) < w(j)) return false;
            }
        }
    return true;
}

struct MHeightRecord {
    Permutation w;
    int label;
};

// One record per 3412-containing, 4231-avoiding permutation of S_n, in
// lexicographic order.
inline void for_each_mheight_record(int n, const std::function<void(const MHeightRecord&)>& fn) {
    if (n < 4) throw std::invalid_argument("mheight dataset requires n >= 4");
    for_each_permutation(n, [&](const Permutation& w) {
        if (!avoids_4231(w)) return;
        if (auto h = mheight_opt(w)) fn({w, *h});
    });
}

}  // namespace algcomb
