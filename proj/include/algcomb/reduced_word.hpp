#pragma once

// Reduced words for permutations, their enumeration, and commutation classes
// (equivalence under s_i s_j -> s_j s_i with |i-j| > 1).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "algcomb/permutation.hpp"

namespace algcomb {

using Word = std::vector<int>;  // letters in {1..n-1}

// Evaluates a word right-to-left, as in building the one-line word of the
// identity by successive adjacent position swaps: the word (1,2) in S_3
// yields 3 1 2.
inline Permutation evaluate_word(int n, const Word& letters) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        int c = *it;
        if (c < 1 || c >= n) throw std::invalid_argument("word letter out of range");
        std::swap(w[static_cast<std::size_t>(c - 1)], w[static_cast<std::size_t>(c)]);
    }
    return Permutation::unchecked(std::move(w));
}

inline bool is_reduced(int n, const Word& letters) {
    return length(evaluate_word(n, letters)) == static_cast<int>(letters.size());
}

// All reduced words of w, by peeling descents from the right end of the word.
// Emission order is lexicographic.
inline void for_each_reduced_word(const Permutation& w, const std::function<void(const Word&)>& fn) {
    const int n = w.n();
    Word word(static_cast<std::size_t>(length(w)));
    // Appending letter c to the front of the remaining word corresponds to
    // removing the descent c from the current permutation.
    std::vector<int> cur = w.oneline();
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == static_cast<int>(word.size())) {
            fn(word);
            return;
        }
        for (int c = 1; c < n; ++c) {
            if (cur[static_cast<std::size_t>(c - 1)] > cur[static_cast<std::size_t>(c)]) {
                std::swap(cur[static_cast<std::size_t>(c - 1)], cur[static_cast<std::size_t>(c)]);
                word[static_cast<std::size_t>(pos)] = c;
                self(self, pos + 1);
                std::swap(cur[static_cast<std::size_t>(c - 1)], cur[static_cast<std::size_t>(c)]);
            }
        }
    };
    rec(rec, 0);
}

inline std::vector<Word> reduced_words(const Permutation& w) {
    std::vector<Word> out;
    for_each_reduced_word(w, [&](const Word& word) { out.push_back(word); });
    return out;
}

// Commutation classes of the reduced words of w, each reported by its
// lexicographically least member, via BFS on the adjacent-swap graph.
// Exhaustive over all reduced words; practical through S_6-scale word sets.
inline std::vector<Word> commutation_classes(const Permutation& w) {
    std::set<Word> seen;
    std::vector<Word> reps;
    for_each_reduced_word(w, [&](const Word& start) {
        if (seen.count(start)) return;
        // BFS over the class of `start`
        std::vector<Word> queue{start};
        seen.insert(start);
        Word least = start;
        std::size_t head = 0;
        while (head < queue.size()) {
            Word cur = queue[head++];
            if (cur < least) least = cur;
            for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
                if (std::abs(cur[i] - cur[i + 1]) > 1) {
                    std::swap(cur[i], cur[i + 1]);
                    if (seen.insert(cur).second) queue.push_back(cur);
                    std::swap(cur[i], cur[i + 1]);
                }
            }
        }
        reps.push_back(std::move(least));
    });
    std::sort(reps.begin(), reps.end());
    return reps;
}

// A word is the lexicographically least member of its commutation class
// iff no adjacent pair satisfies c_{j+1} <= c_j - 2.
inline bool is_commutation_canonical(const Word& word) {
    for (std::size_t i = 0; i + 1 < word.size(); ++i)
        if (word[i + 1] <= word[i] - 2) return false;
    return true;
}

// Enumerates the commutation classes of reduced words of the longest element
// of S_n directly, one canonical (lex-least) word per class, without touching
// the full reduced-word set. DFS over canonical reduced prefixes.
inline void for_each_longest_element_class(int n, const std::function<void(const Word&)>& fn) {
    const int total = n * (n - 1) / 2;
    std::vector<int> pos(static_cast<std::size_t>(n) + 1);  // pos[v] = position of value v
    for (int v = 1; v <= n; ++v) pos[static_cast<std::size_t>(v)] = v;
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    Word word;
    word.reserve(static_cast<std::size_t>(total));
    // Appending letter c left-multiplies by s_c: swaps values c and c+1.
    // That increases length iff value c currently sits left of value c+1.
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(word.size()) == total) {
            fn(word);
            return;
        }
        int lo = word.empty() ? 1 : word.back() - 1;
        if (lo < 1) lo = 1;
        for (int c = lo; c < n; ++c) {
            int pc = pos[static_cast<std::size_t>(c)], pc1 = pos[static_cast<std::size_t>(c + 1)];
            if (pc < pc1) {
                std::swap(w[static_cast<std::size_t>(pc - 1)], w[static_cast<std::size_t>(pc1 - 1)]);
                std::swap(pos[static_cast<std::size_t>(c)], pos[static_cast<std::size_t>(c + 1)]);
                word.push_back(c);
                self(self);
                word.pop_back();
                std::swap(pos[static_cast<std::size_t>(c)], pos[static_cast<std::size_t>(c + 1)]);
                std::swap(w[static_cast<std::size_t>(pc - 1)], w[static_cast<std::size_t>(pc1 - 1)]);
            }
        }
    };
    rec(rec);
}

}  // namespace algcomb
