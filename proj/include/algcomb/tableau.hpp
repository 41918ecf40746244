#pragma once

// Young tableaux (standard and semistandard) and their enumeration.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "algcomb/partition.hpp"

namespace algcomb {

enum class TableauFlavor { standard, semistandard };

class Tableau {
public:
    Tableau() = default;

    Tableau(std::vector<std::vector<int>> rows, TableauFlavor flavor)
        : rows_(std::move(rows)), flavor_(flavor) {
        std::vector<int> shape;
        for (const auto& r : rows_) {
            if (r.empty()) throw std::invalid_argument("tableau rows must be non-empty");
            shape.push_back(static_cast<int>(r.size()));
        }
        shape_ = Partition(std::move(shape));  // validates weakly decreasing
        if (!check(flavor_)) throw std::invalid_argument("filling violates tableau conditions");
    }

    static Tableau unchecked(std::vector<std::vector<int>> rows, TableauFlavor flavor) {
        Tableau t;
        t.rows_ = std::move(rows);
        std::vector<int> shape;
        for (const auto& r : t.rows_) shape.push_back(static_cast<int>(r.size()));
        t.shape_ = Partition(std::move(shape));
        t.flavor_ = flavor;
        return t;
    }

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    TableauFlavor flavor() const { return flavor_; }
    int size() const { return shape_.sum(); }

    // Rows strictly (standard) or weakly (semistandard) increase; columns
    // strictly increase; standard fillings use each of 1..n exactly once.
    bool check(TableauFlavor flavor) const {
        const int n = size();
        std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            for (std::size_t c = 0; c < rows_[r].size(); ++c) {
                int v = rows_[r][c];
                if (v < 1) return false;
                if (flavor == TableauFlavor::standard) {
                    if (v > n || seen[static_cast<std::size_t>(v)]) return false;
                    seen[static_cast<std::size_t>(v)] = 1;
                }
                if (c > 0) {
                    int left = rows_[r][c - 1];
                    if (flavor == TableauFlavor::standard ? v <= left : v < left) return false;
                }
                if (r > 0 && c < rows_[r - 1].size() && v <= rows_[r - 1][c]) return false;
            }
        }
        return true;
    }

    bool operator==(const Tableau&) const = default;

private:
    std::vector<std::vector<int>> rows_;
    Partition shape_;
    TableauFlavor flavor_ = TableauFlavor::standard;
};

// Enumerates standard Young tableaux of the given shape by placing 1..n in
// order; emission order is lexicographic on the vector (row of 1, ..., row of n).
inline void for_each_syt(const Partition& shape,
                         const std::function<void(const Tableau&)>& fn) {
    const int n = shape.sum();
    const int nrows = shape.num_parts();
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(nrows));
    std::vector<int> fill(static_cast<std::size_t>(nrows), 0);  // cells used per row
    auto rec = [&](auto&& self, int next) -> void {
        if (next > n) {
            fn(Tableau::unchecked(rows, TableauFlavor::standard));
            return;
        }
        for (int r = 0; r < nrows; ++r) {
            if (fill[static_cast<std::size_t>(r)] >= shape[r]) continue;
            if (r > 0 && fill[static_cast<std::size_t>(r - 1)] <= fill[static_cast<std::size_t>(r)])
                continue;  // column condition: row above must be longer already
            rows[static_cast<std::size_t>(r)].push_back(next);
            ++fill[static_cast<std::size_t>(r)];
            self(self, next + 1);
            --fill[static_cast<std::size_t>(r)];
            rows[static_cast<std::size_t>(r)].pop_back();
        }
    };
    rec(rec, 1);
}

// Enumerates semistandard Young tableaux with entries in {1..max_entry},
// column by column (weak rows, strict columns), lexicographic order on the
// column-reading sequence.
inline void for_each_ssyt(const Partition& shape, int max_entry,
                          const std::function<void(const Tableau&)>& fn) {
    if (shape.empty()) {
        fn(Tableau::unchecked({}, TableauFlavor::semistandard));
        return;
    }
    const int ncols = shape[0];
    const Partition conj = shape.conjugate();
    std::vector<std::vector<int>> cols(static_cast<std::size_t>(ncols));
    auto emit = [&]() {
        std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.num_parts()));
        for (int r = 0; r < shape.num_parts(); ++r)
            for (int c = 0; c < shape[r]; ++c)
                rows[static_cast<std::size_t>(r)].push_back(
                    cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)]);
        fn(Tableau::unchecked(std::move(rows), TableauFlavor::semistandard));
    };
    // fill column c with a strictly increasing tuple, entrywise >= column c-1
    auto rec_col = [&](auto&& self, int c) -> void {
        if (c == ncols) {
            emit();
            return;
        }
        const int h = conj[c];
        auto& col = cols[static_cast<std::size_t>(c)];
        auto rec_cell = [&](auto&& self2, int r) -> void {
            if (r == h) {
                self(self, c + 1);
                return;
            }
            int lo = 1;
            if (r > 0) lo = std::max(lo, col[static_cast<std::size_t>(r - 1)] + 1);
            if (c > 0 && r < conj[c - 1])
                lo = std::max(lo, cols[static_cast<std::size_t>(c - 1)][static_cast<std::size_t>(r)]);
            for (int v = lo; v <= max_entry - (h - 1 - r); ++v) {
                col.push_back(v);
                self2(self2, r + 1);
                col.pop_back();
            }
        };
        rec_cell(rec_cell, 0);
    };
    rec_col(rec_col, 0);
}

inline long long count_ssyt(const Partition& shape, int max_entry) {
    long long count = 0;
    for_each_ssyt(shape, max_entry, [&](const Tableau&) { ++count; });
    return count;
}

}  // namespace algcomb
