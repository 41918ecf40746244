#pragma once

// Kazhdan-Lusztig polynomials P_{x,w} for symmetric groups via the
// left-descent recursion
//
//   P_{x,w} = P_{sx,v} + q P_{x,v} - sum_{x<=z<v, sz<z} mu(z,v) q^{(l(w)-l(z))/2} P_{x,z}
//
// with v = sw and x normalized so that every descent of w is a descent of x.
// Rows are stored only at two-sided extremal x with P != 1; everything else
// is recovered by lifting. Elements whose Schubert variety is smooth
// (3412- and 4231-avoiding) contribute only trivial polynomials and cover
// mu's, so their rows are skipped entirely.
//
// The same engine serves whole-group sweeps (n <= 7) and single-pair
// lower-interval computations (the published 10- and 11-letter examples).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "algcomb/permutation.hpp"

namespace algcomb {

// Dense integer polynomial in q, ascending coefficients, no trailing zeros.
class IntPolynomial {
public:
    IntPolynomial() = default;  // zero
    explicit IntPolynomial(std::vector<long long> coeffs) : c_(std::move(coeffs)) { trim(); }
    static IntPolynomial one() { return IntPolynomial({1}); }
    static IntPolynomial monomial(long long coeff, int power) {
        std::vector<long long> c(static_cast<std::size_t>(power) + 1, 0);
        c.back() = coeff;
        return IntPolynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    long long coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : 0;
    }
    const std::vector<long long>& coeffs() const { return c_; }

    IntPolynomial& add_scaled(const IntPolynomial& o, long long scale, int power) {
        if (o.is_zero() || scale == 0) return *this;
        std::size_t need = o.c_.size() + static_cast<std::size_t>(power);
        if (c_.size() < need) c_.resize(need, 0);
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i + static_cast<std::size_t>(power)] += scale * o.c_[i];
        trim();
        return *this;
    }

    bool operator==(const IntPolynomial&) const = default;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<long long> c_;
};

inline IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) {
    return a.add_scaled(b, 1, 0);
}
inline IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) {
    return a.add_scaled(b, -1, 0);
}
inline IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<long long> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return IntPolynomial(std::move(c));
}

class KlEngine {
public:
    // Universe = all of S_n; supports kl_table sweeps. n <= 10 advisable.
    static KlEngine whole_group(int n) {
        KlEngine e(n);
        for_each_permutation(n, [&](const Permutation& w) { e.add_element(w.oneline()); });
        e.finish_universe();
        return e;
    }

    // Universe = the Bruhat interval [e, w], built by covers-down BFS.
    static KlEngine lower_interval(const Permutation& w) {
        KlEngine e(w.n());
        e.add_element(w.oneline());
        std::vector<int32_t> frontier{0};
        while (!frontier.empty()) {
            std::vector<int32_t> next;
            for (int32_t id : frontier) {
                std::vector<int> line = e.oneline_of(id);
                for (int a = 0; a < e.n_; ++a)
                    for (int b = a + 1; b < e.n_; ++b) {
                        if (line[static_cast<std::size_t>(a)] < line[static_cast<std::size_t>(b)])
                            continue;
                        std::swap(line[static_cast<std::size_t>(a)], line[static_cast<std::size_t>(b)]);
                        // cover iff no value between the swapped ones sits between them
                        bool cover = true;
                        for (int m = a + 1; m < b && cover; ++m)
                            if (line[static_cast<std::size_t>(m)] > line[static_cast<std::size_t>(b)] &&
                                line[static_cast<std::size_t>(m)] < line[static_cast<std::size_t>(a)])
                                cover = false;
                        if (cover) {
                            uint64_t key = pack_line(line);
                            if (e.index_.find(key) == e.index_.end())
                                next.push_back(e.add_element(line));
                        }
                        std::swap(line[static_cast<std::size_t>(a)], line[static_cast<std::size_t>(b)]);
                    }
            }
            frontier = std::move(next);
        }
        e.finish_universe();
        return e;
    }

    int n() const { return n_; }
    std::size_t universe_size() const { return len_.size(); }

    // P_{x,w}; x or w outside the universe (interval mode) means x is not <= w
    // or w unsupported, reported as argument errors only for size mismatch.
    IntPolynomial polynomial(const Permutation& x, const Permutation& w) {
        if (x.n() != n_ || w.n() != n_) throw std::invalid_argument("kl: size mismatch");
        auto wit = index_.find(pack_line(w.oneline()));
        if (wit == index_.end()) throw std::invalid_argument("kl: w outside engine universe");
        auto xit = index_.find(pack_line(x.oneline()));
        if (xit == index_.end()) return {};  // not in [e,w]
        ensure_row(wit->second);
        return lookup(xit->second, wit->second);
    }

    // Coefficient of q^{(l(w)-l(x)-1)/2} in P_{x,w}; 0 for even length gaps.
    long long mu(const Permutation& x, const Permutation& w) {
        if (x.n() != w.n()) throw std::invalid_argument("mu: size mismatch");
        if (x == w || !bruhat_leq(x, w))
            throw std::invalid_argument("mu: requires x < w in Bruhat order");
        int gap = length(w) - length(x);
        if (gap % 2 == 0) return 0;
        return polynomial(x, w).coeff((gap - 1) / 2);
    }

    // Runs fn(x, w, P_{x,w}) over all ordered pairs of the universe, both
    // coordinates in lexicographic one-line order.
    void sweep(const std::function<void(int32_t, int32_t, const IntPolynomial&)>& fn) {
        for (std::size_t w = 0; w < len_.size(); ++w) ensure_row(static_cast<int32_t>(w));
        for (int32_t x : lex_to_id_)
            for (int32_t w : lex_to_id_) fn(x, w, lookup(x, w));
    }

    Permutation permutation_of(int32_t id) const {
        return Permutation::unchecked(oneline_of(id));
    }

private:
    explicit KlEngine(int n) : n_(n) {
        if (n < 1 || n > 16) throw std::invalid_argument("kl engine supports 1 <= n <= 16");
    }

    static uint64_t pack_line(const std::vector<int>& line) {
        uint64_t key = 0;
        for (std::size_t i = 0; i < line.size(); ++i)
            key |= static_cast<uint64_t>(line[i] - 1) << (4 * i);
        return key;
    }

    std::vector<int> oneline_of(int32_t id) const {
        std::vector<int> line(static_cast<std::size_t>(n_));
        uint64_t key = pack_[static_cast<std::size_t>(id)];
        for (int i = 0; i < n_; ++i) line[static_cast<std::size_t>(i)] = static_cast<int>((key >> (4 * i)) & 0xF) + 1;
        return line;
    }

    int32_t add_element(const std::vector<int>& line) {
        uint64_t key = pack_line(line);
        int32_t id = static_cast<int32_t>(len_.size());
        index_.emplace(key, id);
        pack_.push_back(key);
        int len = 0;
        uint32_t rdesc = 0, ldesc = 0;
        std::vector<int> pos(static_cast<std::size_t>(n_) + 1);
        for (int i = 0; i < n_; ++i) pos[static_cast<std::size_t>(line[static_cast<std::size_t>(i)])] = i;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (line[static_cast<std::size_t>(i)] > line[static_cast<std::size_t>(j)]) ++len;
        for (int s = 1; s < n_; ++s) {
            if (line[static_cast<std::size_t>(s - 1)] > line[static_cast<std::size_t>(s)])
                rdesc |= 1u << s;
            if (pos[static_cast<std::size_t>(s)] > pos[static_cast<std::size_t>(s + 1)]) ldesc |= 1u << s;
        }
        len_.push_back(static_cast<uint16_t>(len));
        ldesc_.push_back(ldesc);
        rdesc_.push_back(rdesc);
        smooth_.push_back(-1);
        return id;
    }

    void finish_universe() {
        rows_.resize(len_.size());
        // bucket index for extremal enumeration
        for (std::size_t id = 0; id < len_.size(); ++id) {
            uint64_t key = (static_cast<uint64_t>(ldesc_[id]) << 32) | rdesc_[id];
            buckets_[key].push_back(static_cast<int32_t>(id));
        }
        // lexicographic order of elements for deterministic sweeps
        lex_to_id_.resize(len_.size());
        std::vector<std::pair<uint64_t, int32_t>> order;
        order.reserve(len_.size());
        for (std::size_t id = 0; id < len_.size(); ++id) {
            // pack gives lex order directly since letters are nibbles, low
            // position in low bits: compare by byte-reversed key
            uint64_t k = 0;
            for (int i = 0; i < n_; ++i) k = (k << 4) | ((pack_[id] >> (4 * i)) & 0xF);
            order.push_back({k, static_cast<int32_t>(id)});
        }
        std::sort(order.begin(), order.end());
        for (std::size_t i = 0; i < order.size(); ++i) lex_to_id_[i] = order[i].second;
        poly_pool_.push_back(IntPolynomial());       // id 0 = zero (unused)
        poly_pool_.push_back(IntPolynomial::one());  // id 1 = one (unused in rows)
    }

    // ---- raw one-line helpers on ids ----

    bool leq_ids(int32_t xa, int32_t wb) const {
        if (xa == wb) return true;
        if (len_[static_cast<std::size_t>(xa)] >= len_[static_cast<std::size_t>(wb)]) return false;
        uint64_t xk = pack_[static_cast<std::size_t>(xa)], wk = pack_[static_cast<std::size_t>(wb)];
        // rank criterion with early exit
        int rx[17] = {0}, rw[17] = {0};
        for (int i = 0; i < n_ - 1; ++i) {
            int xv = static_cast<int>((xk >> (4 * i)) & 0xF) + 1;
            int wv = static_cast<int>((wk >> (4 * i)) & 0xF) + 1;
            for (int j = xv; j <= n_; ++j) ++rx[j];
            for (int j = wv; j <= n_; ++j) ++rw[j];
            for (int j = 1; j < n_; ++j)
                if (rx[j] < rw[j]) return false;
        }
        return true;
    }

    int32_t left_mult(int32_t id, int s) const {
        // swap values s, s+1
        uint64_t key = pack_[static_cast<std::size_t>(id)];
        int pa = -1, pb = -1;
        for (int i = 0; i < n_; ++i) {
            int v = static_cast<int>((key >> (4 * i)) & 0xF) + 1;
            if (v == s) pa = i;
            if (v == s + 1) pb = i;
        }
        uint64_t nk = key;
        nk &= ~((0xFULL << (4 * pa)) | (0xFULL << (4 * pb)));
        nk |= static_cast<uint64_t>(s) << (4 * pa);         // value s+1 at pa
        nk |= static_cast<uint64_t>(s - 1) << (4 * pb);     // value s at pb
        auto it = index_.find(nk);
        return it == index_.end() ? -1 : it->second;
    }

    int32_t right_mult(int32_t id, int s) const {
        // swap positions s-1, s (0-based)
        uint64_t key = pack_[static_cast<std::size_t>(id)];
        uint64_t a = (key >> (4 * (s - 1))) & 0xF, b = (key >> (4 * s)) & 0xF;
        uint64_t nk = key & ~((0xFULL << (4 * (s - 1))) | (0xFULL << (4 * s)));
        nk |= (b << (4 * (s - 1))) | (a << (4 * s));
        auto it = index_.find(nk);
        return it == index_.end() ? -1 : it->second;
    }

    bool is_smooth(int32_t id) {
        int8_t& flag = smooth_[static_cast<std::size_t>(id)];
        if (flag >= 0) return flag == 1;
        std::vector<int> w = oneline_of(id);
        flag = (avoids_3412_4231(w) ? 1 : 0);
        return flag == 1;
    }

    static bool avoids_3412_4231(const std::vector<int>& w) {
        const int n = static_cast<int>(w.size());
        // one pass over quadruples catching both patterns, early exit
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    // 3412: w[k]<w[l]<w[i]<w[j]; 4231: w[l]<w[j]<w[k]<w[i]
                    bool c3412 = w[j] > w[i] && w[k] < w[i];
                    bool c4231 = w[j] < w[i] && w[k] > w[j] && w[k] < w[i];
                    if (!c3412 && !c4231) continue;
                    for (int l = k + 1; l < n; ++l) {
                        if (c3412 && w[l] > w[k] && w[l] < w[i]) return false;
                        if (c4231 && w[l] < w[j]) return false;
                    }
                }
        return true;
    }

    // ---- rows ----

    struct Row {
        std::vector<int32_t> xs;     // sorted
        std::vector<int32_t> polys;  // parallel, pool ids
        bool computed = false;
    };

    int32_t intern(const IntPolynomial& p) {
        auto it = poly_index_.find(p.coeffs());
        if (it != poly_index_.end()) return it->second;
        int32_t id = static_cast<int32_t>(poly_pool_.size());
        poly_pool_.push_back(p);
        poly_index_.emplace(p.coeffs(), id);
        return id;
    }

    // normalized lookup; requires row(w) computed (or w smooth/trivial)
    IntPolynomial lookup(int32_t x, int32_t w) {
        if (x == w) return IntPolynomial::one();
        if (len_[static_cast<std::size_t>(x)] >= len_[static_cast<std::size_t>(w)]) return {};
        // lift x through the descents of w
        const uint32_t ld = ldesc_[static_cast<std::size_t>(w)], rd = rdesc_[static_cast<std::size_t>(w)];
        bool changed = true;
        while (changed) {
            changed = false;
            uint32_t missingl = ld & ~ldesc_[static_cast<std::size_t>(x)];
            while (missingl) {
                int s = __builtin_ctz(missingl);
                missingl &= missingl - 1;
                int32_t nx = left_mult(x, s);
                if (nx >= 0) {
                    x = nx;
                    changed = true;
                } else {
                    return {};  // lift escapes the interval universe: x not <= w
                }
            }
            uint32_t missingr = rd & ~rdesc_[static_cast<std::size_t>(x)];
            while (missingr) {
                int s = __builtin_ctz(missingr);
                missingr &= missingr - 1;
                int32_t nx = right_mult(x, s);
                if (nx >= 0) {
                    x = nx;
                    changed = true;
                } else {
                    return {};
                }
            }
            if (x == w) return IntPolynomial::one();
            if (len_[static_cast<std::size_t>(x)] >= len_[static_cast<std::size_t>(w)]) return {};
        }
        if (!leq_ids(x, w)) return {};
        if (len_[static_cast<std::size_t>(w)] - len_[static_cast<std::size_t>(x)] <= 2 || is_smooth(w))
            return IntPolynomial::one();
        const Row& row = rows_[static_cast<std::size_t>(w)];
        if (!row.computed) throw std::logic_error("KL row queried before computation");
        auto it = std::lower_bound(row.xs.begin(), row.xs.end(), x);
        if (it != row.xs.end() && *it == x)
            return poly_pool_[static_cast<std::size_t>(row.polys[static_cast<std::size_t>(it - row.xs.begin())])];
        return IntPolynomial::one();
    }

    void ensure_row(int32_t w) {
        Row& row = rows_[static_cast<std::size_t>(w)];
        if (row.computed) return;
        row.computed = true;
        if (len_[static_cast<std::size_t>(w)] <= 3 || is_smooth(w)) return;  // all P in {0,1}

        const uint32_t ldw = ldesc_[static_cast<std::size_t>(w)];
        const int s = __builtin_ctz(ldw);
        const int32_t v = left_mult(w, s);
        ensure_row(v);

        // mu-list of v: covers plus top-degree stored entries, filtered to sz < z
        std::vector<std::pair<int32_t, long long>> mulist;
        for (int32_t z : coatoms(v))
            if (ldesc_[static_cast<std::size_t>(z)] & (1u << s)) mulist.push_back({z, 1});
        if (!is_smooth(v)) {
            const Row& rv = rows_[static_cast<std::size_t>(v)];
            for (std::size_t i = 0; i < rv.xs.size(); ++i) {
                int32_t z = rv.xs[i];
                if (!(ldesc_[static_cast<std::size_t>(z)] & (1u << s))) continue;
                const IntPolynomial& p = poly_pool_[static_cast<std::size_t>(rv.polys[i])];
                int gap = len_[static_cast<std::size_t>(v)] - len_[static_cast<std::size_t>(z)];
                if (gap > 1 && gap % 2 == 1 && p.degree() == (gap - 1) / 2)
                    mulist.push_back({z, p.coeff((gap - 1) / 2)});
            }
        }
        for (auto& [z, m] : mulist) ensure_row(z);

        // extremal candidates: descent sets contain w's on both sides
        const uint32_t rdw = rdesc_[static_cast<std::size_t>(w)];
        std::vector<std::pair<int32_t, int32_t>> found;
        for (const auto& [key, ids] : buckets_) {
            uint32_t bl = static_cast<uint32_t>(key >> 32), br = static_cast<uint32_t>(key);
            if ((bl & ldw) != ldw || (br & rdw) != rdw) continue;
            for (int32_t x : ids) {
                if (len_[static_cast<std::size_t>(x)] >= len_[static_cast<std::size_t>(w)]) continue;
                if (len_[static_cast<std::size_t>(w)] - len_[static_cast<std::size_t>(x)] <= 2) continue;
                if (!leq_ids(x, w)) continue;
                IntPolynomial p = compute_entry(x, w, s, v, mulist);
                if (!p.is_one()) found.push_back({x, intern(p)});
            }
        }
        std::sort(found.begin(), found.end());
        row.xs.reserve(found.size());
        row.polys.reserve(found.size());
        for (auto& [x, pid] : found) {
            row.xs.push_back(x);
            row.polys.push_back(pid);
        }
    }

    IntPolynomial compute_entry(int32_t x, int32_t w, int s, int32_t v,
                                const std::vector<std::pair<int32_t, long long>>& mulist) {
        const int32_t sx = left_mult(x, s);  // sx < x since s is a descent of x
        IntPolynomial p = lookup(sx, v);
        p.add_scaled(lookup(x, v), 1, 1);
        const int lw = len_[static_cast<std::size_t>(w)];
        for (const auto& [z, m] : mulist) {
            if (len_[static_cast<std::size_t>(z)] < len_[static_cast<std::size_t>(x)]) continue;
            if (!leq_ids(x, z)) continue;
            p.add_scaled(lookup(x, z), -m, (lw - len_[static_cast<std::size_t>(z)]) / 2);
        }
        // sanity: KL positivity and degree bound
        int bound = (lw - len_[static_cast<std::size_t>(x)] - 1) / 2;
        if (p.degree() > bound || p.coeff(0) != 1)
            throw std::logic_error("KL recursion invariant violated");
        for (long long c : p.coeffs())
            if (c < 0) throw std::logic_error("negative KL coefficient");
        return p;
    }

    const std::vector<int32_t>& coatoms(int32_t v) {
        auto it = coatoms_.find(v);
        if (it != coatoms_.end()) return it->second;
        std::vector<int32_t> out;
        std::vector<int> line = oneline_of(v);
        for (int a = 0; a < n_; ++a)
            for (int b = a + 1; b < n_; ++b) {
                if (line[static_cast<std::size_t>(a)] < line[static_cast<std::size_t>(b)]) continue;
                bool cover = true;
                for (int m = a + 1; m < b && cover; ++m)
                    if (line[static_cast<std::size_t>(m)] > line[static_cast<std::size_t>(b)] &&
                        line[static_cast<std::size_t>(m)] < line[static_cast<std::size_t>(a)])
                        cover = false;
                if (!cover) continue;
                std::swap(line[static_cast<std::size_t>(a)], line[static_cast<std::size_t>(b)]);
                auto idt = index_.find(pack_line(line));
                if (idt != index_.end()) out.push_back(idt->second);
                std::swap(line[static_cast<std::size_t>(a)], line[static_cast<std::size_t>(b)]);
            }
        return coatoms_.emplace(v, std::move(out)).first->second;
    }

    int n_;
    std::unordered_map<uint64_t, int32_t> index_;
    std::vector<uint64_t> pack_;
    std::vector<uint16_t> len_;
    std::vector<uint32_t> ldesc_, rdesc_;
    std::vector<int8_t> smooth_;
    std::vector<Row> rows_;
    std::unordered_map<int32_t, std::vector<int32_t>> coatoms_;
    std::unordered_map<uint64_t, std::vector<int32_t>> buckets_;
    std::vector<int32_t> lex_to_id_;
    std::vector<IntPolynomial> poly_pool_;
    std::map<std::vector<long long>, int32_t> poly_index_;
};

// Convenience single-pair entry point building a lower-interval engine.
inline IntPolynomial kl_polynomial(const Permutation& x, const Permutation& w) {
    if (x.n() != w.n()) throw std::invalid_argument("kl_polynomial: size mismatch");
    if (!bruhat_leq(x, w)) return {};
    if (x == w) return IntPolynomial::one();
    KlEngine engine = KlEngine::lower_interval(w);
    return engine.polynomial(x, w);
}

inline long long mu_coefficient(const Permutation& x, const Permutation& w) {
    if (x.n() != w.n()) throw std::invalid_argument("mu_coefficient: size mismatch");
    if (x == w || !bruhat_leq(x, w))
        throw std::invalid_argument("mu_coefficient: requires x < w in Bruhat order");
    int gap = length(w) - length(x);
    if (gap % 2 == 0) return 0;
    return kl_polynomial(x, w).coeff((gap - 1) / 2);
}

}  // namespace algcomb
