#pragma once

// Exact values of the form (p + r*sqrt(D))/s. Comparisons avoid floating
// point entirely; cover computations downstream are sensitive to near-ties.

#include <cstdint>
#include <stdexcept>

namespace algcomb {

struct QuadraticValue {
    long long p = 0;  // rational part numerator
    long long r = 0;  // coefficient of sqrt(D)
    long long d = 0;  // radicand, non-square unless r == 0
    long long s = 1;  // denominator, > 0

    QuadraticValue() = default;
    QuadraticValue(long long p_, long long r_, long long d_, long long s_)
        : p(p_), r(r_), d(d_), s(s_) {
        if (s == 0) throw std::invalid_argument("QuadraticValue: zero denominator");
        if (d < 0) throw std::invalid_argument("QuadraticValue: negative radicand");
        if (s < 0) {
            s = -s;
            p = -p;
            r = -r;
        }
        if (d == 0) r = 0;
    }

    static QuadraticValue rational(long long num, long long den) {
        return QuadraticValue(num, 0, 0, den);
    }
    static QuadraticValue sqrt_over(long long radicand, long long den) {
        return QuadraticValue(0, 1, radicand, den);
    }

    // sign of p + r*sqrt(d), exact
    int sign() const {
        if (r == 0) return p > 0 ? 1 : (p < 0 ? -1 : 0);
        if (p == 0) return r > 0 ? (d > 0 ? 1 : 0) : (d > 0 ? -1 : 0);
        // compare p vs -r*sqrt(d): square both sides, watching signs
        __int128 p2 = static_cast<__int128>(p) * p;
        __int128 rd = static_cast<__int128>(r) * r * d;
        if (p > 0 && r > 0) return 1;
        if (p < 0 && r < 0) return -1;
        if (p > 0) return p2 > rd ? 1 : (p2 < rd ? -1 : 0);  // r < 0
        return p2 < rd ? 1 : (p2 > rd ? -1 : 0);             // p < 0, r > 0
    }
};

// exact comparison, valid when both radicands are shared or either side is
// rational; for mixed radicands the difference (a-b) must still be signable:
// handled by the four-term sign analysis below.
inline int compare(const QuadraticValue& a, const QuadraticValue& b) {
    // a - b = (P + R1 sqrt(Da) - R2 sqrt(Db)) / (sa sb) with
    // P = a.p*b.s - b.p*a.s, R1 = a.r*b.s, R2 = b.r*a.s
    const __int128 P = static_cast<__int128>(a.p) * b.s - static_cast<__int128>(b.p) * a.s;
    const __int128 R1 = static_cast<__int128>(a.r) * b.s;
    const __int128 R2 = static_cast<__int128>(b.r) * a.s;
    auto sgn = [](__int128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); };
    if (R1 == 0 && R2 == 0) return sgn(P);
    if (P == 0) {
        // R1 sqrt(Da) vs R2 sqrt(Db)
        if (R1 == 0) return -sgn(R2);
        if (R2 == 0) return sgn(R1);
        if (R1 > 0 && R2 <= 0) return 1;
        if (R1 < 0 && R2 >= 0) return -1;
        __int128 lhs = R1 * R1 * a.d, rhs = R2 * R2 * b.d;
        int c = lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
        return R1 > 0 ? c : -c;
    }
    if (R1 == 0 || R2 == 0) {
        // P + R sqrt(D): same analysis as QuadraticValue::sign
        __int128 R = R1 != 0 ? R1 : -R2;
        long long D = R1 != 0 ? a.d : b.d;
        if (P > 0 && R > 0) return 1;
        if (P < 0 && R < 0) return -1;
        __int128 p2 = P * P, rd = R * R * D;
        if (P > 0) return p2 > rd ? 1 : (p2 < rd ? -1 : 0);
        return p2 < rd ? 1 : (p2 > rd ? -1 : 0);
    }
    throw std::invalid_argument("QuadraticValue comparison with two distinct radicands and a rational part");
}

inline bool operator<(const QuadraticValue& a, const QuadraticValue& b) { return compare(a, b) < 0; }
inline bool operator==(const QuadraticValue& a, const QuadraticValue& b) { return compare(a, b) == 0; }

}  // namespace algcomb
