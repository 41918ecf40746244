#pragma once

// Deterministic RNG for dataset sampling. std::mt19937_64 is portable but the
// standard distributions are not; splitmix64 plus explicit draws keeps the
// emitted files byte-identical across platforms and standard libraries.

#include <cstdint>

namespace algcomb {

class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound) by rejection, bound >= 1
    uint64_t below(uint64_t bound) {
        const uint64_t limit = bound * (UINT64_MAX / bound);
        for (;;) {
            uint64_t v = next();
            if (v < limit) return v % bound;
        }
    }

    // geometric with p = 1/2 on {0, 1, 2, ...}: number of heads before a tail
    int geometric_half() {
        int count = 0;
        while (next() & 1) ++count;
        return count;
    }

private:
    uint64_t state_;
};

}  // namespace algcomb
