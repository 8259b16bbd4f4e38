// gcl/rng.hpp -- seeded PRNG used by every generator.
//
// SplitMix64 (Steele, Lea, Flood 2014): a counter-based 64-bit generator with
// a closed-form state transition. Chosen because the full output stream is a
// pure function of the seed, so instances reproduce bit-exactly across
// platforms and compilers.
#pragma once

#include "gcl/rational.hpp"
#include "gcl/vertex_set.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace gcl {

class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform draw from {0,..,bound-1}, unbiased via rejection.
    uint64_t below(uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("SplitMix64::below(0)");
        uint64_t threshold = (0 - bound) % bound; // 2^64 mod bound
        while (true) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    /// True with probability p (exact at the endpoints, otherwise within 2^-64).
    bool bernoulli(const Rat& p) {
        if (p < 0 || p > 1) throw std::invalid_argument("bernoulli: p outside [0,1]");
        if (p == 1) return true;
        // threshold = floor(p * 2^64); accept iff draw < threshold
        Int t = floor_rat(Rat(p.get_num() * pow2(64), p.get_den()));
        uint64_t draw = next();
        return Int(draw) < t;
    }

private:
    uint64_t state_;
};

/// Stable per-stream seed derivation: stream i of a base seed.
inline uint64_t derive_seed(uint64_t base, uint64_t stream) {
    SplitMix64 g(base ^ (0x9e3779b97f4a7c15ull * (stream + 1)));
    return g.next();
}

/// Uniform s-subset of {0..n-1} without replacement (partial Fisher-Yates).
inline VertexSet sample_subset(int n, int s, SplitMix64& rng) {
    if (s < 0 || s > n) throw std::invalid_argument("sample_subset: need 0 <= s <= n");
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    VertexSet out(n);
    for (int i = 0; i < s; ++i) {
        int j = i + (int)rng.below(n - i);
        std::swap(idx[i], idx[j]);
        out.insert(idx[i]);
    }
    return out;
}

} // namespace gcl
