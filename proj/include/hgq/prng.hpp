#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace hgq {

/// splitmix64 finalizer; used both as a mixer and for seed derivation.
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Derives an independent child seed from a base seed and a path of stream
/// tags (rank, case, attempt, ...). Every sampler in the artifact draws from
/// a seed produced this way, so any sub-stream can be replayed in isolation.
inline uint64_t derive_seed(uint64_t base, std::initializer_list<uint64_t> path) {
    uint64_t s = splitmix64(base);
    for (uint64_t tag : path) {
        s = splitmix64(s ^ splitmix64(tag));
    }
    return s;
}

/// Deterministic engine: the mt19937_64 sequence is pinned by the standard,
/// and the bounded sampler below avoids the implementation-defined
/// std::uniform_int_distribution.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next_u64() { return engine_(); }

    /// Uniform value in [0, bound) by rejection; bound >= 1.
    uint64_t below(uint64_t bound) {
        // Largest multiple of bound that fits in 64 bits.
        const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % bound;
    }

    /// Uniform value in [lo, hi] inclusive.
    int64_t between(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (engine_() & 1u) != 0; }

private:
    std::mt19937_64 engine_;
};

}  // namespace hgq
