#pragma once

#include <cassert>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace bnevo {

using Rng = std::mt19937_64;

// splitmix64 finalizer; good avalanche, used only to derive substream seeds.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Deterministic substream seed from a master seed and up to three stream keys.
// Every component that needs randomness gets its own derived stream, so results
// never depend on evaluation order.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t h = mix64(master);
    h = mix64(h ^ a);
    h = mix64(h ^ b);
    h = mix64(h ^ c);
    return h;
}

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

// FNV-1a, for deriving per-network seeds from string ids.
inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

// The helpers below replace std::uniform_*_distribution, whose output is
// implementation-defined; these are bit-reproducible everywhere.

inline bool random_bit(Rng& rng) { return (rng() >> 63) != 0; }

// uniform double in [0, 1)
inline double uniform_unit(Rng& rng) { return double(rng() >> 11) * 0x1.0p-53; }

// uniform double in (0, 1), never exactly zero
inline double uniform_open(Rng& rng) { return (double(rng() >> 11) + 0.5) * 0x1.0p-53; }

// uniform integer in [0, bound), unbiased via rejection
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    assert(bound > 0);
    const std::uint64_t rem = (std::uint64_t(0) - bound) % bound;  // 2^64 mod bound
    std::uint64_t v = rng();
    while (rem != 0 && v >= std::uint64_t(0) - rem) v = rng();
    return v % bound;
}

// k distinct values from {0, ..., n-1}, in draw order (partial Fisher-Yates).
inline std::vector<int> sample_distinct(Rng& rng, int n, int k) {
    assert(k >= 0 && k <= n);
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (int i = 0; i < k; ++i) {
        const int j = i + int(uniform_below(rng, std::uint64_t(n - i)));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
}

}  // namespace bnevo
