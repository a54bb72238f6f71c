#pragma once

#include <cstdint>

namespace ecainfo {

// splitmix64 (Steele/Lea/Flood). Frozen as algorithm id "splitmix64-v1";
// run manifests record this id so every input stream can be regenerated.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit constexpr SplitMix64(std::uint64_t seed) : state(seed) {}

    constexpr std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound). Modulo step is deterministic on every platform;
    // the residual bias at bound <= a few hundred is ~2^-57 and irrelevant here.
    constexpr std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }
};

// The splitmix64 finalizer alone: a bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline constexpr char kRngAlgorithmId[] = "splitmix64-v1";

// Seed for one (representative, input, symmetry) work item.
//
// The coordinates are packed into disjoint bit fields of a single key and
// pushed through mix64. mix64 is bijective, so for a fixed master seed two
// distinct coordinate triples can never collide.
constexpr std::uint64_t derive_seed(std::uint64_t master_seed, int representative,
                                    int input_index, int symmetry_index) {
    const std::uint64_t key = (static_cast<std::uint64_t>(representative & 0xFF) << 40) |
                              (static_cast<std::uint64_t>(input_index & 0xFFFFFFFF) << 8) |
                              static_cast<std::uint64_t>(symmetry_index & 0xFF);
    return mix64(mix64(master_seed) ^ key);
}

inline constexpr char kSeedDerivationId[] =
    "mix64(mix64(master) xor key); key = rep<<40 | input_index<<8 | symmetry";

} // namespace ecainfo
