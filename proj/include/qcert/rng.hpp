// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace qcert {

// Counter-based deterministic RNG. Every draw is a pure function of
// (seed, stream, index, counter); there is no global state, so sampling is
// reproducible bit-for-bit regardless of thread count or iteration order.
// The mixer is the SplitMix64 finalizer.

enum class RngStream : std::uint64_t {
    Sample = 1,         // shot outcome draws
    Depolarize = 2,     // global-depolarizing branch + uniform bitstrings
    TrajectorySeed = 3, // per-shot noise-trajectory seeds
    PauliInsert = 4,    // per-gate Pauli insertion decisions
    Gaussian = 5,       // test-side random state generation
    Mixture = 6,        // test-side random density-matrix weights
};

constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Fold a tag (e.g. a basis letter) into a seed, producing an independent
/// substream for the same user-facing seed.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
    return mix64(seed ^ mix64(tag));
}

constexpr std::uint64_t rng_u64(std::uint64_t seed, RngStream stream,
                                std::uint64_t index, std::uint64_t counter) {
    std::uint64_t h = mix64(seed);
    h = mix64(h ^ static_cast<std::uint64_t>(stream));
    h = mix64(h ^ index);
    h = mix64(h ^ counter);
    return h;
}

/// Uniform double in [0, 1) with 53 random bits.
constexpr double rng_uniform(std::uint64_t seed, RngStream stream,
                             std::uint64_t index, std::uint64_t counter) {
    return static_cast<double>(rng_u64(seed, stream, index, counter) >> 11) *
           0x1.0p-53;
}

} // namespace qcert
