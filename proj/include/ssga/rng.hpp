#pragma once

#include <cstdint>
#include <random>

namespace ssga {

/// Generator used by every stochastic routine. Each run owns one instance.
using Rng = std::mt19937_64;

/// SplitMix64 finalizer. A bijection on 64-bit words with full avalanche.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seed for run `run_index` of experiment point `point_index`.
///
/// The three inputs are folded through nested SplitMix64 rounds:
///   seed = mix64(mix64(mix64(master) ^ point) ^ run)
/// Each round is a bijection, so for a fixed master seed and point two
/// distinct run indices never collide; across points a collision needs a
/// 64-bit coincidence (probability about 2^-64 per pair).
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t point_index,
                                    std::uint64_t run_index) noexcept {
    return mix64(mix64(mix64(master) ^ point_index) ^ run_index);
}

inline Rng make_rng(std::uint64_t seed) { return Rng{seed}; }

} // namespace ssga
