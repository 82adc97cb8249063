#pragma once

#include <cstdint>
#include <random>

namespace blrc {

using Rng = std::mt19937_64;

// Uniform integer in [0, bound). Rejection sampling keeps results identical
// across standard library implementations, unlike std::uniform_int_distribution.
inline std::uint64_t uniformBelow(Rng& rng, std::uint64_t bound)
{
    const std::uint64_t limit = Rng::max() - (Rng::max() % bound);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

inline double uniformUnit(Rng& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// splitmix64 finaliser; derives independent child seeds.
inline std::uint64_t mixSeed(std::uint64_t seed, std::uint64_t stream)
{
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace blrc
