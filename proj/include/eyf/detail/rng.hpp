#pragma once

#include <cstdint>
#include <random>

namespace eyf::detail {

// Uniform draw in [0, 1) built directly from the top 53 generator bits.
// std::uniform_real_distribution is implementation-defined, which would
// break the byte-reproducibility contract of seeded runs.
inline double uniform01(std::mt19937_64& gen)
{
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Survival probability in (0, 1]; never returns 0.
inline double survival_uniform(std::mt19937_64& gen)
{
    return 1.0 - uniform01(gen);
}

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Stable per-task seed derivation, independent of execution order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index)
{
    return splitmix64(seed ^ splitmix64(index + 1));
}

}  // namespace eyf::detail
