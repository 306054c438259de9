#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace docalign {

// Draw helpers built on raw mt19937_64 output. std::uniform_real_distribution
// and friends are not bit-identical across standard libraries; these are.

// Uniform in [0, 1).
inline double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_real(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform_unit(rng);
}

// Uniform in [0, n). Modulo bias is negligible for n << 2^64.
inline std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
    return rng() % n;
}

// Box-Muller; consumes exactly two draws per sample.
inline double gaussian(std::mt19937_64& rng, double sigma) {
    const double u1 = 1.0 - uniform_unit(rng);  // (0, 1]
    const double u2 = uniform_unit(rng);
    return sigma * std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
}

}  // namespace docalign
