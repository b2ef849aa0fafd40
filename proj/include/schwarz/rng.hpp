#pragma once

#include <cstdint>
#include <random>

#include "schwarz/sphere.hpp"

namespace schwarz {

// Deterministic helpers on top of mt19937_64. std::uniform_real_distribution
// is implementation-defined, so draws are derived from raw engine output to
// keep seeded runs byte-reproducible.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

inline Complex uniform_box(std::mt19937_64& rng, double half_side) {
    double re = uniform(rng, -half_side, half_side);
    double im = uniform(rng, -half_side, half_side);
    return {re, im};
}

// Uniform over the disk |z| < rmax by rejection from the bounding square.
inline Complex uniform_disk(std::mt19937_64& rng, double rmax) {
    for (;;) {
        Complex z = uniform_box(rng, rmax);
        if (std::abs(z) < rmax) return z;
    }
}

inline Complex uniform_circle(std::mt19937_64& rng) {
    double t = uniform(rng, 0.0, 6.283185307179586476925286766559);
    return {std::cos(t), std::sin(t)};
}

} // namespace schwarz
