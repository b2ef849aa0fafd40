#pragma once

#include <vector>

#include "schwarz/sphere.hpp"

namespace schwarz {

// Sampling layout for disk sweeps: radial_count circles up to max_radius for
// interior minima, plus refinement_radii circles creeping toward the boundary
// for liminf estimation.
struct GridSpec {
    int radial_count = 200;
    int angular_count = 512;
    double max_radius = 0.999;
    std::vector<double> refinement_radii = {0.9, 0.99, 0.999, 0.9999};

    static GridSpec defaults() { return GridSpec{}; }

    void validate() const;   // throws DomainError

    // Interior radii max_radius * k / radial_count, k = 1..radial_count.
    // The origin is sampled separately by the consumers.
    std::vector<double> radii() const;
    std::vector<double> angles() const;
};

} // namespace schwarz
