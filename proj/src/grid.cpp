#include "schwarz/grid.hpp"

#include <numbers>

#include "schwarz/errors.hpp"

namespace schwarz {

void GridSpec::validate() const {
    if (radial_count < 1 || angular_count < 1) {
        throw DomainError("GridSpec: counts must be positive");
    }
    if (!(max_radius > 0.0 && max_radius < 1.0)) {
        throw DomainError("GridSpec: max_radius must lie in (0,1)");
    }
    double prev = 0.0;
    for (double r : refinement_radii) {
        if (!(r > prev && r < 1.0)) {
            throw DomainError("GridSpec: refinement radii must increase strictly inside (0,1)");
        }
        prev = r;
    }
}

std::vector<double> GridSpec::radii() const {
    std::vector<double> rs(radial_count);
    for (int k = 0; k < radial_count; ++k) {
        rs[k] = max_radius * static_cast<double>(k + 1) / static_cast<double>(radial_count);
    }
    return rs;
}

std::vector<double> GridSpec::angles() const {
    std::vector<double> ts(angular_count);
    for (int j = 0; j < angular_count; ++j) {
        ts[j] = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(angular_count);
    }
    return ts;
}

} // namespace schwarz
