#include "schwarz/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace schwarz {

namespace {

void check_level(double c) {
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw DomainError("derivative level c must be positive");
    }
    if (c > 0.5) {
        throw InfeasibleError("no locally univalent function has spherical derivative >= c "
                              "for c > 1/2; the class is empty");
    }
}

} // namespace

bool level_is_feasible(double c) {
    return std::isfinite(c) && c > 0.0 && c <= 0.5;
}

double origin_upper(double c) {
    check_level(c);
    double disc = std::max(0.0, 1.0 - 4.0 * c * c);
    return (1.0 + std::sqrt(disc)) / (2.0 * c);
}

double origin_lower(double c) {
    check_level(c);
    double disc = std::max(0.0, 1.0 - 4.0 * c * c);
    // rationalized form of (1 - sqrt(disc))/(2c); no cancellation near c = 1/2
    return 2.0 * c / (1.0 + std::sqrt(disc));
}

BoundReport pointwise_bounds(const BoundQuery& q) {
    check_level(q.c);
    if (!(q.s >= 0.0 && q.s < 1.0)) {
        throw DomainError("base-point modulus s must lie in [0,1)");
    }
    double m = 1.0 - q.s * q.s;          // 1 - s^2
    double w = q.c * m * m;              // leading coefficient of the quadratic
    double disc = std::max(0.0, 1.0 - 4.0 * q.c * w);

    BoundReport rep;
    rep.lower = 2.0 * q.c / (1.0 + std::sqrt(disc));
    rep.upper_quadratic = (1.0 + std::sqrt(disc)) / (2.0 * w);
    rep.upper_classical = 1.0 / w;
    rep.upper_refined = asymptotic_factor(q.s) * rep.upper_classical;
    if (rep.upper_quadratic <= rep.upper_refined) {
        rep.envelope = rep.upper_quadratic;
        rep.active_upper = ActiveUpper::quadratic;
    } else {
        rep.envelope = rep.upper_refined;
        rep.active_upper = ActiveUpper::refined;
    }
    return rep;
}

double asymptotic_factor(double s) {
    if (!(s >= 0.0 && s <= 1.0)) {
        throw DomainError("asymptotic_factor: s must lie in [0,1]");
    }
    double half = 0.5 * (std::sqrt(4.0 + s * s) - s);
    return half * half;
}

LengthPreservingLevel length_preserving_level(double rho) {
    if (!(rho > 0.0 && rho < 1.0)) {
        throw DomainError("length_preserving_level: rho must lie in (0,1)");
    }
    LengthPreservingLevel out;
    out.c = rho / (1.0 - rho * rho);
    out.feasible = out.c <= 0.5 + 1e-15;
    return out;
}

double feasible_radius_bound() {
    return std::sqrt(2.0) - 1.0;
}

} // namespace schwarz
