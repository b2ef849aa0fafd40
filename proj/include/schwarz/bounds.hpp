#pragma once

#include "schwarz/errors.hpp"

namespace schwarz {

// Derivative level c and base-point modulus s = |z0|.
struct BoundQuery {
    double c = 0.0;
    double s = 0.0;
};

enum class ActiveUpper { quadratic, refined };

// All pointwise bounds on f#(z0) at level c. "quadratic" names the pair of
// roots of c(1-s^2)^2 x^2 - x + c; "refined" carries the extra factor
// ((sqrt(4+s^2)-s)/2)^2 on the classical 1/(c(1-s^2)^2).
struct BoundReport {
    double lower = 0.0;
    double upper_quadratic = 0.0;
    double upper_refined = 0.0;
    double upper_classical = 0.0;
    double envelope = 0.0;              // min of the two upper bounds
    ActiveUpper active_upper = ActiveUpper::quadratic;
};

// (1 +- sqrt(1-4c^2))/(2c). Throw InfeasibleError for c > 1/2 (the function
// class is empty there) and DomainError for c <= 0.
double origin_upper(double c);
double origin_lower(double c);

// Bounds at |z0| = s. Requires 0 < c <= 1/2 and 0 <= s < 1.
BoundReport pointwise_bounds(const BoundQuery& q);

// ((sqrt(4+s^2)-s)/2)^2, decreasing from 1 at s=0 to (3-sqrt(5))/2 at s=1.
double asymptotic_factor(double s);

// Level c(rho) = rho/(1-rho^2) at which length distortion on |z| = rho can be
// neutral, and whether that level is attainable (c <= 1/2).
struct LengthPreservingLevel {
    double c = 0.0;
    bool feasible = false;
};
LengthPreservingLevel length_preserving_level(double rho);

// Largest rho with length_preserving_level(rho) feasible: sqrt(2) - 1.
double feasible_radius_bound();

bool level_is_feasible(double c);   // 0 < c <= 1/2

} // namespace schwarz
