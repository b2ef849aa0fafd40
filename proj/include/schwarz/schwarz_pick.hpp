#pragma once

#include <cstdint>
#include <vector>

#include "schwarz/functions.hpp"
#include "schwarz/sphere.hpp"

namespace schwarz {

// Sharp bound on |w'(z0)| over holomorphic self-maps of the disk with
// w(z0) = 0 and w''(z0) = 0: (sqrt(4+s^2) - s)/(2(1-s^2)), s = |z0|.
// The statement excludes s = 0; sp_bound throws DomainError there (the
// classical bound 1 applies and is exposed separately).
double sp_bound(double s);

struct SpBoundValue {
    double value = 0.0;
    bool classical = false;   // true when s = 0 and the value is the plain bound 1
};
SpBoundValue sp_bound_or_classical(double s);

// Self-map w(z) = ((z - z0)/(1 - conj(z0) z)) * scale * g(z) with g chosen so
// that w''(z0) = 0. g is holomorphic into the closed disk; scale in (0, 1].
struct ConstrainedSelfMap {
    Complex z0{0.0, 0.0};
    MeroFunction inner;         // the g factor
    double scale = 1.0;

    Complex w(Complex z) const;
    Complex wprime_at_z0() const;    // scale * phi'(z0) * g(z0), exact
    Complex wsecond_at_z0() const;   // exact coefficient formula, ~0 by construction
};

// The vanishing-second-derivative constraint pins g'(z0)/g(z0); the extremal
// takes g to be the automorphism (z - p)/(1 - conj(p) z) whose parameter
// solves (1 - |p|^2)/((1 - conj(p) z0)(z0 - p)) = -conj(z0)/(1 - |z0|^2).
struct ExtremalInnerFactor {
    Complex p{0.0, 0.0};                 // selected root, inside the disk
    std::vector<Complex> inside_roots;   // every root found inside the disk
    DiskAutomorphism g;                  // rotation 1, center -p
    double g_abs_at_z0 = 0.0;
    double attained = 0.0;               // |w'(z0)| of the induced extremal map
};

// Throws ConvergenceError if the parameter solve fails, DomainError for
// |z0| outside (0,1).
ExtremalInnerFactor construct_extremal_automorphism(Complex z0);

struct SampledMap {
    ConstrainedSelfMap map;
    double wprime_abs = 0.0;
    double wsecond_abs = 0.0;
    int inner_degree = 0;
};

// Random constrained maps: scaled extremal inner factors mixed with random
// Blaschke products corrected by one Mobius factor to restore w''(z0) = 0.
std::vector<SampledMap> sample_constrained_maps(Complex z0, int count, std::uint64_t seed = 42);

// max over 512 boundary samples of ||w(e^{i t})| - 1| for the t = 1 extremal
// map (it is a Blaschke product of degree 2, hence unimodular on the circle).
double extremal_boundary_defect(Complex z0, int boundary_samples = 512);

} // namespace schwarz
