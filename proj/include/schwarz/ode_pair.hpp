#pragma once

#include <functional>
#include <vector>

#include "schwarz/functions.hpp"
#include "schwarz/polynomial.hpp"
#include "schwarz/sphere.hpp"

namespace schwarz {

// One integrated point of the solution pair of w'' + (S/2) w = 0.
struct PairSample {
    Complex z{0.0, 0.0};
    Complex w1{0.0, 0.0}, w1p{0.0, 0.0};
    Complex w2{0.0, 0.0}, w2p{0.0, 0.0};
    double wronskian_residual = 0.0;   // |w1' w2 - w1 w2' - 1|
};

struct OdeSolutionPair {
    Poly schwarzian_profile;       // empty when built from a function instead
    Complex base_point{0.0, 0.0};
    std::vector<PairSample> samples;
    double max_wronskian_residual = 0.0;
};

struct IntegrateOptions {
    double step = 1e-4;
    double residual_tol = 1e-8;
};

// Independent solutions from 0 with (w1, w1') = (0, 1), (w2, w2') = (1, 0),
// integrated along the straight segment to each target. The ratio w1/w2 is
// then the function whose Schwarzian is S, normalized by f(0)=0, f'(0)=1.
// Targets must satisfy |z| <= 0.9. Throws ConvergenceError if the Wronskian
// drifts beyond tolerance.
OdeSolutionPair integrate_pair(const Poly& schwarzian, const std::vector<Complex>& targets,
                               const IntegrateOptions& opts = {});

// General form: arbitrary holomorphic S, arbitrary base point and initial
// data (w1, w1', w2, w2') there.
OdeSolutionPair integrate_pair_from(const std::function<Complex(Complex)>& schwarzian,
                                    Complex base_point,
                                    Complex w1_0, Complex w1p_0, Complex w2_0, Complex w2p_0,
                                    const std::vector<Complex>& targets,
                                    const IntegrateOptions& opts = {});

// 1/(|w1|^2 + |w2|^2) at a sample; equals the spherical derivative of w1/w2
// when the Wronskian is 1.
double spherical_via_pair(const PairSample& s);

// The same quantity the long way: finite differences of the ratio w1/w2
// (or its reciprocal where |w1| > |w2|), each stencil point freshly
// integrated. Validation-only, O(h^2) accurate.
double spherical_direct_fd(const Poly& schwarzian, Complex z, double h = 1e-5,
                           const IntegrateOptions& opts = {});

// Re-derivation of the refined pointwise bound through the self-map
// w = sqrt(c) w1: initial data taken at z0 from the exact derivative bundle
// of f (f(z0) = 0 required), samples checked to stay in the closed unit
// disk, and f#(z0) = |w1'(z0)|^2 compared against
// asymptotic_factor(|z0|)/(c (1-|z0|^2)^2).
struct SelfmapBoundReport {
    Complex z0{0.0, 0.0};
    double c = 0.0;
    double fsharp_at_z0 = 0.0;        // |w1'(z0)|^2
    double fsharp_direct = 0.0;       // spherical_derivative of f at z0
    double bound = 0.0;
    double max_selfmap_modulus = 0.0; // max |sqrt(c) w1| over samples
    double wsecond_at_z0 = 0.0;       // |w''(z0)| of the self-map, ~0
    double max_wronskian_residual = 0.0;
    bool selfmap_ok = false;          // all samples inside the closed disk (+1e-6)
    bool bound_holds = false;
};

SelfmapBoundReport verify_selfmap_bound(const MeroFunction& f, Complex z0, double c,
                                        const IntegrateOptions& opts = {});

} // namespace schwarz
