#pragma once

#include <optional>
#include <vector>

#include "schwarz/functions.hpp"
#include "schwarz/sphere.hpp"

namespace schwarz {

// Dirichlet problem: Laplacian u = -4 c^2 e^{2u} on the unit disk, u = 0 on
// the circle. Radial solutions reduce through w(x) = v(e^x) + x + log(2c) to
// w'' = -e^{2w} with the first integral w'^2 = 1 - e^{2w}.
struct BvpProblem {
    double c = 0.0;
};

// u(z) = log(eta / (c (1 + eta^2 |z|^2))) with eta/(1+eta^2) = c.
struct ClosedFormSolution {
    double eta = 0.0;
    double c = 0.0;

    double radial(double r) const;
    double at(Complex z) const;
    // |Laplacian u + 4 c^2 e^{2u}| by the five-point stencil, for
    // convergence-order checks.
    double pde_residual(Complex z, double h) const;
};

// Two solutions for c < 1/2 (eta listed descending), one for c = 1/2, none
// for c > 1/2. Throws DomainError for c <= 0.
std::vector<ClosedFormSolution> closed_form_solutions(double c);

enum class SlopeBranch { plus, minus, double_root };

struct TrajectorySample {
    double x = 0.0;
    double w = 0.0;
    double wprime = 0.0;
    double residual = 0.0;   // |w'^2 + e^{2w} - 1|
};

struct BvpTrajectory {
    SlopeBranch branch = SlopeBranch::plus;
    double c = 0.0;
    double initial_slope = 0.0;            // w'(0) = +-sqrt(1-4c^2)
    std::vector<TrajectorySample> samples; // ascending x
    double max_first_integral_residual = 0.0;
    double eta_fit = 0.0;                  // from the asymptote w(x) - x -> log(2 eta)
    std::optional<double> interior_zero;   // x < 0 with w = 0, w' = 0 (minus branch)
};

struct ShootOptions {
    double x_min = -20.0;
    double step = 1e-4;
    int sample_stride = 1000;     // keep every stride-th step in the report
    double residual_tol = 1e-8;   // refine the step if exceeded, then fail
};

// Integrate w'' = -e^{2w} backward from x = 0 with w(0) = log(2c) and the
// branch slope. The plus slope reproduces the smaller eta, the minus slope
// the larger one. Throws InfeasibleError for c > 1/2 (no real slope) and
// ConvergenceError if the first integral drifts beyond tolerance.
BvpTrajectory shoot(const BvpProblem& problem, SlopeBranch branch, const ShootOptions& opts = {});

enum class SolutionCount { two, one, zero };

// Discriminant count of radial solutions; c > 0 required.
SolutionCount count_solutions(double c);

// Same, cross-checked by shooting each admissible branch and matching
// eta_fit against the closed forms.
SolutionCount count_solutions_validated(double c);

// Boundary flatness of f# implies the extremal shape: measure the
// oscillation of f# on |z| = 1 - 1e-4; when it is below tol, fit T(eta z)
// from f(0), f'(0) and report the chordal fit residual. Small oscillation
// with a large residual would contradict the rigidity statement and is
// flagged.
struct RigidityReport {
    double boundary_oscillation = 0.0;
    bool oscillation_below_tol = false;
    RigidMotion fitted_motion;
    Complex fitted_eta{0.0, 0.0};
    double fit_residual = 0.0;
    bool rigid = false;
    bool contradiction = false;
};

RigidityReport verify_rigidity(const MeroFunction& f, double tol = 1e-6);

} // namespace schwarz
