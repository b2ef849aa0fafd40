#include "schwarz/liouville.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "schwarz/bounds.hpp"
#include "schwarz/errors.hpp"
#include "schwarz/numerics.hpp"

namespace schwarz {

double ClosedFormSolution::radial(double r) const {
    return std::log(eta / (c * (1.0 + eta * eta * r * r)));
}

double ClosedFormSolution::at(Complex z) const {
    return std::log(eta / (c * (1.0 + eta * eta * std::norm(z))));
}

double ClosedFormSolution::pde_residual(Complex z, double h) const {
    double lap = five_point_laplacian([this](Complex p) { return at(p); }, z, h);
    double u = at(z);
    return std::abs(lap + 4.0 * c * c * std::exp(2.0 * u));
}

std::vector<ClosedFormSolution> closed_form_solutions(double c) {
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw DomainError("closed_form_solutions: c must be positive");
    }
    if (c > 0.5) return {};
    if (c == 0.5) {
        return {ClosedFormSolution{1.0, c}};
    }
    double disc = std::sqrt(1.0 - 4.0 * c * c);
    double eta_small = 2.0 * c / (1.0 + disc);       // rationalized (1-disc)/(2c)
    double eta_large = (1.0 + disc) / (2.0 * c);
    return {ClosedFormSolution{eta_large, c}, ClosedFormSolution{eta_small, c}};
}

namespace {

struct StepState {
    double w, wp;
};

// One RK4 step of w'' = -e^{2w}, backward step h < 0.
StepState rk4_step(StepState s, double h) {
    auto f = [](StepState y) { return StepState{y.wp, -std::exp(2.0 * y.w)}; };
    StepState k1 = f(s);
    StepState k2 = f({s.w + 0.5 * h * k1.w, s.wp + 0.5 * h * k1.wp});
    StepState k3 = f({s.w + 0.5 * h * k2.w, s.wp + 0.5 * h * k2.wp});
    StepState k4 = f({s.w + h * k3.w, s.wp + h * k3.wp});
    return {s.w + h / 6.0 * (k1.w + 2.0 * k2.w + 2.0 * k3.w + k4.w),
            s.wp + h / 6.0 * (k1.wp + 2.0 * k2.wp + 2.0 * k3.wp + k4.wp)};
}

double first_integral_residual(const StepState& s) {
    return std::abs(s.wp * s.wp + std::exp(2.0 * s.w) - 1.0);
}

BvpTrajectory integrate_once(double c, SlopeBranch branch, double slope, const ShootOptions& opts,
                             double step) {
    BvpTrajectory traj;
    traj.branch = branch;
    traj.c = c;
    traj.initial_slope = slope;

    long nsteps = std::lround(std::ceil(-opts.x_min / step));
    double h = opts.x_min / static_cast<double>(nsteps);   // negative
    StepState s{std::log(2.0 * c), slope};

    auto push = [&](long k, const StepState& st) {
        double x = static_cast<double>(k) * h;
        traj.samples.push_back({x, st.w, st.wp, first_integral_residual(st)});
    };
    push(0, s);

    double prev_wp = s.wp;
    double prev_x = 0.0;
    for (long k = 1; k <= nsteps; ++k) {
        s = rk4_step(s, h);
        double x = static_cast<double>(k) * h;
        traj.max_first_integral_residual =
            std::max(traj.max_first_integral_residual, first_integral_residual(s));
        if (k % opts.sample_stride == 0 || k == nsteps) push(k, s);

        // On the steep branch w rises to a crest (w = 0, w' = 0) and falls
        // again; walking backward, w' flips from negative to positive there.
        if (!traj.interior_zero && prev_wp < 0.0 && s.wp >= 0.0) {
            double t = prev_wp / (prev_wp - s.wp);   // root of the linear model
            traj.interior_zero = prev_x + t * (x - prev_x);
        }
        prev_wp = s.wp;
        prev_x = x;
    }
    std::reverse(traj.samples.begin(), traj.samples.end());

    // w(x) - x -> log(2 eta) as x -> -inf
    traj.eta_fit = 0.5 * std::exp(s.w - opts.x_min);
    return traj;
}

} // namespace

BvpTrajectory shoot(const BvpProblem& problem, SlopeBranch branch, const ShootOptions& opts) {
    double c = problem.c;
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw DomainError("shoot: c must be positive");
    }
    if (c > 0.5) {
        throw InfeasibleError("shoot: no real initial slope for c > 1/2; the problem has no "
                              "locally univalent solution there");
    }
    if (!(opts.step > 0.0) || !(opts.x_min < 0.0) || opts.sample_stride < 1) {
        throw DomainError("shoot: invalid integration options");
    }

    double disc = std::max(0.0, 1.0 - 4.0 * c * c);
    double slope = std::sqrt(disc);
    SlopeBranch effective = branch;
    if (disc == 0.0) {
        effective = SlopeBranch::double_root;
    } else if (branch == SlopeBranch::minus) {
        slope = -slope;
    } else if (branch == SlopeBranch::double_root) {
        throw DomainError("shoot: double_root branch only exists at c = 1/2");
    }

    // Fixed-step integration with a first-integral certificate; refine the
    // step if the certificate fails.
    double step = opts.step;
    for (int attempt = 0; attempt < 3; ++attempt) {
        BvpTrajectory traj = integrate_once(c, effective, slope, opts, step);
        if (traj.max_first_integral_residual <= opts.residual_tol) {
            return traj;
        }
        step /= 10.0;
    }
    throw ConvergenceError("shoot: first-integral residual stayed above tolerance");
}

SolutionCount count_solutions(double c) {
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw DomainError("count_solutions: c must be positive");
    }
    if (c < 0.5) return SolutionCount::two;
    if (c == 0.5) return SolutionCount::one;
    return SolutionCount::zero;
}

SolutionCount count_solutions_validated(double c) {
    SolutionCount algebraic = count_solutions(c);
    auto forms = closed_form_solutions(c);

    std::size_t expected = algebraic == SolutionCount::two ? 2 : (algebraic == SolutionCount::one ? 1 : 0);
    if (forms.size() != expected) {
        throw ConvergenceError("count_solutions_validated: closed-form count disagrees");
    }
    if (algebraic == SolutionCount::zero) {
        return algebraic;
    }

    // Shooting cross-check: each branch must reproduce one closed-form eta.
    // Plus slope pairs with the smaller eta, minus with the larger.
    std::vector<std::pair<SlopeBranch, double>> expect;
    if (algebraic == SolutionCount::one) {
        expect.emplace_back(SlopeBranch::plus, 1.0);
    } else {
        expect.emplace_back(SlopeBranch::plus, forms.back().eta);    // smaller
        expect.emplace_back(SlopeBranch::minus, forms.front().eta);  // larger
    }
    for (auto [branch, eta] : expect) {
        BvpTrajectory traj = shoot({c}, branch);
        if (std::abs(traj.eta_fit - eta) > 1e-6 * std::max(1.0, eta)) {
            throw ConvergenceError("count_solutions_validated: shooting eta does not match");
        }
    }
    return algebraic;
}

RigidityReport verify_rigidity(const MeroFunction& f, double tol) {
    RigidityReport rep;

    const int samples = 1024;
    const double r = 1.0 - 1e-4;
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (int j = 0; j < samples; ++j) {
        double t = 2.0 * std::numbers::pi * j / samples;
        double v = f.spherical_derivative(Complex(r * std::cos(t), r * std::sin(t)));
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    rep.boundary_oscillation = hi - lo;
    rep.oscillation_below_tol = rep.boundary_oscillation < tol;

    // Fit T(eta z) from the value and derivative at the origin. A pole at 0
    // is handled through 1/f, which is a rigid postcomposition away from f
    // and has the same chordal residual.
    DerivativeBundle b0 = f.eval_bundle(Complex(0.0, 0.0));
    bool through_reciprocal = b0.at_pole || b0.f.is_infinite();
    MeroFunction probe = through_reciprocal ? f.reciprocal() : f;
    if (through_reciprocal) {
        b0 = probe.eval_bundle(Complex(0.0, 0.0));
    }

    if (b0.f.is_infinite() || b0.fprime.is_infinite()) {
        rep.fit_residual = std::numeric_limits<double>::infinity();
    } else {
        Complex v0 = b0.f.value();
        Complex d0 = b0.fprime.value();
        double a = 1.0 / std::sqrt(1.0 + std::norm(v0));
        RigidMotion T(Complex(a, 0.0), v0 * a);
        Complex eta = d0 / (1.0 + std::norm(v0));
        if (std::abs(eta) == 0.0) {
            rep.fit_residual = std::numeric_limits<double>::infinity();
        } else {
            MeroFunction fitted = MeroFunction::rigid_scaled(T, eta);
            double worst = 0.0;
            const int rings = 12, spokes = 64;
            for (int i = 1; i <= rings; ++i) {
                double rr = 0.999 * i / rings;
                for (int j = 0; j < spokes; ++j) {
                    double t = 2.0 * std::numbers::pi * j / spokes;
                    Complex z(rr * std::cos(t), rr * std::sin(t));
                    worst = std::max(worst, chordal_distance(probe.eval(z), fitted.eval(z)));
                }
            }
            rep.fit_residual = worst;
            if (through_reciprocal) {
                // undo the reciprocal: 1/w is the rigid motion (a=0, b=i)
                RigidMotion inv_recip = RigidMotion(Complex(0.0, 0.0), Complex(0.0, 1.0)).inverse();
                rep.fitted_motion = inv_recip * T;
            } else {
                rep.fitted_motion = T;
            }
            rep.fitted_eta = eta;
        }
    }

    rep.rigid = rep.oscillation_below_tol && rep.fit_residual < 1e-6;
    rep.contradiction = rep.oscillation_below_tol && !(rep.fit_residual < 1e-3);
    return rep;
}

} // namespace schwarz
