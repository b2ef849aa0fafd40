#include "schwarz/ode_pair.hpp"

#include <cmath>
#include <numbers>

#include "schwarz/bounds.hpp"
#include "schwarz/errors.hpp"
#include "schwarz/parallel.hpp"

namespace schwarz {

namespace {

struct PairState {
    Complex w1, w1p, w2, w2p;
};

PairState axpy(const PairState& s, double a, const PairState& d) {
    return {s.w1 + a * d.w1, s.w1p + a * d.w1p, s.w2 + a * d.w2, s.w2p + a * d.w2p};
}

// Integrate w'' + (S/2) w = 0 for both columns along the segment base ->
// target, parametrized by t in [0,1].
template <typename SFn>
PairState integrate_segment(const SFn& S, Complex base, Complex dir, PairState s,
                            double step) {
    double len = std::abs(dir);
    if (len == 0.0) return s;
    long n = std::lround(std::ceil(len / step));
    double h = 1.0 / static_cast<double>(n);

    auto rhs = [&](double t, const PairState& y) -> PairState {
        Complex half_s = 0.5 * S(base + t * dir);
        return {dir * y.w1p, dir * (-half_s * y.w1), dir * y.w2p, dir * (-half_s * y.w2)};
    };
    for (long k = 0; k < n; ++k) {
        double t = static_cast<double>(k) * h;
        PairState k1 = rhs(t, s);
        PairState k2 = rhs(t + 0.5 * h, axpy(s, 0.5 * h, k1));
        PairState k3 = rhs(t + 0.5 * h, axpy(s, 0.5 * h, k2));
        PairState k4 = rhs(t + h, axpy(s, h, k3));
        s.w1 += h / 6.0 * (k1.w1 + 2.0 * k2.w1 + 2.0 * k3.w1 + k4.w1);
        s.w1p += h / 6.0 * (k1.w1p + 2.0 * k2.w1p + 2.0 * k3.w1p + k4.w1p);
        s.w2 += h / 6.0 * (k1.w2 + 2.0 * k2.w2 + 2.0 * k3.w2 + k4.w2);
        s.w2p += h / 6.0 * (k1.w2p + 2.0 * k2.w2p + 2.0 * k3.w2p + k4.w2p);
    }
    return s;
}

double wronskian_residual(const PairState& s) {
    return std::abs(s.w1p * s.w2 - s.w1 * s.w2p - 1.0);
}

PairSample to_sample(Complex z, const PairState& s) {
    return {z, s.w1, s.w1p, s.w2, s.w2p, wronskian_residual(s)};
}

template <typename SFn>
OdeSolutionPair run_targets(const SFn& S, Complex base, const PairState& init,
                            const std::vector<Complex>& targets, const IntegrateOptions& opts) {
    OdeSolutionPair out;
    out.base_point = base;
    out.samples.resize(targets.size());
    parallel_for(targets.size(), [&](std::size_t i) {
        PairState s = integrate_segment(S, base, targets[i] - base, init, opts.step);
        out.samples[i] = to_sample(targets[i], s);
    });
    for (const PairSample& s : out.samples) {
        out.max_wronskian_residual = std::max(out.max_wronskian_residual, s.wronskian_residual);
    }
    return out;
}

} // namespace

OdeSolutionPair integrate_pair(const Poly& schwarzian, const std::vector<Complex>& targets,
                               const IntegrateOptions& opts) {
    for (Complex z : targets) {
        if (std::abs(z) > 0.9 + 1e-12) {
            throw DomainError("integrate_pair: targets must satisfy |z| <= 0.9");
        }
    }
    if (!(opts.step > 0.0)) {
        throw DomainError("integrate_pair: step must be positive");
    }
    auto S = [&](Complex z) { return poly_eval(schwarzian, z); };
    PairState init{Complex(0.0, 0.0), Complex(1.0, 0.0), Complex(1.0, 0.0), Complex(0.0, 0.0)};

    double step = opts.step;
    for (int attempt = 0; attempt < 2; ++attempt) {
        OdeSolutionPair out = run_targets(S, Complex(0.0, 0.0), init, targets, {step, opts.residual_tol});
        out.schwarzian_profile = schwarzian;
        if (out.max_wronskian_residual <= opts.residual_tol) return out;
        step /= 10.0;
    }
    throw ConvergenceError("integrate_pair: Wronskian residual above tolerance");
}

OdeSolutionPair integrate_pair_from(const std::function<Complex(Complex)>& schwarzian,
                                    Complex base_point,
                                    Complex w1_0, Complex w1p_0, Complex w2_0, Complex w2p_0,
                                    const std::vector<Complex>& targets,
                                    const IntegrateOptions& opts) {
    if (!(opts.step > 0.0)) {
        throw DomainError("integrate_pair_from: step must be positive");
    }
    PairState init{w1_0, w1p_0, w2_0, w2p_0};
    if (wronskian_residual(init) > 1e-10) {
        throw DomainError("integrate_pair_from: initial data must have unit Wronskian");
    }
    double step = opts.step;
    for (int attempt = 0; attempt < 2; ++attempt) {
        OdeSolutionPair out = run_targets(schwarzian, base_point, init, targets,
                                          {step, opts.residual_tol});
        if (out.max_wronskian_residual <= opts.residual_tol) return out;
        step /= 10.0;
    }
    throw ConvergenceError("integrate_pair_from: Wronskian residual above tolerance");
}

double spherical_via_pair(const PairSample& s) {
    return 1.0 / (std::norm(s.w1) + std::norm(s.w2));
}

double spherical_direct_fd(const Poly& schwarzian, Complex z, double h, const IntegrateOptions& opts) {
    OdeSolutionPair triple = integrate_pair(schwarzian, {z, z + h, z - h}, opts);
    const PairSample& c = triple.samples[0];
    const PairSample& plus = triple.samples[1];
    const PairSample& minus = triple.samples[2];

    // Differentiate whichever ratio stays bounded; both have the same
    // spherical derivative.
    bool flip = std::abs(c.w1) > std::abs(c.w2);
    auto ratio = [flip](const PairSample& s) { return flip ? s.w2 / s.w1 : s.w1 / s.w2; };
    Complex fz = ratio(c);
    Complex fp = (ratio(plus) - ratio(minus)) / (2.0 * h);
    return std::abs(fp) / (1.0 + std::norm(fz));
}

SelfmapBoundReport verify_selfmap_bound(const MeroFunction& f, Complex z0, double c,
                                        const IntegrateOptions& opts) {
    double s = std::abs(z0);
    if (!(s < 1.0)) {
        throw DomainError("verify_selfmap_bound: z0 must lie in the open disk");
    }
    if (!level_is_feasible(c)) {
        throw InfeasibleError("verify_selfmap_bound: level c must lie in (0, 1/2]");
    }

    DerivativeBundle b = f.eval_bundle(z0);
    if (b.at_pole || b.f.is_infinite() || std::abs(b.f.value()) > 1e-9) {
        throw DomainError("verify_selfmap_bound: requires f(z0) = 0");
    }
    Complex fp = b.fprime.value();
    if (std::abs(fp) == 0.0) {
        throw DomainError("verify_selfmap_bound: z0 is a critical point");
    }
    Complex lambda = std::sqrt(fp);

    // w1 = f (f')^{-1/2}, w2 = (f')^{-1/2}: unit Wronskian, w1(z0) = 0.
    Complex w1_0(0.0, 0.0);
    Complex w1p_0 = lambda;
    Complex w2_0 = 1.0 / lambda;
    Complex w2p_0 = -b.fsecond.value() / (2.0 * lambda * lambda * lambda);

    std::vector<Complex> targets;
    double fd_h = 1e-3;
    targets.push_back(z0 + fd_h);
    targets.push_back(z0 - fd_h);
    for (int ring = 1; ring <= 6; ++ring) {
        double r = 0.15 * ring;
        for (int j = 0; j < 24; ++j) {
            double t = 2.0 * std::numbers::pi * j / 24.0;
            targets.push_back(Complex(r * std::cos(t), r * std::sin(t)));
        }
    }

    auto S = [&](Complex z) { return f.schwarzian(z); };
    OdeSolutionPair pair = integrate_pair_from(S, z0, w1_0, w1p_0, w2_0, w2p_0, targets, opts);

    SelfmapBoundReport rep;
    rep.z0 = z0;
    rep.c = c;
    rep.fsharp_at_z0 = std::norm(lambda);
    rep.fsharp_direct = f.spherical_derivative(z0);
    double m = 1.0 - s * s;
    rep.bound = asymptotic_factor(s) / (c * m * m);
    rep.max_wronskian_residual = pair.max_wronskian_residual;

    double sqrt_c = std::sqrt(c);
    for (const PairSample& sample : pair.samples) {
        rep.max_selfmap_modulus = std::max(rep.max_selfmap_modulus, sqrt_c * std::abs(sample.w1));
    }
    // w''(z0) measured from the two stencil targets next to z0 (w(z0) = 0)
    Complex w_plus = sqrt_c * pair.samples[0].w1;
    Complex w_minus = sqrt_c * pair.samples[1].w1;
    rep.wsecond_at_z0 = std::abs((w_plus + w_minus) / (fd_h * fd_h));

    rep.selfmap_ok = rep.max_selfmap_modulus <= 1.0 + 1e-6;
    rep.bound_holds = rep.fsharp_at_z0 <= rep.bound + 1e-10;
    if (!rep.selfmap_ok) {
        throw InfeasibleError("verify_selfmap_bound: some |sqrt(c) w1| exceeds 1; the supplied "
                              "level c overstates inf f#");
    }
    return rep;
}

} // namespace schwarz
