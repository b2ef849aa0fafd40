#include "schwarz/schwarz_pick.hpp"

#include <cmath>
#include <numbers>
#include <optional>

#include "schwarz/errors.hpp"
#include "schwarz/rng.hpp"

namespace schwarz {

double sp_bound(double s) {
    if (!(s > 0.0 && s < 1.0)) {
        throw DomainError("sp_bound: s must lie in (0,1); at s = 0 the classical bound 1 applies");
    }
    return (std::sqrt(4.0 + s * s) - s) / (2.0 * (1.0 - s * s));
}

SpBoundValue sp_bound_or_classical(double s) {
    if (s == 0.0) return {1.0, true};
    return {sp_bound(s), false};
}

namespace {

// phi_{z0}(z) = (z - z0)/(1 - conj(z0) z)
Complex phi(Complex z0, Complex z) {
    return (z - z0) / (1.0 - std::conj(z0) * z);
}

Complex phi_prime_at_base(Complex z0) {
    return 1.0 / (1.0 - std::norm(z0));
}

Complex phi_second_at_base(Complex z0) {
    double m = 1.0 - std::norm(z0);
    return 2.0 * std::conj(z0) / (m * m);
}

// The vanishing-w'' constraint on the inner factor: g'(z0)/g(z0) must equal
// -conj(z0)/(1-|z0|^2).
Complex required_log_derivative(Complex z0) {
    return -std::conj(z0) / (1.0 - std::norm(z0));
}

// Log-derivative at z0 of the automorphism factor with parameter q:
// Lambda(q) = (1-|q|^2)/((1 - conj(q) z0)(z0 - q)).
Complex factor_log_derivative(Complex z0, Complex q) {
    return (1.0 - std::norm(q)) / ((1.0 - std::conj(q) * z0) * (z0 - q));
}

// Solve Lambda(q) = mu for q inside the disk: 2-D Newton with a numeric
// Jacobian (Lambda is not holomorphic in q), tried from several seeds.
std::optional<Complex> solve_factor_parameter(Complex z0, Complex mu,
                                              const std::vector<Complex>& seeds) {
    const double h = 1e-7;
    for (Complex seed : seeds) {
        Complex q = seed;
        bool ok = false;
        for (int it = 0; it < 60; ++it) {
            if (!(std::abs(q) < 0.999999)) break;
            Complex F = factor_log_derivative(z0, q) - mu;
            if (std::abs(F) < 1e-13 * std::max(1.0, std::abs(mu))) {
                ok = true;
                break;
            }
            Complex Fx = (factor_log_derivative(z0, q + h) - factor_log_derivative(z0, q - h)) / (2.0 * h);
            Complex Fy = (factor_log_derivative(z0, q + Complex(0.0, h)) -
                          factor_log_derivative(z0, q - Complex(0.0, h))) / (2.0 * h);
            // real 2x2 system [Fx | Fy] d = -F with d = (dx, dy)
            double a11 = Fx.real(), a12 = Fy.real();
            double a21 = Fx.imag(), a22 = Fy.imag();
            double det = a11 * a22 - a12 * a21;
            if (std::abs(det) < 1e-18) break;
            double dx = (-F.real() * a22 + F.imag() * a12) / det;
            double dy = (-a11 * F.imag() + a21 * F.real()) / det;
            double step_cap = 0.25;
            Complex d(dx, dy);
            if (std::abs(d) > step_cap) d *= step_cap / std::abs(d);
            q += d;
        }
        if (ok && std::abs(q) < 1.0) return q;
    }
    return std::nullopt;
}

std::vector<Complex> default_seeds(Complex z0) {
    std::vector<Complex> seeds;
    for (double r : {0.3, 0.6, 0.85}) {
        for (int k = 0; k < 8; ++k) {
            double t = 2.0 * std::numbers::pi * k / 8.0;
            seeds.push_back(Complex(r * std::cos(t), r * std::sin(t)));
        }
    }
    seeds.push_back(0.5 * z0);
    seeds.push_back(z0 * 0.9);
    return seeds;
}

} // namespace

Complex ConstrainedSelfMap::w(Complex z) const {
    return phi(z0, z) * scale * inner.eval(z).value();
}

Complex ConstrainedSelfMap::wprime_at_z0() const {
    return scale * phi_prime_at_base(z0) * inner.eval(z0).value();
}

Complex ConstrainedSelfMap::wsecond_at_z0() const {
    DerivativeBundle b = inner.eval_bundle(z0);
    return scale * (phi_second_at_base(z0) * b.f.value() +
                    2.0 * phi_prime_at_base(z0) * b.fprime.value());
}

ExtremalInnerFactor construct_extremal_automorphism(Complex z0) {
    double s = std::abs(z0);
    if (!(s > 0.0 && s < 1.0)) {
        throw DomainError("construct_extremal_automorphism: need 0 < |z0| < 1");
    }

    // Real-axis reduction: for z0 = s the parameter solves
    // p^2 (2s^2 - 1) - p s (1 + s^2) + 1 = 0; the general case is its
    // rotation by arg z0.
    double A = 2.0 * s * s - 1.0;
    double B = -s * (1.0 + s * s);
    double C = 1.0;
    std::vector<double> real_roots;
    if (std::abs(A) < 1e-14) {
        real_roots.push_back(-C / B);
    } else {
        double disc = B * B - 4.0 * A * C;
        if (disc < 0.0) {
            throw ConvergenceError("construct_extremal_automorphism: no real parameter root");
        }
        double sq = std::sqrt(disc);
        real_roots.push_back((-B + sq) / (2.0 * A));
        real_roots.push_back((-B - sq) / (2.0 * A));
    }

    Complex dir = z0 / s;   // e^{i arg z0}
    Complex mu = required_log_derivative(z0);

    ExtremalInnerFactor out;
    for (double pr : real_roots) {
        if (!(std::abs(pr) < 1.0)) continue;
        // rotate into position, then polish on the full complex constraint
        auto q = solve_factor_parameter(z0, mu, {dir * pr});
        if (!q) {
            throw ConvergenceError("construct_extremal_automorphism: Newton polish failed");
        }
        out.inside_roots.push_back(*q);
    }
    if (out.inside_roots.empty()) {
        throw ConvergenceError("construct_extremal_automorphism: no parameter root inside the disk");
    }

    out.p = out.inside_roots.front();
    out.g = DiskAutomorphism(Complex(1.0, 0.0), -out.p);
    Complex g_at = out.g(z0);
    out.g_abs_at_z0 = std::abs(g_at);
    out.attained = std::abs(phi_prime_at_base(z0)) * out.g_abs_at_z0;
    return out;
}

std::vector<SampledMap> sample_constrained_maps(Complex z0, int count, std::uint64_t seed) {
    double s = std::abs(z0);
    if (!(s > 0.0 && s < 1.0)) {
        throw DomainError("sample_constrained_maps: need 0 < |z0| < 1");
    }
    if (count < 1) {
        throw DomainError("sample_constrained_maps: count must be positive");
    }

    ExtremalInnerFactor extremal = construct_extremal_automorphism(z0);
    Complex kappa = required_log_derivative(z0);
    std::mt19937_64 rng(seed);
    auto seeds = default_seeds(z0);

    std::vector<SampledMap> out;
    out.reserve(count);
    long attempts = 0;
    const long max_attempts = 200L * count + 1000;
    while (static_cast<int>(out.size()) < count) {
        if (++attempts > max_attempts) {
            throw ConvergenceError("sample_constrained_maps: rejection loop stalled");
        }
        bool scaled_family = (out.size() % 2 == 0);
        if (scaled_family) {
            // t = 1 first so the extremal itself is always present
            double t = out.empty() ? 1.0 : 1.0 - uniform01(rng) * (1.0 - 1e-6);
            SampledMap m{ConstrainedSelfMap{z0,
                                            MeroFunction::blaschke({{extremal.p, Complex(1.0, 0.0)}}),
                                            t},
                         0.0, 0.0, 1};
            m.wprime_abs = std::abs(m.map.wprime_at_z0());
            m.wsecond_abs = std::abs(m.map.wsecond_at_z0());
            out.push_back(std::move(m));
            continue;
        }

        // random Blaschke product, then one corrective factor to restore the
        // second-derivative constraint
        int deg = 1 + static_cast<int>(rng() % 3);
        std::vector<BlaschkeFactor> factors;
        for (int d = 0; d < deg; ++d) {
            factors.push_back({uniform_disk(rng, 0.7), uniform_circle(rng)});
        }
        MeroFunction B = MeroFunction::blaschke(factors);
        DerivativeBundle bb = B.eval_bundle(z0);
        Complex Bv = bb.f.value();
        if (std::abs(Bv) < 0.05) continue;   // corrective mu would be ill-conditioned
        Complex mu = kappa - bb.fprime.value() / Bv;
        std::optional<Complex> q;
        if (std::abs(mu) < 1e-12) {
            // constraint already satisfied; no corrective factor
            q = std::nullopt;
        } else {
            q = solve_factor_parameter(z0, mu, seeds);
            if (!q) continue;   // no admissible corrective parameter; resample
            if (std::abs(*q - z0) < 1e-9) continue;  // degenerate: would cancel phi's zero
        }
        std::vector<BlaschkeFactor> all = factors;
        if (q) all.push_back({*q, Complex(1.0, 0.0)});
        MeroFunction inner = MeroFunction::blaschke(all);
        if (std::abs(inner.eval(z0).value()) < 1e-10) continue;  // w'(z0) would be trivially 0
        double t = 1.0 - uniform01(rng) * (1.0 - 1e-6);
        SampledMap m{ConstrainedSelfMap{z0, std::move(inner), t}, 0.0, 0.0,
                     static_cast<int>(all.size())};
        m.wprime_abs = std::abs(m.map.wprime_at_z0());
        m.wsecond_abs = std::abs(m.map.wsecond_at_z0());
        if (m.wsecond_abs > 1e-8) continue;   // filter, per the sampling contract
        out.push_back(std::move(m));
    }
    return out;
}

double extremal_boundary_defect(Complex z0, int boundary_samples) {
    ExtremalInnerFactor extremal = construct_extremal_automorphism(z0);
    // w = phi_{z0} * g is a product of two automorphism factors
    MeroFunction w = MeroFunction::blaschke({{z0, Complex(1.0, 0.0)},
                                             {extremal.p, Complex(1.0, 0.0)}});
    double worst = 0.0;
    for (int j = 0; j < boundary_samples; ++j) {
        double t = 2.0 * std::numbers::pi * j / boundary_samples;
        Complex z(std::cos(t), std::sin(t));
        worst = std::max(worst, std::abs(std::abs(w.eval(z).value()) - 1.0));
    }
    return worst;
}

} // namespace schwarz
