#include "schwarz/rational_bound.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "schwarz/errors.hpp"
#include "schwarz/membership.hpp"
#include "schwarz/numerics.hpp"
#include "schwarz/parallel.hpp"

namespace schwarz {

PolePrescription::PolePrescription(std::vector<Complex> poles) : poles_(std::move(poles)) {
    if (poles_.empty()) {
        throw DomainError("PolePrescription: need at least one pole");
    }
    for (const Complex& p : poles_) {
        if (!(std::abs(p) > 1.0)) {
            throw DomainError("PolePrescription: every pole must lie strictly outside the "
                              "closed unit disk");
        }
    }
}

double bernstein_factor(const PolePrescription& p, Complex z) {
    if (std::abs(std::abs(z) - 1.0) > 1e-12) {
        throw DomainError("bernstein_factor: z must lie on the unit circle");
    }
    double acc = 0.0;
    for (const Complex& pole : p.poles()) {
        acc += (std::norm(pole) - 1.0) / std::norm(pole - z);
    }
    return acc;
}

double kn(const PolePrescription& p) {
    double acc = 0.0;
    for (const Complex& pole : p.poles()) {
        double m = std::abs(pole);
        acc += (m + 1.0) / (m - 1.0);
    }
    return acc;
}

double norm_bound(const PolePrescription& p, double c) {
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw DomainError("norm_bound: c must be positive");
    }
    double k = kn(p);
    if (c > 0.5 * k) {
        throw InfeasibleError("norm_bound: requires c <= k_n/2; no member of the class has a "
                              "larger derivative level with these poles");
    }
    double ratio = 2.0 * c / k;
    double disc = std::max(0.0, 1.0 - ratio * ratio);
    return (k / (2.0 * c)) * (1.0 + std::sqrt(disc));
}

MeroFunction prescribed_rational(const PolePrescription& p, const Poly& numerator) {
    return MeroFunction::rational(numerator, poly_from_roots(p.poles()));
}

SupNormEstimate boundary_sup_norm(const MeroFunction& f, int samples) {
    if (samples < 8) {
        throw DomainError("boundary_sup_norm: need at least 8 samples");
    }
    auto modulus_at = [&](double t) {
        SpherePoint v = f.eval(Complex(std::cos(t), std::sin(t)));
        return v.is_infinite() ? std::numeric_limits<double>::infinity() : std::abs(v.value());
    };

    double two_pi = 2.0 * std::numbers::pi;
    std::vector<double> vals(samples);
    parallel_for(samples, [&](std::size_t j) { vals[j] = modulus_at(two_pi * j / samples); });

    std::size_t best = 0;
    for (std::size_t j = 1; j < vals.size(); ++j) {
        if (vals[j] > vals[best]) best = j;
    }
    SupNormEstimate est;
    if (!std::isfinite(vals[best])) {
        est.value = vals[best];
        est.theta = two_pi * best / samples;
        return est;
    }
    double t0 = two_pi * (static_cast<double>(best) - 1.0) / samples;
    double t1 = two_pi * (static_cast<double>(best) + 1.0) / samples;
    auto [theta, value] = golden_section_max(modulus_at, t0, t1);
    est.theta = theta;
    est.value = std::max(value, vals[best]);
    return est;
}

RationalBoundReport check_rational_bound(const MeroFunction& f, const PolePrescription& p,
                                         const GridSpec& grid) {
    RationalBoundReport rep;
    rep.poles = p.poles();
    rep.k_n = kn(p);

    MembershipReport mem = probe_membership(f, grid);
    rep.c_f = mem.c_interior_estimate;
    rep.sup_norm = boundary_sup_norm(f).value;

    rep.applicable = rep.c_f > 0.0 && rep.c_f <= 0.5 * rep.k_n;
    if (rep.applicable) {
        rep.bound = norm_bound(p, rep.c_f);
        rep.margin = rep.bound - rep.sup_norm;
    }
    return rep;
}

} // namespace schwarz
