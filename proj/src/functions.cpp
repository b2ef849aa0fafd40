#include "schwarz/functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "schwarz/errors.hpp"
#include "schwarz/parallel.hpp"

namespace schwarz {

namespace {

constexpr double kPoleVicinity = 1e-6;     // reciprocal-chart radius around poles
constexpr double kPoleDetect = 1e-12;      // eval() reports infinity this close to a root
constexpr double kCommonRootTol = 1e-10;
constexpr double kMultipleRootTol = 1e-7;

// Two Newton polish steps; companion-matrix roots are good seeds but can be
// a few ulps sloppy for clustered configurations.
Complex polish_root(const Poly& p, const Poly& dp, Complex r) {
    for (int k = 0; k < 2; ++k) {
        Complex d = poly_eval(dp, r);
        if (std::abs(d) < 1e-14) break;
        r -= poly_eval(p, r) / d;
    }
    return r;
}

// Magnitude yardstick for deciding whether a polynomial value is "zero
// relative to its coefficients" at z.
double poly_scale_at(const Poly& p, Complex z) {
    double m = std::max(1.0, std::abs(z));
    double acc = 0.0, pw = 1.0;
    for (const Complex& c : p) {
        acc += std::abs(c) * pw;
        pw *= m;
    }
    return acc;
}

} // namespace

RationalFunction::RationalFunction(Poly numerator, Poly denominator)
    : num_(poly_trim(std::move(numerator))), den_(poly_trim(std::move(denominator))) {
    if (den_.empty()) {
        throw DomainError("RationalFunction: denominator is identically zero");
    }
    wronskian_ = poly_trim(poly_sub(poly_mul(poly_derivative(num_), den_),
                                    poly_mul(num_, poly_derivative(den_))));
    if (poly_degree(den_) >= 1) {
        Poly dden = poly_derivative(den_);
        for (Complex r : poly_roots(den_)) {
            poles_.push_back(polish_root(den_, dden, r));
        }
    }
    if (poly_degree(num_) >= 1 && !poles_.empty()) {
        Poly dnum = poly_derivative(num_);
        for (Complex r : poly_roots(num_)) {
            Complex zr = polish_root(num_, dnum, r);
            for (const Complex& pole : poles_) {
                if (std::abs(zr - pole) < kCommonRootTol) {
                    throw DomainError("RationalFunction: numerator and denominator share a root");
                }
            }
        }
    }
}

RationalFunction RationalFunction::reciprocal() const {
    return RationalFunction(den_, num_);
}

MeroFunction MeroFunction::rational(Poly numerator, Poly denominator) {
    return MeroFunction(RationalFunction(std::move(numerator), std::move(denominator)));
}

MeroFunction MeroFunction::rigid_scaled(const RigidMotion& motion, Complex eta) {
    Complex a = motion.a(), b = motion.b();
    // T(eta z) = (a eta z + b) / (-conj(b) eta z + conj(a))
    MeroFunction f(RationalFunction({b, a * eta}, {std::conj(a), -std::conj(b) * eta}));
    f.rigid_ = RigidScaled{motion, eta};
    return f;
}

MeroFunction MeroFunction::blaschke(std::vector<BlaschkeFactor> factors) {
    Poly num{Complex(1.0, 0.0)}, den{Complex(1.0, 0.0)};
    for (auto& fac : factors) {
        if (!(std::abs(fac.center) < 1.0)) {
            throw DomainError("BlaschkeFactor: center must lie strictly inside the disk");
        }
        double r = std::abs(fac.rotation);
        if (std::abs(r - 1.0) > 1e-12) {
            throw DomainError("BlaschkeFactor: rotation must be unimodular");
        }
        fac.rotation /= r;
        num = poly_mul(num, {-fac.rotation * fac.center, fac.rotation});
        den = poly_mul(den, {Complex(1.0, 0.0), -std::conj(fac.center)});
    }
    MeroFunction f(RationalFunction(std::move(num), std::move(den)));
    f.factors_ = std::move(factors);
    return f;
}

SpherePoint MeroFunction::eval(Complex z) const {
    if (distance_to_nearest_pole(z) < kPoleDetect) {
        return SpherePoint::infinity();
    }
    Complex q = poly_eval(rat_.denominator(), z);
    if (q == Complex(0.0, 0.0)) return SpherePoint::infinity();
    return SpherePoint::from_value(poly_eval(rat_.numerator(), z) / q);
}

DerivativeBundle MeroFunction::eval_bundle(Complex z) const {
    const Poly& num = rat_.numerator();
    const Poly& den = rat_.denominator();
    const Poly& wron = rat_.wronskian_numerator();
    Poly dwron = poly_derivative(wron);

    bool flip = distance_to_nearest_pole(z) < kPoleVicinity;
    // In the reciprocal chart (q/p) the derivative numerator changes sign.
    const Poly& top = flip ? den : num;
    const Poly& bot = flip ? num : den;
    double sign = flip ? -1.0 : 1.0;

    Complex pv = poly_eval(top, z);
    Complex qv = poly_eval(bot, z);
    Complex n0 = sign * poly_eval(wron, z);
    Complex n1 = sign * poly_eval(dwron, z);
    Complex q1 = poly_eval(poly_derivative(bot), z);

    DerivativeBundle out;
    out.at_pole = flip;
    out.f = SpherePoint::from_value(pv / qv);
    out.fprime = SpherePoint::from_value(n0 / (qv * qv));
    out.fsecond = SpherePoint::from_value((n1 * qv - 2.0 * n0 * q1) / (qv * qv * qv));
    return out;
}

double MeroFunction::spherical_derivative(Complex z) const {
    // |p'q - pq'| / (|p|^2 + |q|^2): the defining |f'|/(1+|f|^2) away from
    // poles, the reciprocal-chart value near them, and smooth across.
    Complex pv = poly_eval(rat_.numerator(), z);
    Complex qv = poly_eval(rat_.denominator(), z);
    Complex n = poly_eval(rat_.wronskian_numerator(), z);
    return std::abs(n) / (std::norm(pv) + std::norm(qv));
}

Complex MeroFunction::schwarzian(Complex z) const {
    const Poly& wron = rat_.wronskian_numerator();
    Complex n0 = poly_eval(wron, z);
    if (std::abs(n0) <= 1e-12 * std::max(poly_scale_at(wron, z), 1e-300)) {
        throw DomainError("schwarzian: z is a critical point (f' vanishes)");
    }
    Poly dwron = poly_derivative(wron);
    Poly d2wron = poly_derivative(dwron);

    // Work in whichever chart (f or 1/f) keeps the local denominator large;
    // the Schwarzian is the same in both.
    Complex pv = poly_eval(rat_.numerator(), z);
    Complex qv = poly_eval(rat_.denominator(), z);
    bool flip = std::abs(pv) > std::abs(qv);
    const Poly& bot = flip ? rat_.numerator() : rat_.denominator();
    double sign = flip ? -1.0 : 1.0;

    Complex q0 = flip ? pv : qv;
    Complex q1 = poly_eval(poly_derivative(bot), z);
    Complex q2 = poly_eval(poly_derivative(poly_derivative(bot)), z);
    Complex N0 = sign * n0;
    Complex N1 = sign * poly_eval(dwron, z);
    Complex N2 = sign * poly_eval(d2wron, z);

    // g = f''/f' = (N'q - 2Nq')/(qN), then S = g' - g^2/2.
    Complex U = N1 * q0 - 2.0 * N0 * q1;
    Complex V = q0 * N0;
    Complex Up = N2 * q0 - N1 * q1 - 2.0 * N0 * q2;
    Complex Vp = q1 * N0 + q0 * N1;
    Complex g = U / V;
    Complex gp = (Up * V - U * Vp) / (V * V);
    return gp - 0.5 * g * g;
}

MeroFunction MeroFunction::postcompose(const RigidMotion& T) const {
    Complex a = T.a(), b = T.b();
    Poly num = poly_add(poly_scale(rat_.numerator(), a), poly_scale(rat_.denominator(), b));
    Poly den = poly_add(poly_scale(rat_.numerator(), -std::conj(b)),
                        poly_scale(rat_.denominator(), std::conj(a)));
    MeroFunction f{RationalFunction(std::move(num), std::move(den))};
    if (rigid_) {
        f.rigid_ = RigidScaled{T * rigid_->motion, rigid_->eta};
    }
    return f;
}

MeroFunction MeroFunction::reciprocal() const {
    MeroFunction f{rat_.reciprocal()};
    if (rigid_) {
        // 1/w is itself a rigid motion of the sphere (a=0, b=i).
        f.rigid_ = RigidScaled{RigidMotion(Complex(0.0, 0.0), Complex(0.0, 1.0)) * rigid_->motion,
                               rigid_->eta};
    }
    return f;
}

double MeroFunction::distance_to_nearest_pole(Complex z) const {
    double d = std::numeric_limits<double>::infinity();
    for (const Complex& p : rat_.poles()) {
        d = std::min(d, std::abs(z - p));
    }
    return d;
}

UnivalenceReport probe_local_univalence(const MeroFunction& f, const GridSpec& grid) {
    grid.validate();
    UnivalenceReport rep;
    const RationalFunction& rat = f.as_rational();
    const Poly wron = poly_trim(rat.wronskian_numerator());

    if (wron.empty()) {
        // constant function: f' vanishes identically
        rep.is_locally_univalent = false;
        rep.grid_min_spherical = 0.0;
        return rep;
    }

    // Exact part: critical points are roots of p'q - pq'; multiple poles are
    // clustered denominator roots. Only the open disk matters.
    if (poly_degree(wron) >= 1) {
        Poly dwron = poly_derivative(wron);
        for (Complex r : poly_roots(wron)) {
            Complex zr = polish_root(wron, dwron, r);
            if (f.distance_to_nearest_pole(zr) < 1e-8) continue;  // belongs to the pole analysis
            if (std::abs(zr) < 1.0 - 1e-12) {
                rep.critical_points.push_back(zr);
            }
        }
    }
    const auto& poles = rat.poles();
    std::vector<bool> used(poles.size(), false);
    for (std::size_t i = 0; i < poles.size(); ++i) {
        if (used[i]) continue;
        for (std::size_t j = i + 1; j < poles.size(); ++j) {
            if (!used[j] && std::abs(poles[i] - poles[j]) < kMultipleRootTol) {
                used[j] = true;
                if (std::abs(poles[i]) < 1.0 - 1e-12) {
                    if (rep.multiple_poles.empty() ||
                        std::abs(rep.multiple_poles.back() - poles[i]) > kMultipleRootTol) {
                        rep.multiple_poles.push_back(poles[i]);
                    }
                }
            }
        }
    }

    // Sampled floor, mostly a cross-check on the exact part.
    auto radii = grid.radii();
    auto angles = grid.angles();
    std::size_t nr = radii.size(), na = angles.size();
    double grid_min = parallel_min(nr * na, [&](std::size_t idx) {
        double r = radii[idx / na], t = angles[idx % na];
        return f.spherical_derivative(Complex(r * std::cos(t), r * std::sin(t)));
    });
    rep.grid_min_spherical = std::min(grid_min, f.spherical_derivative(Complex(0.0, 0.0)));

    rep.is_locally_univalent = rep.critical_points.empty() && rep.multiple_poles.empty();
    return rep;
}

} // namespace schwarz
