#pragma once

#include <complex>

#include "schwarz/errors.hpp"

namespace schwarz {

using Complex = std::complex<double>;

// Point on the Riemann sphere: either a finite complex value or the point at
// infinity. Finite values whose modulus exceeds the overflow threshold are
// *not* silently wrapped; conversion is explicit via from_value so callers
// decide where the chart ends.
class SpherePoint {
public:
    static constexpr double kDefaultOverflowThreshold = 1e150;

    SpherePoint() = default;                      // the origin
    SpherePoint(Complex v);                       // finite point, throws on nonfinite
    static SpherePoint infinity();
    // Clamp rule: values with |v| > threshold (or nan/inf components) map to
    // the point at infinity.
    static SpherePoint from_value(Complex v, double threshold = kDefaultOverflowThreshold);

    bool is_infinite() const { return infinite_; }
    Complex value() const;                        // throws DomainError at infinity
    double abs() const;                           // +inf at infinity

    // 1/(1 + |p|^2), the conformal factor of the chordal metric against the
    // euclidean one; 0 at infinity.
    double density() const;

    SpherePoint reciprocal() const;               // 1/p, with 1/0 = inf, 1/inf = 0

    bool operator==(const SpherePoint& o) const;

private:
    Complex v_{0.0, 0.0};
    bool infinite_ = false;
};

// |p - q| / sqrt((1+|p|^2)(1+|q|^2)), extended continuously to infinity.
// Symmetric, in [0, 1], and invariant under rigid motions of the sphere.
double chordal_distance(const SpherePoint& p, const SpherePoint& q);

// Rotation of the Riemann sphere, z -> (a z + b) / (-conj(b) z + conj(a))
// with |a|^2 + |b|^2 = 1. The coefficient pair is renormalized at
// construction; (a, b) and (-a, -b) give the same map.
class RigidMotion {
public:
    RigidMotion() : a_(1.0, 0.0), b_(0.0, 0.0) {}   // identity
    RigidMotion(Complex a, Complex b);               // throws if a = b = 0

    Complex a() const { return a_; }
    Complex b() const { return b_; }

    SpherePoint operator()(const SpherePoint& p) const;
    Complex derivative(Complex z) const;             // 1/(-conj(b) z + conj(a))^2

    RigidMotion inverse() const { return RigidMotion(std::conj(a_), -b_); }

    // lhs after rhs, i.e. (lhs * rhs)(z) = lhs(rhs(z))
    friend RigidMotion operator*(const RigidMotion& lhs, const RigidMotion& rhs);

private:
    Complex a_, b_;
};

// Conformal self-map of the unit disk, z -> rotation * (z + center)/(1 + conj(center) z),
// |rotation| = 1, |center| < 1. Used on the *domain* side; RigidMotion acts on
// the *range* sphere.
class DiskAutomorphism {
public:
    DiskAutomorphism() : rotation_(1.0, 0.0), center_(0.0, 0.0) {}
    DiskAutomorphism(Complex rotation, Complex center);

    Complex rotation() const { return rotation_; }
    Complex center() const { return center_; }

    // Defined on the closed disk (boundary sampling included); throws outside.
    Complex operator()(Complex z) const;
    Complex derivative(Complex z) const;

    DiskAutomorphism inverse() const;

private:
    Complex rotation_, center_;
};

// 1/(1 - |z|^2) for |z| < 1; throws on or outside the unit circle.
double hyperbolic_density(Complex z);

// 1/(1 + |p|^2), the chart form of the spherical metric density.
inline double spherical_density(const SpherePoint& p) { return p.density(); }

} // namespace schwarz
