#include "schwarz/sphere.hpp"

#include <cmath>
#include <limits>

namespace schwarz {

namespace {

bool finite_components(Complex v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

} // namespace

SpherePoint::SpherePoint(Complex v) : v_(v) {
    if (!finite_components(v)) {
        throw DomainError("SpherePoint: nonfinite components; use from_value for clamping");
    }
}

SpherePoint SpherePoint::infinity() {
    SpherePoint p;
    p.infinite_ = true;
    p.v_ = Complex(0.0, 0.0);
    return p;
}

SpherePoint SpherePoint::from_value(Complex v, double threshold) {
    if (!finite_components(v) || std::abs(v) > threshold) {
        return infinity();
    }
    return SpherePoint(v);
}

Complex SpherePoint::value() const {
    if (infinite_) {
        throw DomainError("SpherePoint: no finite value at infinity");
    }
    return v_;
}

double SpherePoint::abs() const {
    if (infinite_) return std::numeric_limits<double>::infinity();
    return std::abs(v_);
}

double SpherePoint::density() const {
    if (infinite_) return 0.0;
    return 1.0 / (1.0 + std::norm(v_));
}

SpherePoint SpherePoint::reciprocal() const {
    if (infinite_) return SpherePoint(Complex(0.0, 0.0));
    if (v_ == Complex(0.0, 0.0)) return infinity();
    return from_value(1.0 / v_);
}

bool SpherePoint::operator==(const SpherePoint& o) const {
    if (infinite_ || o.infinite_) return infinite_ == o.infinite_;
    return v_ == o.v_;
}

double chordal_distance(const SpherePoint& p, const SpherePoint& q) {
    if (p.is_infinite() && q.is_infinite()) return 0.0;
    if (p.is_infinite()) return chordal_distance(q, p);
    if (q.is_infinite()) {
        return std::min(1.0, 1.0 / std::hypot(1.0, std::abs(p.value())));
    }
    Complex pv = p.value(), qv = q.value();
    double d = std::abs(pv - qv) / (std::hypot(1.0, std::abs(pv)) * std::hypot(1.0, std::abs(qv)));
    return std::min(1.0, d);
}

RigidMotion::RigidMotion(Complex a, Complex b) : a_(a), b_(b) {
    double n = std::sqrt(std::norm(a_) + std::norm(b_));
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw DomainError("RigidMotion: coefficients must not both vanish");
    }
    a_ /= n;
    b_ /= n;
}

SpherePoint RigidMotion::operator()(const SpherePoint& p) const {
    if (p.is_infinite()) {
        // limit of (a z + b)/(-conj(b) z + conj(a)) as z -> inf
        if (b_ == Complex(0.0, 0.0)) return SpherePoint::infinity();
        return SpherePoint::from_value(a_ / (-std::conj(b_)));
    }
    Complex z = p.value();
    Complex den = -std::conj(b_) * z + std::conj(a_);
    Complex num = a_ * z + b_;
    if (std::abs(den) * SpherePoint::kDefaultOverflowThreshold <= std::abs(num)) {
        return SpherePoint::infinity();
    }
    if (den == Complex(0.0, 0.0)) return SpherePoint::infinity();
    return SpherePoint::from_value(num / den);
}

Complex RigidMotion::derivative(Complex z) const {
    Complex den = -std::conj(b_) * z + std::conj(a_);
    return 1.0 / (den * den);
}

RigidMotion operator*(const RigidMotion& lhs, const RigidMotion& rhs) {
    // matrix product of the unitary representatives [a b; -conj(b) conj(a)]
    Complex a = lhs.a_ * rhs.a_ - lhs.b_ * std::conj(rhs.b_);
    Complex b = lhs.a_ * rhs.b_ + lhs.b_ * std::conj(rhs.a_);
    return RigidMotion(a, b);
}

DiskAutomorphism::DiskAutomorphism(Complex rotation, Complex center)
    : rotation_(rotation), center_(center) {
    double r = std::abs(rotation_);
    if (std::abs(r - 1.0) > 1e-12) {
        throw DomainError("DiskAutomorphism: rotation must be unimodular");
    }
    rotation_ /= r;
    if (!(std::abs(center_) < 1.0)) {
        throw DomainError("DiskAutomorphism: center must lie strictly inside the disk");
    }
}

Complex DiskAutomorphism::operator()(Complex z) const {
    if (std::abs(z) > 1.0 + 1e-9) {
        throw DomainError("DiskAutomorphism: point outside the closed disk");
    }
    return rotation_ * (z + center_) / (1.0 + std::conj(center_) * z);
}

Complex DiskAutomorphism::derivative(Complex z) const {
    if (std::abs(z) > 1.0 + 1e-9) {
        throw DomainError("DiskAutomorphism: point outside the closed disk");
    }
    Complex den = 1.0 + std::conj(center_) * z;
    return rotation_ * (1.0 - std::norm(center_)) / (den * den);
}

DiskAutomorphism DiskAutomorphism::inverse() const {
    // S(z) = rot (z + c)/(1 + conj(c) z) inverts to
    // S^{-1}(w) = conj(rot) (w - rot c)/(1 - conj(rot c)/rot * w) ... easier
    // through the substitution w' = w/rot: z = (w' - c)/(1 - conj(c) w').
    Complex rot_inv = std::conj(rotation_);
    Complex new_center = -rotation_ * center_;
    // S^{-1}(w) = rot_inv * (w + new_center*rot...) resolved below by direct check:
    // z = (w/rot - c) / (1 - conj(c) w/rot) = (w - rot c) / (rot - conj(c) w)
    //   = rot_inv (w - rot c) / (1 - rot_inv conj(c) w)
    // which matches rotation' = rot_inv, center' = -rot c, since
    // conj(center') = -conj(rot) conj(c) = -(rot_inv) conj(c).
    return DiskAutomorphism(rot_inv, new_center);
}

double hyperbolic_density(Complex z) {
    double n = std::norm(z);
    if (!(n < 1.0)) {
        throw DomainError("hyperbolic_density: point outside the open disk");
    }
    return 1.0 / (1.0 - n);
}

} // namespace schwarz
