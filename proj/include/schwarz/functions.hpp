#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "schwarz/grid.hpp"
#include "schwarz/polynomial.hpp"
#include "schwarz/sphere.hpp"

namespace schwarz {

// Quotient of coprime polynomials, the workhorse representation. Derivatives
// come from coefficient arithmetic, so they carry no sampling noise.
class RationalFunction {
public:
    // Coefficients ascending. Throws DomainError if the denominator is
    // identically zero or numerator and denominator share a root (closer
    // than 1e-10 after trimming).
    RationalFunction(Poly numerator, Poly denominator);

    const Poly& numerator() const { return num_; }
    const Poly& denominator() const { return den_; }

    // Roots of the denominator (cached at construction).
    const std::vector<Complex>& poles() const { return poles_; }

    // p'q - pq', the numerator of the derivative over q^2. Its roots are the
    // critical points; it is also the ingredient of the pole-stable spherical
    // derivative.
    const Poly& wronskian_numerator() const { return wronskian_; }

    RationalFunction reciprocal() const;

private:
    Poly num_, den_;
    Poly wronskian_;
    std::vector<Complex> poles_;
};

// Value of f, f', f'' at one point. When the point is a pole of f the bundle
// holds the derivatives of 1/f instead and at_pole is set.
struct DerivativeBundle {
    SpherePoint f;
    SpherePoint fprime;
    SpherePoint fsecond;
    bool at_pole = false;
};

struct BlaschkeFactor {
    Complex center;      // |center| < 1
    Complex rotation;    // |rotation| = 1
};

// Meromorphic function on (a neighborhood of) the closed unit disk. Three
// construction shapes share one rational evaluation core:
//   - arbitrary rational p/q,
//   - T(eta z) for a rigid sphere motion T (the extremal shape),
//   - finite Blaschke products.
class MeroFunction {
public:
    struct RigidScaled {
        RigidMotion motion;
        Complex eta;
    };

    static MeroFunction rational(Poly numerator, Poly denominator);
    static MeroFunction rigid_scaled(const RigidMotion& motion, Complex eta);
    static MeroFunction blaschke(std::vector<BlaschkeFactor> factors);

    const RationalFunction& as_rational() const { return rat_; }
    const std::optional<RigidScaled>& rigid_form() const { return rigid_; }
    const std::optional<std::vector<BlaschkeFactor>>& blaschke_form() const { return factors_; }

    SpherePoint eval(Complex z) const;
    DerivativeBundle eval_bundle(Complex z) const;

    // |f'|/(1+|f|^2), continued across poles by the reciprocal chart.
    // Computed as |p'q - pq'|/(|p|^2 + |q|^2), which equals the defining
    // quotient away from poles and the reciprocal one near them.
    double spherical_derivative(Complex z) const;

    // (f''/f')' - (f''/f')^2 / 2. Throws DomainError at a critical point.
    Complex schwarzian(Complex z) const;

    MeroFunction postcompose(const RigidMotion& T) const;   // T after f
    MeroFunction reciprocal() const;

    double distance_to_nearest_pole(Complex z) const;

private:
    explicit MeroFunction(RationalFunction rat) : rat_(std::move(rat)) {}

    RationalFunction rat_;
    std::optional<RigidScaled> rigid_;
    std::optional<std::vector<BlaschkeFactor>> factors_;
};

// Sampled local-univalence probe: exact critical points and pole
// multiplicities from the rational form, grid scan as a sanity floor.
struct UnivalenceReport {
    bool is_locally_univalent = false;
    std::vector<Complex> critical_points;   // zeros of f' in the open disk
    std::vector<Complex> multiple_poles;    // repeated denominator roots in the disk
    double grid_min_spherical = 0.0;        // min of f# over the probe grid
};

UnivalenceReport probe_local_univalence(const MeroFunction& f, const GridSpec& grid);

} // namespace schwarz
