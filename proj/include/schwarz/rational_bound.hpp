#pragma once

#include <vector>

#include "schwarz/functions.hpp"
#include "schwarz/grid.hpp"
#include "schwarz/polynomial.hpp"

namespace schwarz {

// Pole set outside the closed disk; the data of the Bernstein-type estimate.
class PolePrescription {
public:
    explicit PolePrescription(std::vector<Complex> poles);  // each |z_j| > 1 strictly
    const std::vector<Complex>& poles() const { return poles_; }

private:
    std::vector<Complex> poles_;
};

// K(z) = sum (|z_j|^2 - 1)/|z_j - z|^2 on the unit circle (|z| = 1 within
// 1e-12 required).
double bernstein_factor(const PolePrescription& p, Complex z);

// k_n = sum (|z_j|+1)/(|z_j|-1), the circle-uniform majorant of K.
double kn(const PolePrescription& p);

// Sup-norm bound (k_n/(2c))(1 + sqrt(1 - 4c^2/k_n^2)) for members at level c.
// Requires 0 < c <= k_n/2; infeasible above (no such function exists).
double norm_bound(const PolePrescription& p, double c);

// numerator / prod (z - z_j).
MeroFunction prescribed_rational(const PolePrescription& p, const Poly& numerator);

struct SupNormEstimate {
    double value = 0.0;
    double theta = 0.0;   // angle of the maximizer on the circle
};

// max |f| on |z| = 1: dense samples plus golden-section refinement around
// the best one.
SupNormEstimate boundary_sup_norm(const MeroFunction& f, int samples = 4096);

struct RationalBoundReport {
    std::vector<Complex> poles;
    double k_n = 0.0;
    double c_f = 0.0;        // grid-estimated interior min of f#
    double sup_norm = 0.0;
    double bound = 0.0;      // norm_bound at c_f, 0 if c_f is not positive
    double margin = 0.0;     // bound - sup_norm
    bool applicable = false; // c_f > 0 and c_f <= k_n/2
};

RationalBoundReport check_rational_bound(const MeroFunction& f, const PolePrescription& p,
                                         const GridSpec& grid);

} // namespace schwarz
