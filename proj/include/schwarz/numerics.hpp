#pragma once

#include <cmath>
#include <utility>

#include "schwarz/sphere.hpp"

namespace schwarz {

// (u(z+h) + u(z-h) + u(z+ih) + u(z-ih) - 4u(z)) / h^2
template <typename Fn>
double five_point_laplacian(Fn&& u, Complex z, double h) {
    const Complex ih(0.0, h);
    return (u(z + h) + u(z - h) + u(z + ih) + u(z - ih) - 4.0 * u(z)) / (h * h);
}

// Central differences for a holomorphic function sampled along the real
// direction. Second order in h.
template <typename Fn>
Complex fd_first_derivative(Fn&& f, Complex z, double h) {
    return (f(z + h) - f(z - h)) / (2.0 * h);
}

template <typename Fn>
Complex fd_second_derivative(Fn&& f, Complex z, double h) {
    return (f(z + h) - 2.0 * f(z) + f(z - h)) / (h * h);
}

// Maximize a smooth function on [a, b] by golden-section search.
// Returns (argmax, max).
template <typename Fn>
std::pair<double, double> golden_section_max(Fn&& f, double a, double b, double xtol = 1e-12) {
    const double inv_phi = 0.61803398874989484820;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > xtol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

} // namespace schwarz
