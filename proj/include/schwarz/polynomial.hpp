#pragma once

#include <vector>

#include "schwarz/sphere.hpp"

namespace schwarz {

// Polynomials are coefficient vectors in ascending degree: p[k] multiplies z^k.
// The zero polynomial is the empty vector.
using Poly = std::vector<Complex>;

Complex poly_eval(const Poly& p, Complex z);      // Horner
Poly poly_derivative(const Poly& p);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& p, Complex k);

// Drop trailing coefficients that are exactly zero.
Poly poly_trim(Poly p);

// Degree after trimming; -1 for the zero polynomial.
int poly_degree(const Poly& p);

// Monic polynomial with the given roots.
Poly poly_from_roots(const std::vector<Complex>& roots);

// All complex roots, via the eigenvalues of the companion matrix.
// Throws DomainError on the zero polynomial; constants have no roots.
std::vector<Complex> poly_roots(const Poly& p);

} // namespace schwarz
