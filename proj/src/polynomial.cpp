#include "schwarz/polynomial.hpp"

#include <Eigen/Eigenvalues>

#include "schwarz/errors.hpp"

namespace schwarz {

Complex poly_eval(const Poly& p, Complex z) {
    Complex acc(0.0, 0.0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

Poly poly_derivative(const Poly& p) {
    if (p.size() <= 1) return {};
    Poly d(p.size() - 1);
    for (std::size_t k = 1; k < p.size(); ++k) {
        d[k - 1] = static_cast<double>(k) * p[k];
    }
    return d;
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Complex(0.0, 0.0));
    for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k) r[k] += b[k];
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Complex(0.0, 0.0));
    for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k) r[k] -= b[k];
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == Complex(0.0, 0.0)) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

Poly poly_scale(const Poly& p, Complex k) {
    Poly r(p);
    for (auto& c : r) c *= k;
    return r;
}

Poly poly_trim(Poly p) {
    while (!p.empty() && p.back() == Complex(0.0, 0.0)) p.pop_back();
    return p;
}

int poly_degree(const Poly& p) {
    Poly t = poly_trim(p);
    return static_cast<int>(t.size()) - 1;
}

Poly poly_from_roots(const std::vector<Complex>& roots) {
    Poly p{Complex(1.0, 0.0)};
    for (Complex r : roots) {
        p = poly_mul(p, Poly{-r, Complex(1.0, 0.0)});
    }
    return p;
}

std::vector<Complex> poly_roots(const Poly& p) {
    Poly t = poly_trim(p);
    if (t.empty()) {
        throw DomainError("poly_roots: zero polynomial");
    }
    int n = static_cast<int>(t.size()) - 1;
    if (n == 0) return {};
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    Complex lead = t.back();
    for (int i = 0; i < n; ++i) {
        companion(i, n - 1) = -t[i] / lead;
        if (i > 0) companion(i, i - 1) = Complex(1.0, 0.0);
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success) {
        throw DomainError("poly_roots: eigensolver failed");
    }
    std::vector<Complex> roots(n);
    for (int i = 0; i < n; ++i) roots[i] = solver.eigenvalues()[i];
    return roots;
}

} // namespace schwarz
