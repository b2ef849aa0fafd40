#include "schwarz/membership.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "schwarz/bounds.hpp"
#include "schwarz/errors.hpp"
#include "schwarz/parallel.hpp"
#include "schwarz/rng.hpp"

namespace schwarz {

double extremal_eta(double c, Branch branch) {
    return branch == Branch::plus ? origin_upper(c) : origin_lower(c);
}

MeroFunction make_extremal(const ExtremalSpec& spec) {
    double eta = extremal_eta(spec.c, spec.branch);
    return MeroFunction::rigid_scaled(spec.motion, Complex(eta, 0.0));
}

namespace {

double min_on_circle(const MeroFunction& f, double r, const std::vector<double>& angles) {
    return parallel_min(angles.size(), [&](std::size_t j) {
        double t = angles[j];
        return f.spherical_derivative(Complex(r * std::cos(t), r * std::sin(t)));
    });
}

} // namespace

MembershipReport probe_membership(const MeroFunction& f, const GridSpec& grid) {
    grid.validate();
    MembershipReport rep;
    rep.univalence = probe_local_univalence(f, grid);
    rep.locally_univalent = rep.univalence.is_locally_univalent;

    auto angles = grid.angles();
    rep.c_interior_estimate = std::min(rep.univalence.grid_min_spherical,
                                       f.spherical_derivative(Complex(0.0, 0.0)));
    for (double r : grid.refinement_radii) {
        rep.boundary_minima.emplace_back(r, min_on_circle(f, r, angles));
    }
    rep.c_boundary_estimate = rep.boundary_minima.empty()
                                  ? rep.c_interior_estimate
                                  : rep.boundary_minima.back().second;

    if (rep.locally_univalent) {
        rep.in_Fc_at_level = rep.c_interior_estimate;
    }
    rep.in_Gc_at_level = rep.c_boundary_estimate;
    return rep;
}

SharpnessReport verify_sharpness(double c, Branch branch, const GridSpec& grid,
                                 std::uint64_t seed, int witness_count) {
    grid.validate();
    SharpnessReport rep;
    rep.bound = branch == Branch::plus ? origin_upper(c) : origin_lower(c);

    MeroFunction extremal = make_extremal({c, branch, RigidMotion{}});
    rep.attained = extremal.spherical_derivative(Complex(0.0, 0.0));
    rep.equality_gap = std::abs(rep.attained - rep.bound);

    // Strictness witnesses: members of the class at level c that are not
    // extremal for c, namely extremals of levels c' in (c, 1/2]. Their origin
    // derivative is the bound at c', strictly inside the bound at c.
    std::mt19937_64 rng(seed);
    rep.min_strict_margin = std::numeric_limits<double>::infinity();
    for (int k = 0; k < witness_count; ++k) {
        double cp = c + (0.5 - c) * uniform01(rng);
        if (!(cp > c)) continue;   // c = 1/2 has no room for witnesses
        MeroFunction member = make_extremal({cp, branch, RigidMotion{}});
        double at_origin = member.spherical_derivative(Complex(0.0, 0.0));
        double margin = branch == Branch::plus ? rep.bound - at_origin : at_origin - rep.bound;
        rep.witnesses_checked += 1;
        rep.min_strict_margin = std::min(rep.min_strict_margin, margin);
        if (!(margin > 0.0)) rep.all_strict = false;
    }
    if (rep.witnesses_checked == 0) {
        rep.min_strict_margin = 0.0;
    }
    return rep;
}

std::pair<MeroFunction, NonNormalityReport> gn_counterexample(int n, int angular_samples) {
    if (n < 2) {
        throw DomainError("gn_counterexample: n must be at least 2");
    }
    if (angular_samples < 1) {
        throw DomainError("gn_counterexample: need at least one angular sample");
    }
    double inv_n2 = 1.0 / (static_cast<double>(n) * n);
    // g_n(z) = z / (1/n^2 + z^2)
    MeroFunction g = MeroFunction::rational({Complex(0.0, 0.0), Complex(1.0, 0.0)},
                                            {Complex(inv_n2, 0.0), Complex(0.0, 0.0), Complex(1.0, 0.0)});

    NonNormalityReport rep;
    rep.n = n;
    rep.origin_value = g.spherical_derivative(Complex(0.0, 0.0));
    rep.origin_expected = static_cast<double>(n) * n;
    rep.boundary_estimate = (1.0 - inv_n2) / (2.0 + 2.0 * inv_n2 + inv_n2 * inv_n2);

    std::vector<double> angles(angular_samples);
    for (int j = 0; j < angular_samples; ++j) {
        angles[j] = 2.0 * std::numbers::pi * j / angular_samples;
    }
    double r_edge = 1.0 - 1e-6;
    rep.boundary_min_sampled = parallel_min(angles.size(), [&](std::size_t j) {
        double t = angles[j];
        return g.spherical_derivative(Complex(r_edge * std::cos(t), r_edge * std::sin(t)));
    });

    // z g_n(z) = 1/(1 + 1/(n^2 z^2)) creeps toward 1 on the outer annulus.
    for (int k = 0; k <= 8; ++k) {
        double r = 0.5 + 0.05 * k;
        AnnulusSample row;
        row.radius = r;
        row.max_deviation = parallel_max(angles.size(), [&](std::size_t j) {
            double t = angles[j];
            Complex z(r * std::cos(t), r * std::sin(t));
            SpherePoint v = g.eval(z);
            if (v.is_infinite()) return std::numeric_limits<double>::infinity();
            return std::abs(z * v.value() - 1.0);
        });
        for (const Complex& pole : g.as_rational().poles()) {
            double dr = std::abs(std::abs(pole) - r);
            if (dr < 1e-3) row.near_pole = true;
        }
        rep.annulus.push_back(row);
    }
    return {std::move(g), std::move(rep)};
}

} // namespace schwarz
