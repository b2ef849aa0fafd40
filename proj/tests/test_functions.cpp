#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "schwarz/descriptor.hpp"
#include "schwarz/functions.hpp"
#include "schwarz/numerics.hpp"
#include "schwarz/rng.hpp"

using namespace schwarz;

namespace {

MeroFunction g_n(int n) {
    double inv = 1.0 / (static_cast<double>(n) * n);
    return MeroFunction::rational({Complex(0.0, 0.0), Complex(1.0, 0.0)},
                                  {Complex(inv, 0.0), Complex(0.0, 0.0), Complex(1.0, 0.0)});
}

MeroFunction random_rational(std::mt19937_64& rng) {
    // poles kept outside the closed disk so interior sampling stays generic
    std::vector<Complex> poles;
    int np = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < np; ++i) {
        poles.push_back(uniform_circle(rng) * uniform(rng, 1.3, 3.0));
    }
    Poly num;
    int dn = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i <= dn; ++i) num.push_back(uniform_box(rng, 2.0));
    return MeroFunction::rational(num, poly_from_roots(poles));
}

RigidMotion random_motion(std::mt19937_64& rng) {
    return RigidMotion(uniform_box(rng, 1.0), uniform_box(rng, 1.0));
}

} // namespace

TEST_CASE("evaluation on reference functions") {
    MeroFunction id = MeroFunction::rational({Complex(0.0, 0.0), Complex(1.0, 0.0)},
                                             {Complex(1.0, 0.0)});
    CHECK(id.eval(Complex(0.3, 0.0)).value().real() == doctest::Approx(0.3));

    MeroFunction f = MeroFunction::rational({Complex(1.0, 0.0)},
                                            {Complex(-2.0, 0.0), Complex(1.0, 0.0)});
    CHECK(f.eval(Complex(1.0, 0.0)).value().real() == doctest::Approx(-1.0));

    MeroFunction g = MeroFunction::rigid_scaled(RigidMotion{}, Complex(3.0, 0.0));
    CHECK(g.eval(Complex(0.5, 0.0)).value().real() == doctest::Approx(1.5));

    MeroFunction pole = MeroFunction::rational({Complex(1.0, 0.0)},
                                               {Complex(-0.5, 0.0), Complex(1.0, 0.0)});
    CHECK(pole.eval(Complex(0.5, 0.0)).is_infinite());
    CHECK(pole.distance_to_nearest_pole(Complex(0.0, 0.0)) == doctest::Approx(0.5));
}

TEST_CASE("construction rejects degenerate rationals") {
    CHECK_THROWS_AS(MeroFunction::rational({Complex(1.0, 0.0)}, {}), DomainError);
    CHECK_THROWS_AS(MeroFunction::rational({Complex(1.0, 0.0)}, {Complex(0.0, 0.0)}),
                    DomainError);
    // shared root z = 1: (z-1)/(z-1)
    CHECK_THROWS_AS(MeroFunction::rational({Complex(-1.0, 0.0), Complex(1.0, 0.0)},
                                           {Complex(-1.0, 0.0), Complex(1.0, 0.0)}),
                    DomainError);
}

TEST_CASE("spherical derivative reference values") {
    MeroFunction id = MeroFunction::rational({Complex(0.0, 0.0), Complex(1.0, 0.0)},
                                             {Complex(1.0, 0.0)});
    CHECK(id.spherical_derivative(Complex(0.0, 0.0)) == doctest::Approx(1.0));
    CHECK(id.spherical_derivative(Complex(0.6, 0.8)) == doctest::Approx(0.5));

    CHECK(g_n(2).spherical_derivative(Complex(0.0, 0.0)) == doctest::Approx(4.0));
}

TEST_CASE("exact spherical profile of scaled rigid motions") {
    std::mt19937_64 rng(42);
    for (int k = 0; k < 20; ++k) {
        Complex eta = uniform_circle(rng) * uniform(rng, 0.2, 4.0);
        MeroFunction f = MeroFunction::rigid_scaled(random_motion(rng), eta);
        for (int j = 0; j < 50; ++j) {
            Complex z = uniform_disk(rng, 0.999);
            double expected = std::abs(eta) / (1.0 + std::norm(eta * z));
            CHECK(std::abs(f.spherical_derivative(z) - expected) <= 1e-12 * expected);
        }
    }
}

TEST_CASE("postcomposition with a rigid motion preserves the spherical derivative") {
    std::mt19937_64 rng(1);
    for (int k = 0; k < 10; ++k) {
        MeroFunction f = random_rational(rng);
        RigidMotion T = random_motion(rng);
        MeroFunction tf = f.postcompose(T);
        for (int j = 0; j < 100; ++j) {
            Complex z = uniform_disk(rng, 0.999);
            double a = f.spherical_derivative(z), b = tf.spherical_derivative(z);
            CHECK(std::abs(a - b) <= 1e-10 * std::max(1.0, a));
            // and the values themselves transform
            CHECK(chordal_distance(tf.eval(z), T(f.eval(z))) <= 1e-10);
        }
    }
}

TEST_CASE("reciprocal invariance of the spherical derivative") {
    std::mt19937_64 rng(2);
    for (int k = 0; k < 10; ++k) {
        MeroFunction f = random_rational(rng);
        MeroFunction rf = f.reciprocal();
        for (int j = 0; j < 100; ++j) {
            Complex z = uniform_disk(rng, 0.999);
            double a = f.spherical_derivative(z);
            CHECK(std::abs(a - rf.spherical_derivative(z)) <= 1e-10 * std::max(1.0, a));
        }
    }
}

TEST_CASE("derivative bundle matches finite differences away from poles") {
    MeroFunction f = MeroFunction::rational(
        {Complex(1.0, 0.0), Complex(2.0, 0.0), Complex(0.0, 0.0), Complex(1.0, 0.0)},
        {Complex(3.0, 0.0), Complex(0.0, 0.0), Complex(1.0, 0.0)});   // (1+2z+z^3)/(3+z^2)
    std::mt19937_64 rng(3);
    for (int k = 0; k < 50; ++k) {
        Complex z = uniform_disk(rng, 0.9);
        DerivativeBundle b = f.eval_bundle(z);
        REQUIRE_FALSE(b.at_pole);
        auto value = [&](Complex w) { return f.eval(w).value(); };
        Complex fp = fd_first_derivative(value, z, 1e-6);
        Complex fs = fd_second_derivative(value, z, 1e-5);
        CHECK(std::abs(fp - b.fprime.value()) <= 1e-6 * std::max(1.0, std::abs(fp)));
        CHECK(std::abs(fs - b.fsecond.value()) <= 1e-4 * std::max(1.0, std::abs(fs)));
    }
}

TEST_CASE("derivative bundle flips to the reciprocal chart at a pole") {
    MeroFunction f = MeroFunction::rational({Complex(1.0, 0.0)},
                                            {Complex(-0.5, 0.0), Complex(1.0, 0.0)});
    DerivativeBundle b = f.eval_bundle(Complex(0.5, 0.0));
    CHECK(b.at_pole);
    CHECK(std::abs(b.f.value()) <= 1e-15);                       // 1/f vanishes at the pole
    CHECK(std::abs(b.fprime.value() - Complex(1.0, 0.0)) <= 1e-12);
    CHECK(std::abs(b.fsecond.value()) <= 1e-12);
}

TEST_CASE("schwarzian vanishes for scaled rigid motions") {
    std::mt19937_64 rng(4);
    for (int k = 0; k < 5; ++k) {
        MeroFunction f = MeroFunction::rigid_scaled(random_motion(rng),
                                                    uniform_circle(rng) * uniform(rng, 0.5, 3.0));
        for (int j = 0; j < 100; ++j) {
            Complex z = uniform_disk(rng, 0.99);
            CHECK(std::abs(f.schwarzian(z)) <= 1e-9);
        }
    }
}

TEST_CASE("schwarzian on an explicit power") {
    // f = z^2: f''/f' = 1/z, S = -1/z^2 - (1/2)(1/z)^2 = -3/(2 z^2)
    MeroFunction f = MeroFunction::rational(
        {Complex(0.0, 0.0), Complex(0.0, 0.0), Complex(1.0, 0.0)}, {Complex(1.0, 0.0)});
    Complex z(0.5, 0.2);
    Complex expected = -1.5 / (z * z);
    CHECK(std::abs(f.schwarzian(z) - expected) <= 1e-10 * std::abs(expected));
    CHECK_THROWS_AS(f.schwarzian(Complex(0.0, 0.0)), DomainError);   // critical point
}

TEST_CASE("schwarzian matches a finite-difference oracle and is Mobius invariant") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 10; ++k) {
        MeroFunction f = random_rational(rng);
        RigidMotion T = random_motion(rng);
        MeroFunction tf = f.postcompose(T);
        for (int j = 0; j < 20; ++j) {
            Complex z = uniform_disk(rng, 0.9);
            DerivativeBundle b = f.eval_bundle(z);
            if (b.at_pole || b.fprime.abs() < 1e-3) continue;

            auto log_deriv = [&](Complex w) {
                DerivativeBundle bw = f.eval_bundle(w);
                return bw.fsecond.value() / bw.fprime.value();
            };
            Complex g = log_deriv(z);
            Complex gp = fd_first_derivative(log_deriv, z, 1e-6);
            Complex oracle = gp - 0.5 * g * g;

            Complex s = f.schwarzian(z);
            CHECK(std::abs(s - oracle) <= 1e-5 * std::max(1.0, std::abs(s)));
            CHECK(std::abs(tf.schwarzian(z) - s) <= 1e-8 * std::max(1.0, std::abs(s)));
        }
    }
}

TEST_CASE("log of the spherical derivative satisfies the curvature equation") {
    // Delta log f# = -4 (f#)^2 for locally univalent f; the five-point residual
    // must shrink at second order between h = 1e-2 and h = 5e-3.
    MeroFunction f = MeroFunction::rational(
        {Complex(0.0, 0.0), Complex(1.0, 0.0), Complex(0.05, 0.0)}, {Complex(1.0, 0.0)});
    auto log_density = [&](Complex w) { return std::log(f.spherical_derivative(w)); };
    for (Complex z : {Complex(0.3, 0.2), Complex(-0.1, 0.4), Complex(0.0, 0.0)}) {
        double fs = f.spherical_derivative(z);
        double r1 = std::abs(five_point_laplacian(log_density, z, 1e-2) + 4.0 * fs * fs);
        double r2 = std::abs(five_point_laplacian(log_density, z, 5e-3) + 4.0 * fs * fs);
        double ratio = r1 / r2;
        CHECK(ratio >= 3.5);
        CHECK(ratio <= 4.5);
    }
}

TEST_CASE("local univalence probe on reference functions") {
    GridSpec grid;
    grid.radial_count = 60;
    grid.angular_count = 128;

    UnivalenceReport id_rep = probe_local_univalence(
        MeroFunction::rational({Complex(0.0, 0.0), Complex(1.0, 0.0)}, {Complex(1.0, 0.0)}),
        grid);
    CHECK(id_rep.is_locally_univalent);
    CHECK(id_rep.critical_points.empty());
    CHECK(id_rep.multiple_poles.empty());
    CHECK(id_rep.grid_min_spherical > 0.4);

    UnivalenceReport g2_rep = probe_local_univalence(g_n(2), grid);
    CHECK_FALSE(g2_rep.is_locally_univalent);
    REQUIRE(g2_rep.critical_points.size() == 2);
    double d0 = std::abs(g2_rep.critical_points[0] - Complex(0.5, 0.0));
    double d1 = std::abs(g2_rep.critical_points[0] - Complex(-0.5, 0.0));
    CHECK(std::min(d0, d1) <= 1e-9);

    // 1/z^2 has a double pole at the origin
    UnivalenceReport dp_rep = probe_local_univalence(
        MeroFunction::rational({Complex(1.0, 0.0)},
                               {Complex(0.0, 0.0), Complex(0.0, 0.0), Complex(1.0, 0.0)}),
        grid);
    CHECK_FALSE(dp_rep.is_locally_univalent);
    REQUIRE(dp_rep.multiple_poles.size() == 1);
    CHECK(std::abs(dp_rep.multiple_poles[0]) <= 1e-8);
}

TEST_CASE("complex literals parse and round-trip") {
    CHECK(parse_complex("1.5") == Complex(1.5, 0.0));
    CHECK(parse_complex("-2i") == Complex(0.0, -2.0));
    CHECK(parse_complex("i") == Complex(0.0, 1.0));
    CHECK(parse_complex("-i") == Complex(0.0, -1.0));
    CHECK(parse_complex("3+4i") == Complex(3.0, 4.0));
    CHECK(parse_complex("3.5e-2-1e+1i") == Complex(0.035, -10.0));

    std::mt19937_64 rng(6);
    for (int k = 0; k < 200; ++k) {
        Complex z = uniform_box(rng, 100.0);
        CHECK(parse_complex(format_complex(z)) == z);
    }
    CHECK_THROWS_AS(parse_complex("abc"), DomainError);
    CHECK_THROWS_AS(parse_complex(""), DomainError);
}

TEST_CASE("function descriptors parse to working functions") {
    MeroFunction g2 = parse_mero_function("rational: [0,1]/[0.25,0,1]");
    CHECK(g2.spherical_derivative(Complex(0.0, 0.0)) == doctest::Approx(4.0));

    MeroFunction rs = parse_mero_function("rigid_scaled: a=0.6+0.8i, b=0, eta=2");
    CHECK(rs.spherical_derivative(Complex(0.0, 0.0)) == doctest::Approx(2.0));
    RigidMotion T(Complex(0.6, 0.8), Complex(0.0, 0.0));
    CHECK(chordal_distance(rs.eval(Complex(0.3, 0.1)),
                           T(SpherePoint(Complex(0.6, 0.2)))) <= 1e-12);

    MeroFunction bp = parse_mero_function("blaschke: [(0.3,0),(0.1+0.2i,1.5707963267948966)]");
    CHECK(bp.eval(Complex(0.3, 0.0)).abs() <= 1e-12);
    CHECK(bp.eval(Complex(0.1, 0.2)).abs() <= 1e-12);
    for (int j = 0; j < 32; ++j) {
        Complex z = std::polar(1.0, 0.196349540849362 * j);
        CHECK(std::abs(bp.eval(z).abs() - 1.0) <= 1e-12);   // inner function on the circle
    }

    CHECK_THROWS_AS(parse_mero_function("rational: [0,1"), DomainError);
    CHECK_THROWS_AS(parse_mero_function("unknown: [1]"), DomainError);
    CHECK_THROWS_AS(parse_mero_function("blaschke: [(1.5,0)]"), DomainError);
}
