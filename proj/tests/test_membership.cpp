#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "schwarz/bounds.hpp"
#include "schwarz/membership.hpp"
#include "schwarz/rng.hpp"

using namespace schwarz;

namespace {

GridSpec coarse_grid() {
    GridSpec g;
    g.radial_count = 80;
    g.angular_count = 128;
    return g;
}

} // namespace

TEST_CASE("extremal eta per branch") {
    CHECK(extremal_eta(0.5, Branch::plus) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(extremal_eta(0.5, Branch::minus) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(extremal_eta(0.3, Branch::plus) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(extremal_eta(0.3, Branch::minus) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(extremal_eta(0.25, Branch::plus) == doctest::Approx(2.0 + std::sqrt(3.0)));
    CHECK(extremal_eta(0.25, Branch::minus) == doctest::Approx(2.0 - std::sqrt(3.0)));
    CHECK_THROWS_AS(extremal_eta(0.6, Branch::plus), InfeasibleError);
    CHECK_THROWS_AS(extremal_eta(0.0, Branch::plus), DomainError);
}

TEST_CASE("extremal origin values equal the bounds") {
    MeroFunction half = make_extremal({0.5, Branch::plus, RigidMotion{}});
    CHECK(half.spherical_derivative(Complex(0.0, 0.0)) == doctest::Approx(1.0).epsilon(1e-12));

    MeroFunction plus = make_extremal({0.3, Branch::plus, RigidMotion{}});
    CHECK(plus.spherical_derivative(Complex(0.0, 0.0)) ==
          doctest::Approx(origin_upper(0.3)).epsilon(1e-15));
    CHECK(plus.eval(Complex(0.5, 0.0)).value().real() == doctest::Approx(1.5));   // f = 3z

    MeroFunction minus = make_extremal({0.3, Branch::minus, RigidMotion{}});
    CHECK(minus.spherical_derivative(Complex(0.0, 0.0)) ==
          doctest::Approx(origin_lower(0.3)).epsilon(1e-15));
}

TEST_CASE("extremal spherical profile decreases radially to the level") {
    // f# of T(eta z) is |eta|/(1+|eta|^2 r^2), radially decreasing, with
    // boundary value |eta|/(1+|eta|^2) = c for either branch.
    for (Branch branch : {Branch::plus, Branch::minus}) {
        MeroFunction f = make_extremal({0.25, branch, RigidMotion{}});
        double eta = extremal_eta(0.25, branch);
        double prev = f.spherical_derivative(Complex(0.0, 0.0));
        for (int k = 1; k <= 50; ++k) {
            double r = k / 50.0;
            double v = f.spherical_derivative(Complex(r * 0.99999, 0.0));
            CHECK(v < prev);
            prev = v;
        }
        double boundary = eta / (1.0 + eta * eta);
        CHECK(boundary == doctest::Approx(0.25).epsilon(1e-13));
        CHECK(prev == doctest::Approx(0.25).epsilon(1e-4));
    }
}

TEST_CASE("branch origin values multiply to one") {
    for (int i = 1; i < 25; ++i) {
        double c = 0.5 * i / 25.0;
        double plus = extremal_eta(c, Branch::plus);
        double minus = extremal_eta(c, Branch::minus);
        CHECK(plus * minus == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("membership probe classifies the identity") {
    MembershipReport rep = probe_membership(
        MeroFunction::rational({Complex(0.0, 0.0), Complex(1.0, 0.0)}, {Complex(1.0, 0.0)}),
        coarse_grid());
    CHECK(rep.locally_univalent);
    CHECK(rep.c_interior_estimate == doctest::Approx(0.5).epsilon(2e-2));
    CHECK(rep.c_boundary_estimate == doctest::Approx(0.5).epsilon(1e-3));
    REQUIRE(rep.in_Fc_at_level.has_value());
    CHECK(*rep.in_Fc_at_level >= 0.5);
    REQUIRE(rep.in_Gc_at_level.has_value());
    CHECK(*rep.in_Gc_at_level >= 0.5);
    REQUIRE(rep.boundary_minima.size() == coarse_grid().refinement_radii.size());
    // minima over circles decrease toward the boundary liminf 1/2
    for (std::size_t k = 1; k < rep.boundary_minima.size(); ++k) {
        CHECK(rep.boundary_minima[k].second <= rep.boundary_minima[k - 1].second);
    }
}

TEST_CASE("membership probe flags the counterexample family") {
    auto [g2, nn] = gn_counterexample(2);
    MembershipReport rep = probe_membership(g2, coarse_grid());
    CHECK_FALSE(rep.locally_univalent);
    CHECK_FALSE(rep.in_Fc_at_level.has_value());
    REQUIRE(rep.in_Gc_at_level.has_value());
    CHECK(*rep.in_Gc_at_level >= 0.29);
    CHECK(rep.c_boundary_estimate >= nn.boundary_estimate - 1e-3);
}

TEST_CASE("interior estimate is non-increasing under grid refinement") {
    MeroFunction f = make_extremal({0.3, Branch::plus, RigidMotion{}});
    GridSpec g1 = coarse_grid();
    GridSpec g2;
    g2.radial_count = 160;   // doubles the radii of g1, so samples a superset
    g2.angular_count = 256;
    GridSpec g3;
    g3.radial_count = 320;
    g3.angular_count = 512;
    double e1 = probe_membership(f, g1).c_interior_estimate;
    double e2 = probe_membership(f, g2).c_interior_estimate;
    double e3 = probe_membership(f, g3).c_interior_estimate;
    CHECK(e2 <= e1 + 1e-15);
    CHECK(e3 <= e2 + 1e-15);
    // and converges down toward the true infimum c = 0.3
    CHECK(e3 >= 0.3);
    CHECK(e3 <= 0.302);
}

TEST_CASE("sharpness: equality at the bound, strictness for inner members") {
    SharpnessReport plus = verify_sharpness(0.3, Branch::plus, coarse_grid());
    CHECK(plus.bound == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(plus.equality_gap <= 1e-10);
    CHECK(plus.witnesses_checked == 200);
    CHECK(plus.all_strict);
    CHECK(plus.min_strict_margin > 0.0);

    SharpnessReport minus = verify_sharpness(0.3, Branch::minus, coarse_grid());
    CHECK(minus.bound == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(minus.equality_gap <= 1e-10);
    CHECK(minus.all_strict);

    // the double root has no interior witnesses
    SharpnessReport half = verify_sharpness(0.5, Branch::plus, coarse_grid());
    CHECK(half.equality_gap <= 1e-10);
    CHECK(half.witnesses_checked == 0);
}

TEST_CASE("a non-extremal member stays strictly inside the bound") {
    // f = 2.5 z has inf f# = 2.5/7.25 ~ 0.3448 > 0.3, so it lies in the class
    // at level 0.3, while f#(0) = 2.5 < 3 strictly.
    MeroFunction f = MeroFunction::rigid_scaled(RigidMotion{}, Complex(2.5, 0.0));
    double inf_fs = 2.5 / (1.0 + 6.25);
    CHECK(inf_fs == doctest::Approx(0.34482758620689655).epsilon(1e-15));
    CHECK(inf_fs > 0.3);
    MembershipReport rep = probe_membership(f, coarse_grid());
    CHECK(rep.locally_univalent);
    CHECK(rep.c_interior_estimate >= inf_fs - 1e-12);
    CHECK(f.spherical_derivative(Complex(0.0, 0.0)) == doctest::Approx(2.5));
    CHECK(2.5 < origin_upper(0.3));
}

TEST_CASE("counterexample family values") {
    auto [g2, n2] = gn_counterexample(2);
    CHECK(n2.origin_value == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(n2.boundary_estimate == doctest::Approx(0.29268292682926829).epsilon(1e-14));
    CHECK(g2.spherical_derivative(Complex(0.0, 0.0)) == doctest::Approx(4.0));

    auto [g3, n3] = gn_counterexample(3);
    CHECK(n3.origin_value == doctest::Approx(9.0).epsilon(1e-13));
    CHECK(n3.boundary_estimate == doctest::Approx(0.39779005524861878).epsilon(1e-14));

    auto [g10, n10] = gn_counterexample(10);
    CHECK(n10.origin_value == doctest::Approx(100.0).epsilon(1e-12));
    CHECK(n10.boundary_estimate == doctest::Approx(0.49007474877481313).epsilon(1e-14));
    (void)g3;
    (void)g10;
}

TEST_CASE("counterexample boundary minima clear the estimate for n = 2..10") {
    for (int n = 2; n <= 10; ++n) {
        auto [gn, rep] = gn_counterexample(n);
        (void)gn;
        CHECK(rep.boundary_min_sampled >= rep.boundary_estimate - 1e-3);
        CHECK(rep.origin_value ==
              doctest::Approx(static_cast<double>(n) * n).epsilon(1e-10));
    }
}

TEST_CASE("annulus concentration of z g_n(z) for n >= 3") {
    // z g_n(z) = 1/(1 + 1/(n^2 z^2)); on |z| = r the deviation from 1 is at
    // most 1/(n^2 r^2 - 1), which crosses below 8/n^2 for all r in [0.5, 0.9]
    // exactly when n >= 3. For n = 2 the poles +-i/2 sit on the inner circle.
    for (int n = 3; n <= 10; ++n) {
        auto [gn, rep] = gn_counterexample(n);
        (void)gn;
        double threshold = 8.0 / (static_cast<double>(n) * n);
        for (const AnnulusSample& a : rep.annulus) {
            CHECK_FALSE(a.near_pole);
            CHECK(a.max_deviation <= threshold);
            double exact = 1.0 / (n * n * a.radius * a.radius - 1.0);
            CHECK(a.max_deviation == doctest::Approx(exact).epsilon(1e-9));
        }
    }
    auto [g2, rep2] = gn_counterexample(2);
    (void)g2;
    bool pole_hit = false;
    for (const AnnulusSample& a : rep2.annulus) pole_hit = pole_hit || a.near_pole;
    CHECK(pole_hit);   // the n = 2 annulus clause is vacuous: poles on |z| = 0.5
}

TEST_CASE("n = 10 deviation at the reference radius") {
    auto [g10, rep] = gn_counterexample(10);
    Complex z(0.7, 0.0);
    Complex v = z * g10.eval(z).value();
    CHECK(std::abs(v - Complex(1.0, 0.0)) <= 1.0 / (100.0 * 0.49 - 1.0) + 1e-12);
    CHECK(std::abs(v - Complex(1.0, 0.0)) == doctest::Approx(0.02).epsilon(1e-2));
    (void)rep;
}

TEST_CASE("extremal construction respects the rigid motion argument") {
    std::mt19937_64 rng(42);
    RigidMotion T(uniform_box(rng, 1.0), uniform_box(rng, 1.0));
    MeroFunction f = make_extremal({0.3, Branch::plus, T});
    // postcomposition does not change the profile
    for (int k = 0; k < 100; ++k) {
        Complex z = uniform_disk(rng, 0.999);
        double expected = 3.0 / (1.0 + 9.0 * std::norm(z));
        CHECK(std::abs(f.spherical_derivative(z) - expected) <= 1e-12 * expected);
    }
    // and the value at 0 is T(0)
    CHECK(chordal_distance(f.eval(Complex(0.0, 0.0)), T(SpherePoint(Complex(0.0, 0.0)))) <=
          1e-12);
    CHECK_THROWS_AS(make_extremal({0.7, Branch::plus, RigidMotion{}}), InfeasibleError);
}
