#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "schwarz/bounds.hpp"

using namespace schwarz;

namespace {

// Independent quadratic-root oracle for c(1-s^2)^2 x^2 - x + c = 0, written
// without the rationalized forms used by the implementation.
struct QuadRoots {
    double small = 0.0, large = 0.0;
};

QuadRoots naive_roots(double c, double s) {
    double a = c * (1.0 - s * s) * (1.0 - s * s);
    double disc = std::sqrt(1.0 - 4.0 * a * c);
    return {(1.0 - disc) / (2.0 * a), (1.0 + disc) / (2.0 * a)};
}

} // namespace

TEST_CASE("origin bounds on reference levels") {
    CHECK(origin_upper(0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(origin_lower(0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(origin_upper(0.3) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(origin_lower(0.3) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(origin_upper(0.25) == doctest::Approx(2.0 + std::sqrt(3.0)).epsilon(1e-15));
    CHECK(origin_lower(0.25) == doctest::Approx(2.0 - std::sqrt(3.0)).epsilon(1e-15));
}

TEST_CASE("levels outside the admissible range are rejected") {
    CHECK_THROWS_AS(origin_upper(0.6), InfeasibleError);
    CHECK_THROWS_AS(origin_lower(0.51), InfeasibleError);
    CHECK_THROWS_AS(origin_upper(0.0), DomainError);
    CHECK_THROWS_AS(origin_upper(-0.1), DomainError);
    CHECK_THROWS_AS(pointwise_bounds({0.6, 0.0}), InfeasibleError);
    CHECK_THROWS_AS(pointwise_bounds({0.3, 1.0}), DomainError);
    CHECK_THROWS_AS(pointwise_bounds({0.3, -0.1}), DomainError);
    CHECK(level_is_feasible(0.5));
    CHECK_FALSE(level_is_feasible(0.500000001));
    CHECK_FALSE(level_is_feasible(0.0));
}

TEST_CASE("pointwise bounds at the frozen reference point") {
    BoundReport rep = pointwise_bounds({0.3, 0.5});
    CHECK(rep.lower == doctest::Approx(0.31695242970492567).epsilon(1e-14));
    CHECK(rep.upper_quadratic == doctest::Approx(5.6089734962210003).epsilon(1e-14));
    CHECK(rep.upper_refined == doctest::Approx(3.6125143513943255).epsilon(1e-14));
    CHECK(rep.upper_classical == doctest::Approx(16.0 / 2.7).epsilon(1e-15));
    CHECK(rep.envelope == rep.upper_refined);
    CHECK(rep.active_upper == ActiveUpper::refined);
    // root product of the quadratic: 1/(1-s^2)^2 = 16/9
    CHECK(rep.lower * rep.upper_quadratic == doctest::Approx(16.0 / 9.0).epsilon(1e-13));
}

TEST_CASE("origin specialization (s = 0)") {
    BoundReport rep = pointwise_bounds({0.3, 0.0});
    CHECK(rep.lower == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(rep.upper_quadratic == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(rep.upper_refined == doctest::Approx(10.0 / 3.0).epsilon(1e-15));
    CHECK(rep.upper_classical == doctest::Approx(10.0 / 3.0).epsilon(1e-15));
    CHECK(rep.envelope == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(rep.active_upper == ActiveUpper::quadratic);
}

TEST_CASE("envelope ordering and root product on a 100x100 grid") {
    for (int i = 1; i <= 100; ++i) {
        double c = 0.5 * i / 100.0;
        for (int j = 0; j < 100; ++j) {
            double s = 0.99 * j / 99.0;
            BoundReport rep = pointwise_bounds({c, s});
            double m2 = (1.0 - s * s) * (1.0 - s * s);

            CHECK(rep.lower <= rep.envelope * (1.0 + 1e-14));
            CHECK(rep.envelope <= rep.upper_classical * (1.0 + 1e-14));
            CHECK(rep.upper_refined <= rep.upper_classical * (1.0 + 1e-14));
            if (s > 1e-9) {
                CHECK(rep.upper_refined < rep.upper_classical);   // equality only at s = 0
            }
            CHECK(std::abs(rep.lower * rep.upper_quadratic - 1.0 / m2) <= 1e-10 / m2);
            CHECK(rep.envelope ==
                  (rep.active_upper == ActiveUpper::quadratic ? rep.upper_quadratic
                                                              : rep.upper_refined));
        }
    }
}

TEST_CASE("agreement with an independent quadratic-root oracle") {
    for (int i = 1; i <= 30; ++i) {
        double c = 0.49 * i / 30.0;
        for (int j = 0; j < 30; ++j) {
            double s = 0.95 * j / 29.0;
            BoundReport rep = pointwise_bounds({c, s});
            QuadRoots roots = naive_roots(c, s);
            CHECK(std::abs(rep.lower - roots.small) <= 1e-12 * std::max(1.0, roots.small));
            CHECK(std::abs(rep.upper_quadratic - roots.large) <= 1e-12 * roots.large);
        }
    }
}

TEST_CASE("active upper bound switches once for c = 0.3") {
    auto diff = [](double s) {
        BoundReport rep = pointwise_bounds({0.3, s});
        return rep.upper_quadratic - rep.upper_refined;
    };
    // quadratic wins at s = 0, refined by s = 0.5
    REQUIRE(diff(0.0) < 0.0);
    REQUIRE(diff(0.5) > 0.0);
    double lo = 0.0, hi = 0.5;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        (diff(mid) < 0.0 ? lo : hi) = mid;
    }
    double s_star = 0.5 * (lo + hi);
    CHECK(s_star > 0.0);
    CHECK(s_star < 0.5);
    CHECK(pointwise_bounds({0.3, s_star - 1e-6}).active_upper == ActiveUpper::quadratic);
    CHECK(pointwise_bounds({0.3, s_star + 1e-6}).active_upper == ActiveUpper::refined);
    // the envelope is continuous across the switch
    CHECK(std::abs(pointwise_bounds({0.3, s_star - 1e-9}).envelope -
                   pointwise_bounds({0.3, s_star + 1e-9}).envelope) <= 1e-6);
}

TEST_CASE("origin bounds are strictly monotone in the level and meet at 1") {
    double prev_upper = origin_upper(0.01);
    double prev_lower = origin_lower(0.01);
    for (int i = 2; i <= 50; ++i) {
        double c = 0.5 * i / 50.0;
        double u = origin_upper(c), l = origin_lower(c);
        CHECK(u < prev_upper);
        CHECK(l > prev_lower);
        CHECK(l <= u);
        prev_upper = u;
        prev_lower = l;
    }
    CHECK(origin_upper(0.5) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(origin_lower(0.5) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("asymptotic factor reference values and monotonicity") {
    CHECK(asymptotic_factor(0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(asymptotic_factor(1.0) ==
          doctest::Approx((3.0 - std::sqrt(5.0)) / 2.0).epsilon(1e-13));
    CHECK(asymptotic_factor(0.5) == doctest::Approx(0.60961179679779243).epsilon(1e-14));
    CHECK_THROWS_AS(asymptotic_factor(-0.1), DomainError);
    CHECK_THROWS_AS(asymptotic_factor(1.1), DomainError);
    double prev = asymptotic_factor(0.0);
    for (int i = 1; i <= 40; ++i) {
        double v = asymptotic_factor(i / 40.0);
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("length-preserving level and the feasible radius") {
    LengthPreservingLevel boundary = length_preserving_level(std::sqrt(2.0) - 1.0);
    CHECK(boundary.c == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(boundary.feasible);

    LengthPreservingLevel mid = length_preserving_level(0.3);
    CHECK(mid.c == doctest::Approx(0.32967032967032967).epsilon(1e-14));
    CHECK(mid.feasible);

    LengthPreservingLevel out = length_preserving_level(0.5);
    CHECK(out.c == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK_FALSE(out.feasible);

    CHECK(feasible_radius_bound() == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-15));
    CHECK_THROWS_AS(length_preserving_level(0.0), DomainError);
    CHECK_THROWS_AS(length_preserving_level(1.0), DomainError);
}
