#include "extremal/expansion.hpp"

#include <doctest.h>

#include <cmath>

using namespace extremal;

namespace {

// closed-form solution of the hemisphere problem for the unit ball:
// a1(theta) = theta_n^2 (n - 1 - n theta_n^2) / 2
double a1_ball_exact(int n, double tn) {
    return 0.5 * tn * tn * (n - 1.0 - n * tn * tn);
}

std::vector<double> direction(double tn, double angle = 0.3) {
    const double s = std::sqrt(1.0 - tn * tn);
    return {s * std::cos(angle), s * std::sin(angle), tn};
}

} // namespace

TEST_CASE("geometry data validation") {
    CHECK_THROWS_AS(GeometryData(3, 1.0, std::vector<double>{1.0, 0.0, 0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(GeometryData(3, 2.0, std::vector<double>{1.0, 0.5, -0.5, 1.0}), std::invalid_argument);
    const GeometryData ball = ball_geometry(3);
    CHECK(ball.H0 == doctest::Approx(2.0));
}

TEST_CASE("rhs values at reference points") {
    const GeometryData ball = ball_geometry(3);
    const std::vector<double> north{0.0, 0.0, 1.0};
    CHECK(rhs_b0_value(ball, north) == doctest::Approx(-8.0).epsilon(1e-14));
    const std::vector<double> equator{1.0, 0.0, 0.0};
    CHECK(rhs_b0_value(ball, equator) == doctest::Approx(-2.0).epsilon(1e-14));
    const GeometryData flat = flat_geometry(3);
    CHECK(rhs_b0_value(flat, north) == 0.0);
}

TEST_CASE("flat geometry solves to zero") {
    const HemisphereField a1 = solve_a1(flat_geometry(3), 12);
    for (double c : a1.spec.coeffs)
        CHECK(c == 0.0);
    CHECK(a1.residual_l2 == 0.0);
}

TEST_CASE("a0 accessor") {
    const auto th = direction(0.7);
    CHECK(a0_value(th) == doctest::Approx(0.7));
}

TEST_CASE("hemisphere solve matches the closed form for the ball") {
    const HemisphereField a1 = solve_a1(ball_geometry(3), 48);
    for (double tn : {0.3, 0.5, 0.8, 0.95}) {
        const auto th = direction(tn);
        CHECK(a1.evaluate(th) == doctest::Approx(a1_ball_exact(3, tn)).epsilon(5e-4));
    }
}

TEST_CASE("boundary trace of the solution vanishes") {
    const HemisphereField a1 = solve_a1(ball_geometry(3), 24);
    for (double ang : {0.0, 0.7, 1.9, 3.0, 5.1}) {
        const std::vector<double> eq{std::cos(ang), std::sin(ang), 0.0};
        CHECK(std::fabs(a1.evaluate(eq)) < 1e-6);
    }
}

TEST_CASE("projection residual decays with the cutoff") {
    const GeometryData geom(3, 1.3, std::vector<double>{1.0, 0.4, 0.4, 0.3});
    const HemisphereField lo = solve_a1(geom, 12);
    const HemisphereField hi = solve_a1(geom, 24);
    CHECK(hi.residual_l2 <= 0.5 * lo.residual_l2);
}

TEST_CASE("solution is linear in the geometry data") {
    const GeometryData g1(3, 0.9, std::vector<double>{0.5, 0.2, 0.2, 0.4});
    const GeometryData g2(3, -0.4, std::vector<double>{0.1, -0.3, -0.3, -0.5});
    const GeometryData sum(3, 0.5, std::vector<double>{0.6, -0.1, -0.1, -0.1});
    const HemisphereField a = solve_a1(g1, 16);
    const HemisphereField b = solve_a1(g2, 16);
    const HemisphereField c = solve_a1(sum, 16);
    for (std::size_t i = 0; i < c.spec.coeffs.size(); ++i)
        CHECK(c.spec.coeffs[i] == doctest::Approx(a.spec.coeffs[i] + b.spec.coeffs[i]).epsilon(1e-10));
}

TEST_CASE("fermi oracle: a0 recovery") {
    SUBCASE("normal direction") {
        const std::vector<double> north{0.0, 0.0, 1.0};
        const FermiFit fit = ball_kernel_fermi_oracle(3, north);
        CHECK(fit.c0 == doctest::Approx(1.0).epsilon(1e-8));
    }
    SUBCASE("near-equator direction") {
        const auto th = direction(0.02);
        const FermiFit fit = ball_kernel_fermi_oracle(3, th);
        CHECK(std::fabs(fit.c0 - 0.02) < 1e-6);
    }
    SUBCASE("full sweep") {
        for (double tn = 0.05; tn < 1.0; tn += 0.12) {
            const FermiFit fit = ball_kernel_fermi_oracle(3, direction(tn));
            CHECK(std::fabs(fit.c0 - tn) < 1e-6);
        }
    }
}

TEST_CASE("fermi oracle: c1 matches the hemisphere solve") {
    const HemisphereField a1 = solve_a1(ball_geometry(3), 48);
    for (double tn : {0.35, 0.6, 0.85}) {
        const auto th = direction(tn);
        const FermiFit fit = ball_kernel_fermi_oracle(3, th);
        CHECK(std::fabs(fit.c1 - a1_ball_exact(3, tn)) < 1e-5); // oracle vs closed form
        CHECK(std::fabs(fit.c1 - a1.evaluate(th)) < 1e-4);      // oracle vs spectral solve
    }
}

TEST_CASE("solve_a1 rejects tiny cutoffs") {
    CHECK_THROWS_AS(solve_a1(ball_geometry(3), 2), std::domain_error);
}
