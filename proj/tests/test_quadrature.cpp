#include "extremal/quadrature.hpp"

#include <doctest.h>

#include <cmath>

using namespace extremal::quadrature;

namespace {

double integrate(const Rule1D& rule, double (*f)(double)) {
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        s += rule.weights[i] * f(rule.nodes[i]);
    return s;
}

} // namespace

TEST_CASE("Gauss-Legendre moments") {
    const Rule1D r = gauss_jacobi(8, 0.0, 0.0);
    CHECK(integrate(r, [](double) { return 1.0; }) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(integrate(r, [](double x) { return x * x; }) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    // degree 15 still exact, odd powers vanish
    CHECK(integrate(r, [](double x) { return std::pow(x, 14); }) == doctest::Approx(2.0 / 15.0).epsilon(1e-13));
    CHECK(integrate(r, [](double x) { return std::pow(x, 13); }) == doctest::Approx(0.0));
}

TEST_CASE("Gauss-Gegenbauer weight sin^1 as Chebyshev-U") {
    // weight (1-x^2)^{1/2}: mass pi/2
    const Rule1D r = gauss_jacobi(6, 0.5, 0.5);
    CHECK(integrate(r, [](double) { return 1.0; }) == doctest::Approx(M_PI / 2).epsilon(1e-14));
    CHECK(integrate(r, [](double x) { return x * x; }) == doctest::Approx(M_PI / 8).epsilon(1e-13));
}

TEST_CASE("radial rule integrates r^{n-1} monomials") {
    SUBCASE("single node, n=3") {
        const Rule1D r = gauss_radial(3, 1);
        double s = 0.0;
        for (std::size_t i = 0; i < r.nodes.size(); ++i)
            s += r.weights[i];
        CHECK(s == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
        CHECK(r.nodes[0] == doctest::Approx(0.75).epsilon(1e-14));
    }
    SUBCASE("n=3, m=10: int_0^1 r^8 r^2 dr = 1/11") {
        const Rule1D r = gauss_radial(3, 10);
        double s = 0.0;
        for (std::size_t i = 0; i < r.nodes.size(); ++i)
            s += r.weights[i] * std::pow(r.nodes[i], 8);
        CHECK(s == doctest::Approx(1.0 / 11.0).epsilon(1e-14));
    }
    SUBCASE("n=2, m=5: int_0^1 r * r dr = 1/3") {
        const Rule1D r = gauss_radial(2, 5);
        double s = 0.0;
        for (std::size_t i = 0; i < r.nodes.size(); ++i)
            s += r.weights[i] * r.nodes[i];
        CHECK(s == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    }
}

TEST_CASE("half-interval Gegenbauer rule") {
    SUBCASE("s=1 reduces to Legendre on (0,1)") {
        const Rule1D r = gauss_gegenbauer_half(6, 1);
        for (int k = 0; k <= 11; ++k) {
            double s = 0.0;
            for (std::size_t i = 0; i < r.nodes.size(); ++i)
                s += r.weights[i] * std::pow(r.nodes[i], k);
            CHECK(s == doctest::Approx(1.0 / (k + 1)).epsilon(1e-12));
        }
    }
    SUBCASE("s=2: odd moment int_0^1 t (1-t^2)^{1/2} dt = 1/3") {
        const Rule1D r = gauss_gegenbauer_half(8, 2);
        double s0 = 0.0, s1 = 0.0;
        for (std::size_t i = 0; i < r.nodes.size(); ++i) {
            s0 += r.weights[i];
            s1 += r.weights[i] * r.nodes[i];
        }
        CHECK(s0 == doctest::Approx(M_PI / 4).epsilon(1e-12)); // half of the full mass pi/2
        CHECK(s1 == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    }
    SUBCASE("nodes stay inside (0,1)") {
        const Rule1D r = gauss_gegenbauer_half(12, 3);
        for (double t : r.nodes) {
            CHECK(t > 0.0);
            CHECK(t < 1.0);
        }
        for (double w : r.weights)
            CHECK(w > 0.0);
    }
}

TEST_CASE("orthonormal Gegenbauer recurrence") {
    // orthonormality checked against a high-order rule with the same weight
    const double lambda = 1.5;
    const Rule1D r = gauss_jacobi(40, lambda - 0.5, lambda - 0.5);
    std::vector<double> p;
    double g00 = 0.0, g55 = 0.0, g35 = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
        gegenbauer_orthonormal(lambda, 6, r.nodes[i], p);
        g00 += r.weights[i] * p[0] * p[0];
        g55 += r.weights[i] * p[5] * p[5];
        g35 += r.weights[i] * p[3] * p[5];
    }
    CHECK(g00 == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(g55 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(g35 == doctest::Approx(0.0));
}
