#include "extremal/grid.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace extremal;

TEST_CASE("sphere grid: S^2 second moment") {
    auto grid = SphereGrid::build(3, 8);
    std::vector<double> v(grid->node_count());
    for (std::size_t j = 0; j < v.size(); ++j) {
        const auto x = grid->node(j);
        v[j] = x[0] * x[0];
    }
    CHECK(grid->integrate(v) == doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-10));
}

TEST_CASE("sphere grid: circle rule is uniform") {
    auto grid = SphereGrid::build(2, 4);
    REQUIRE(grid->node_count() == 8);
    for (std::size_t j = 0; j < 8; ++j) {
        CHECK(grid->weights()[j] == doctest::Approx(2.0 * M_PI / 8.0).epsilon(1e-15));
        const auto x = grid->node(j);
        CHECK(std::hypot(x[0], x[1]) == doctest::Approx(1.0).epsilon(1e-15));
    }
}

TEST_CASE("sphere grid: S^3 total weight") {
    auto grid = SphereGrid::build(4, 6);
    std::vector<double> one(grid->node_count(), 1.0);
    CHECK(grid->integrate(one) == doctest::Approx(2.0 * M_PI * M_PI).epsilon(1e-10));
}

TEST_CASE("sphere grid: node norms and rejection") {
    auto grid = SphereGrid::build(3, 5);
    for (std::size_t j = 0; j < grid->node_count(); ++j) {
        const auto x = grid->node(j);
        CHECK(std::fabs(std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]) - 1.0) < 1e-12);
    }
    CHECK_THROWS_AS(SphereGrid::build(1, 4), std::domain_error);
    CHECK_THROWS_AS(SphereGrid::build(3, 0), std::domain_error);
}

TEST_CASE("quadrature exactness on random monomials") {
    // closed-form moments: int x1^a x2^b x3^c dS vanishes for odd powers,
    // otherwise 4pi (a-1)!!(b-1)!!(c-1)!! / (3*5*...*(s+1)), s = a+b+c
    auto grid = SphereGrid::build(3, 6);
    const int D = grid->exactness_degree();
    REQUIRE(D >= 13);
    auto moment = [&](int a, int b, int c) {
        if (a % 2 || b % 2 || c % 2)
            return 0.0;
        auto dfac = [](int k) {
            double r = 1.0;
            for (int i = k - 1; i > 1; i -= 2)
                r *= i;
            return r;
        };
        const int s = a + b + c;
        double denom = 1.0;
        for (int i = 1; i <= s / 2; ++i)
            denom *= (1 + 2 * i);
        return 4.0 * M_PI * dfac(a) * dfac(b) * dfac(c) / denom;
    };
    std::mt19937 gen(42);
    std::uniform_int_distribution<int> pick(0, D);
    for (int trial = 0; trial < 40; ++trial) {
        int a = pick(gen), b = pick(gen), c = pick(gen);
        while (a + b + c > D) {
            if (a > 0) --a;
            if (a + b + c > D && b > 0) --b;
            if (a + b + c > D && c > 0) --c;
        }
        std::vector<double> v(grid->node_count());
        for (std::size_t j = 0; j < v.size(); ++j) {
            const auto x = grid->node(j);
            v[j] = std::pow(x[0], a) * std::pow(x[1], b) * std::pow(x[2], c);
        }
        const double got = grid->integrate(v);
        const double expect = moment(a, b, c);
        if (expect == 0.0)
            CHECK(std::fabs(got) < 1e-9);
        else
            CHECK(got == doctest::Approx(expect).epsilon(1e-9));
    }
}

TEST_CASE("boundary lp norms") {
    auto grid = SphereGrid::build(3, 8);
    SUBCASE("constant field") {
        const BoundaryField f = constant_field(grid, 1.0);
        CHECK(lp_norm_boundary(f, 4.0) == doctest::Approx(std::pow(4.0 * M_PI, 0.25)).epsilon(1e-12));
    }
    SUBCASE("coordinate field, p=4") {
        const BoundaryField f = coordinate_field(grid, 1);
        CHECK(lp_norm_boundary(f, 4.0) ==
              doctest::Approx(std::pow(4.0 * M_PI / 5.0, 0.25)).epsilon(1e-12));
    }
    SUBCASE("zero field") {
        const BoundaryField f = constant_field(grid, 0.0);
        CHECK(lp_norm_boundary(f, 2.0) == 0.0);
    }
    SUBCASE("rejections") {
        BoundaryField f = constant_field(grid, 1.0);
        CHECK_THROWS_AS(lp_norm_boundary(f, 0.5), std::domain_error);
        f.values[3] = std::nan("");
        CHECK_THROWS_AS(lp_norm_boundary(f, 2.0), std::domain_error);
    }
}

TEST_CASE("norm monotonicity (Jensen on the probability measure)") {
    auto grid = SphereGrid::build(3, 6);
    const double area = 4.0 * M_PI;
    std::mt19937 gen(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> v(grid->node_count());
        for (double& x : v)
            x = u(gen);
        const BoundaryField f(grid, std::move(v));
        const double n1 = lp_norm_boundary(f, 2.0) * std::pow(area, -0.5);
        const double n2 = lp_norm_boundary(f, 4.0) * std::pow(area, -0.25);
        CHECK(n1 <= n2 * (1.0 + 1e-13));
    }
}

TEST_CASE("distribution function") {
    auto grid = SphereGrid::build(3, 8);
    const BoundaryField one = constant_field(grid, 1.0);
    CHECK(distribution_function(one, 0.5) == doctest::Approx(4.0 * M_PI).epsilon(1e-12));
    CHECK(distribution_function(one, 2.0) == 0.0);
    const BoundaryField z = coordinate_field(grid, 3);
    CHECK(distribution_function(z, 0.0) == doctest::Approx(2.0 * M_PI).epsilon(1e-2));
}

TEST_CASE("radial rule largest node reported") {
    auto rule = RadialRule::build(3, 10);
    CHECK(rule->largest_node() > 0.9);
    CHECK(rule->largest_node() < 1.0);
    CHECK_THROWS_AS(RadialRule::build(3, 0), std::domain_error);
    CHECK_THROWS_AS(RadialRule::build(1, 4), std::domain_error);
}
