#include "extremal/disk.hpp"

#include "extremal/random_fields.hpp"

#include <doctest.h>

#include <cmath>

using namespace extremal;

TEST_CASE("disk evaluation") {
    SUBCASE("constant series") {
        CarlemanSeries u;
        u.a0 = 2.0;
        CHECK(disk_harmonic_eval(u, {0.3, 1.1}) == doctest::Approx(2.0));
        CHECK(disk_harmonic_eval(u, {0.0, 0.0}) == doctest::Approx(2.0));
    }
    SUBCASE("u = r cos theta") {
        CarlemanSeries u;
        u.cos_coeffs = {1.0};
        CHECK(disk_harmonic_eval(u, {0.5, 0.0}) == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(disk_harmonic_eval(u, {0.5, M_PI / 2}) == doctest::Approx(0.0));
    }
    SUBCASE("rejects r >= 1") {
        CarlemanSeries u;
        CHECK_THROWS_AS(disk_harmonic_eval(u, {1.0, 0.0}), std::domain_error);
    }
}

TEST_CASE("mean value over circles recovers a0") {
    Rng rng(12);
    const CarlemanSeries u = random_carleman_series(6, rng);
    for (double r : {0.2, 0.5, 0.9}) {
        const int N = 64;
        double mean = 0.0;
        for (int i = 0; i < N; ++i)
            mean += disk_harmonic_eval(u, {r, 2.0 * M_PI * i / N});
        mean /= N;
        CHECK(mean == doctest::Approx(u.a0).epsilon(1e-12));
    }
}

TEST_CASE("five-point Laplacian is small for random series") {
    Rng rng(42);
    const CarlemanSeries u = random_carleman_series(6, rng);
    auto cart = [&](double x, double y) {
        const double r = std::hypot(x, y);
        return disk_harmonic_eval(u, {r, std::atan2(y, x)});
    };
    const double h = 1e-3;
    for (double x : {-0.4, 0.1, 0.35}) {
        for (double y : {-0.3, 0.2, 0.45}) {
            const double lap =
                (cart(x + h, y) + cart(x - h, y) + cart(x, y + h) + cart(x, y - h) - 4.0 * cart(x, y)) /
                (h * h);
            CHECK(std::fabs(lap) < 1e-5); // O(h^2) for an exactly harmonic function
        }
    }
}

TEST_CASE("boundary limit matches the boundary series") {
    Rng rng(7);
    const CarlemanSeries u = random_carleman_series(8, rng);
    for (double th : {0.0, 1.0, 2.5, 4.0}) {
        const double inner = disk_harmonic_eval(u, {1.0 - 1e-6, th});
        CHECK(inner == doctest::Approx(disk_boundary_eval(u, th)).epsilon(1e-4));
    }
}
