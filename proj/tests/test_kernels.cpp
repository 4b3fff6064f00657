#include "extremal/kernels.hpp"

#include "extremal/grid.hpp"

#include <doctest.h>

#include <cmath>

using namespace extremal;

TEST_CASE("ball kernel values") {
    const std::vector<double> origin{0.0, 0.0, 0.0};
    const std::vector<double> north{0.0, 0.0, 1.0};
    CHECK(poisson_kernel_ball(3, origin, north) == doctest::Approx(1.0 / (4.0 * M_PI)).epsilon(1e-14));
    const std::vector<double> x{0.0, 0.0, 0.5};
    CHECK(poisson_kernel_ball(3, x, north) == doctest::Approx(3.0 / (2.0 * M_PI)).epsilon(1e-14));
    const std::vector<double> outside{0.0, 0.0, 1.0};
    CHECK_THROWS_AS(poisson_kernel_ball(3, outside, north), std::domain_error);
}

TEST_CASE("ball kernel mean value at the center") {
    for (int n : {3, 4}) {
        auto grid = SphereGrid::build(n, 8);
        const std::vector<double> origin(n, 0.0);
        double s = 0.0;
        for (std::size_t j = 0; j < grid->node_count(); ++j)
            s += grid->weights()[j] * poisson_kernel_ball(n, origin, grid->node(j));
        CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("half-space kernel") {
    const std::vector<double> x{0.0, 0.0, 1.0};
    const std::vector<double> xi{0.0, 0.0};
    CHECK(poisson_kernel_halfspace(3, x, xi) == doctest::Approx(1.0 / (2.0 * M_PI)).epsilon(1e-14));

    SUBCASE("homogeneity: P(lam x, lam xi) = lam^{1-n} P(x, xi)") {
        const std::vector<double> y{0.3, -0.2, 0.7};
        const std::vector<double> eta{0.5, 0.1};
        const double lam = 2.5;
        const std::vector<double> ys{lam * y[0], lam * y[1], lam * y[2]};
        const std::vector<double> etas{lam * eta[0], lam * eta[1]};
        CHECK(poisson_kernel_halfspace(3, ys, etas) ==
              doctest::Approx(std::pow(lam, -2.0) * poisson_kernel_halfspace(3, y, eta)).epsilon(1e-13));
    }
    SUBCASE("normalization over growing truncated disks") {
        // midpoint rule on [-R, R]^2
        auto mass = [&](double R, int m) {
            const double h = 2.0 * R / m;
            double s = 0.0;
            std::vector<double> pt(2);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) {
                    pt[0] = -R + (i + 0.5) * h;
                    pt[1] = -R + (j + 0.5) * h;
                    s += h * h * poisson_kernel_halfspace(3, x, pt);
                }
            return s;
        };
        const double m8 = mass(8.0, 400);
        const double m32 = mass(32.0, 1600);
        CHECK(m8 < m32);
        CHECK(m32 == doctest::Approx(1.0).epsilon(5e-2));
    }
    SUBCASE("rejects points outside the half space") {
        const std::vector<double> bad{0.0, 0.0, 0.0};
        CHECK_THROWS_AS(poisson_kernel_halfspace(3, bad, xi), std::domain_error);
    }
}
