#include "extremal/solver.hpp"

#include "extremal/random_fields.hpp"

#include <doctest.h>

#include <cmath>

using namespace extremal;

namespace {
constexpr double kSharp3 = 0.674340073412104847;
constexpr double kSuper35 = 0.729630827663022055;
} // namespace

TEST_CASE("constants are exact fixed points for every p") {
    auto grid = SphereGrid::build(3, 12);
    for (double p : {2.0, 3.0, 4.0, 5.0}) {
        SolverConfig cfg(FunctionalConfig(3, p, 8, 16));
        cfg.tolerance = 1e-10;
        const SolverReport rep = solve_el(constant_field(grid, 1.0), cfg);
        CHECK(rep.converged);
        CHECK(rep.iterations <= 2);
        CHECK(rep.el_residual_final < 1e-9);
    }
}

TEST_CASE("normalization and positivity of iterates") {
    auto grid = SphereGrid::build(3, 12);
    SolverConfig cfg(FunctionalConfig(3, 5.0, 8, 16));
    cfg.max_iterations = 40;
    Rng rng(5);
    const BoundaryField init = random_positive_field(grid, 4, 0.3, rng);
    const SolverReport rep = solve_el(init, cfg);
    CHECK(lp_norm_boundary(rep.final_field, 5.0) == doctest::Approx(1.0).epsilon(1e-12));
    for (double v : rep.final_field.values)
        CHECK(v > 0.0);
}

TEST_CASE("supercritical runs converge to the constant") {
    auto grid = SphereGrid::build(3, 16);
    SolverConfig cfg(FunctionalConfig(3, 5.0, 10, 20));
    cfg.tolerance = 1e-9;
    cfg.max_iterations = 400;
    std::vector<double> vals(grid->node_count());
    for (std::size_t j = 0; j < grid->node_count(); ++j)
        vals[j] = 1.0 + 0.3 * grid->node(j)[0];
    const SolverReport rep = solve_el(BoundaryField(grid, std::move(vals)), cfg);
    CHECK(rep.converged);
    CHECK(rep.q_history.back() == doctest::Approx(kSuper35).epsilon(1e-4));
    // uniqueness: distance to the normalized constant in L^p
    const double c = 1.0 / std::pow(4.0 * M_PI, 1.0 / 5.0);
    double dev = 0.0;
    for (double v : rep.final_field.values)
        dev = std::max(dev, std::fabs(v - c));
    CHECK(dev / c < 1e-3);
    CHECK(rep.spectral_tail_fraction < 1e-10); // smoothness diagnostic
}

TEST_CASE("critical run from the extremal family stays on it") {
    auto grid = SphereGrid::build(3, 40);
    SolverConfig cfg(FunctionalConfig(3, 4.0, 40, 40));
    cfg.max_iterations = 50;
    cfg.tolerance = 1e-12; // force the full 50 iterations unless stationary
    const std::vector<double> zeta{0.0, 0.0, 1.0};
    const BoundaryField init = extremal_family(grid, 0.5, zeta, 1.0);
    const SolverReport rep = solve_el(init, cfg);
    for (double q : rep.q_history)
        CHECK(q == doctest::Approx(kSharp3).epsilon(5e-5));
}

TEST_CASE("el_residual") {
    auto grid = SphereGrid::build(3, 40);
    const FunctionalConfig cfg(3, 4.0, 40, 40);
    SUBCASE("constant field") {
        CHECK(el_residual(constant_field(grid, 1.0), cfg) < 1e-9);
    }
    SUBCASE("extremal field at lambda = 0.3") {
        const std::vector<double> zeta{0.0, 0.0, 1.0};
        const BoundaryField f = extremal_family(grid, 0.3, zeta, 1.0);
        CHECK(el_residual(f, cfg) < 1e-6);
    }
    SUBCASE("non-extremal field has residual bounded away from zero") {
        std::vector<double> vals(grid->node_count());
        for (std::size_t j = 0; j < grid->node_count(); ++j)
            vals[j] = 1.0 + 0.5 * grid->node(j)[0];
        CHECK(el_residual(BoundaryField(grid, std::move(vals)), cfg) > 1e-3);
    }
    SUBCASE("rejects nonpositive fields") {
        CHECK_THROWS_AS(el_residual(coordinate_field(grid, 1), cfg), std::domain_error);
    }
}

TEST_CASE("manufactured weights and the Kazdan-Warner defect") {
    auto grid = SphereGrid::build(3, 41);
    const FunctionalConfig cfg(3, 4.0, 40, 44);
    SUBCASE("constant f manufactures K = 1/n") {
        const KWWeight K = manufacture_weight(constant_field(grid, 1.0), cfg);
        for (std::size_t j = 0; j < grid->node_count(); j += 31)
            CHECK(K.field.values[j] == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
        const auto defect = kw_defect(constant_field(grid, 1.0), K);
        for (double d : defect)
            CHECK(std::fabs(d) < 1e-10);
    }
    SUBCASE("extremal f manufactures a nearly constant K") {
        const std::vector<double> zeta{0.0, 0.0, 1.0};
        const BoundaryField f = extremal_family(grid, 0.4, zeta, 1.0);
        const KWWeight K = manufacture_weight(f, cfg);
        double lo = K.field.values[0], hi = K.field.values[0];
        for (double v : K.field.values) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        CHECK(hi - lo < 1e-5 * hi);
    }
    SUBCASE("tilted field: defect vanishes within quadrature tolerance") {
        std::vector<double> vals(grid->node_count());
        for (std::size_t j = 0; j < grid->node_count(); ++j)
            vals[j] = 1.0 + 0.3 * grid->node(j)[0];
        const BoundaryField f(grid, std::move(vals));
        const KWWeight K = manufacture_weight(f, cfg);
        for (double v : K.field.values)
            CHECK(v > 0.0);
        const auto defect = kw_defect(f, K);
        REQUIRE(defect.size() == 3);
        for (double d : defect)
            CHECK(std::fabs(d) < 1e-6);
    }
    SUBCASE("random positive fields: KW vanishing at L = 40") {
        Rng rng(811);
        for (int trial = 0; trial < 20; ++trial) {
            const BoundaryField f = random_positive_field(grid, 6, 0.3, rng);
            const KWWeight K = manufacture_weight(f, cfg);
            const auto defect = kw_defect(f, K);
            for (double d : defect)
                CHECK(std::fabs(d) < 1e-5);
        }
    }
    SUBCASE("requires the critical exponent") {
        const FunctionalConfig bad(3, 5.0, 20, 24);
        CHECK_THROWS_AS(manufacture_weight(constant_field(grid, 1.0), bad), std::domain_error);
    }
}

TEST_CASE("concentration profile") {
    auto grid = SphereGrid::build(3, 24);
    SUBCASE("uniform field: hemisphere carries half the mass") {
        const auto rows =
            concentration_profile(constant_field(grid, 1.0), 4.0, std::vector<double>{M_PI / 2});
        CHECK(rows[0].mass_fraction == doctest::Approx(0.5).epsilon(1e-3));
    }
    SUBCASE("uniform field: cap fraction equals area fraction") {
        const double alpha = M_PI / 5;
        const auto rows =
            concentration_profile(constant_field(grid, 1.0), 4.0, std::vector<double>{alpha});
        const double area_fraction = 0.5 * (1.0 - std::cos(alpha));
        CHECK(rows[0].mass_fraction == doctest::Approx(area_fraction).epsilon(2e-2));
    }
    SUBCASE("monotone concentration along the extremal family") {
        const std::vector<double> zeta{0.0, 0.0, 1.0};
        const double alpha = M_PI / 4;
        double prev = 0.0;
        for (double lam : {0.5, 0.9}) {
            const BoundaryField f = extremal_family(grid, lam, zeta, 1.0);
            const auto rows = concentration_profile(f, 4.0, std::vector<double>{alpha});
            CHECK(rows[0].mass_fraction > prev);
            prev = rows[0].mass_fraction;
        }
    }
}

TEST_CASE("solver rejects invalid input") {
    auto grid = SphereGrid::build(3, 10);
    SolverConfig cfg(FunctionalConfig(3, 4.0, 6, 10));
    CHECK_THROWS_AS(solve_el(coordinate_field(grid, 1), cfg), std::domain_error);
    SolverConfig bad = cfg;
    bad.damping = 1.5;
    CHECK_THROWS_AS(solve_el(constant_field(grid, 1.0), bad), std::domain_error);
}
