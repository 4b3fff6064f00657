#include "extremal/harmonics.hpp"

#include "extremal/random_fields.hpp"

#include <doctest.h>

#include <cmath>

using namespace extremal;

TEST_CASE("basis sizes") {
    CHECK(HarmonicBasis::get(3, 4)->size() == 25); // (L+1)^2
    CHECK(HarmonicBasis::get(2, 3)->size() == 7);  // 2L+1
    // n=4: sum over l of (l+1)^2
    CHECK(HarmonicBasis::get(4, 3)->size() == 1 + 4 + 9 + 16);
}

TEST_CASE("discrete orthonormality on the grid") {
    auto grid = SphereGrid::build(3, 10);
    auto basis = HarmonicBasis::get(3, 8);
    std::vector<std::vector<double>> rows(grid->node_count());
    for (std::size_t j = 0; j < grid->node_count(); ++j)
        basis->evaluate_point(grid->node(j), rows[j]);
    const auto w = grid->weights();
    for (std::size_t a = 0; a < basis->size(); a += 7) {
        for (std::size_t b = a; b < basis->size(); b += 11) {
            double g = 0.0;
            for (std::size_t j = 0; j < grid->node_count(); ++j)
                g += w[j] * rows[j][a] * rows[j][b];
            CHECK(std::fabs(g - (a == b ? 1.0 : 0.0)) < 1e-11);
        }
    }
}

TEST_CASE("analyze: constant field hits only the constant mode") {
    auto grid = SphereGrid::build(3, 8);
    const SpectralField s = analyze(constant_field(grid, 1.0), 6);
    CHECK(s.coeffs[0] == doctest::Approx(std::sqrt(4.0 * M_PI)).epsilon(1e-13));
    for (std::size_t i = 1; i < s.coeffs.size(); ++i)
        CHECK(std::fabs(s.coeffs[i]) < 1e-12);
}

TEST_CASE("analyze: coordinate field is one degree-1 mode") {
    auto grid = SphereGrid::build(3, 8);
    const SpectralField s = analyze(coordinate_field(grid, 1), 4);
    double norm2 = 0.0, deg1 = 0.0;
    for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
        norm2 += s.coeffs[i] * s.coeffs[i];
        if (s.basis->degree(i) == 1)
            deg1 += s.coeffs[i] * s.coeffs[i];
    }
    CHECK(std::sqrt(norm2) == doctest::Approx(std::sqrt(4.0 * M_PI / 3.0)).epsilon(1e-12));
    CHECK(deg1 == doctest::Approx(norm2).epsilon(1e-13));
}

TEST_CASE("round trip on band-limited data") {
    for (int n : {2, 3, 4}) {
        auto grid = SphereGrid::build(n, 8);
        Rng rng(17 + n);
        const BoundaryField f = random_band_limited(grid, 6, rng);
        const SpectralField s = analyze(f, 6);
        REQUIRE(s.coeffs.size() == f.spectral->coeffs.size());
        for (std::size_t i = 0; i < s.coeffs.size(); ++i)
            CHECK(s.coeffs[i] == doctest::Approx(f.spectral->coeffs[i]).epsilon(1e-12));
        const std::vector<double> back = synthesize(s, *grid);
        for (std::size_t j = 0; j < back.size(); j += 13)
            CHECK(back[j] == doctest::Approx(f.values[j]).epsilon(1e-11));
    }
}

TEST_CASE("Parseval on the grid") {
    auto grid = SphereGrid::build(3, 10);
    Rng rng(5);
    const BoundaryField f = random_band_limited(grid, 8, rng);
    const SpectralField s = analyze(f, 8);
    double c2 = 0.0;
    for (double c : s.coeffs)
        c2 += c * c;
    const double l2 = lp_norm_boundary(f, 2.0);
    CHECK(c2 == doctest::Approx(l2 * l2).epsilon(1e-11));
}

TEST_CASE("analyze rejects insufficient exactness") {
    auto grid = SphereGrid::build(3, 4); // exactness 9
    CHECK_THROWS_AS(analyze(constant_field(grid, 1.0), 5), std::domain_error);
}

TEST_CASE("point evaluation matches grid synthesis") {
    auto grid = SphereGrid::build(3, 8);
    Rng rng(23);
    const BoundaryField f = random_band_limited(grid, 5, rng);
    for (std::size_t j = 0; j < grid->node_count(); j += 97) {
        const double v = f.spectral->evaluate(grid->node(j));
        CHECK(v == doctest::Approx(f.values[j]).epsilon(1e-11));
    }
}

TEST_CASE("odd/even polar parity flags") {
    auto basis = HarmonicBasis::get(3, 6);
    std::vector<double> up{0.3, 0.4, std::sqrt(1.0 - 0.25)};
    std::vector<double> dn{0.3, 0.4, -std::sqrt(1.0 - 0.25)};
    std::vector<double> yu, yd;
    basis->evaluate_point(up, yu);
    basis->evaluate_point(dn, yd);
    for (std::size_t i = 0; i < basis->size(); ++i) {
        const double flip = basis->odd_in_polar(i) ? -1.0 : 1.0;
        CHECK(yu[i] == doctest::Approx(flip * yd[i]).epsilon(1e-10));
    }
}

TEST_CASE("tangential gradient pairing") {
    auto grid = SphereGrid::build(3, 10);
    SUBCASE("constant K pairs to zero") {
        const BoundaryField K = with_spectral(constant_field(grid, 1.0), 4);
        const BoundaryField f = constant_field(grid, 2.0);
        for (int i = 1; i <= 3; ++i)
            CHECK(std::fabs(tangential_gradient_pairing(K, f, i)) < 1e-12);
    }
    SUBCASE("K = xi_1, f = 1: int |grad xi_1|^2 = 2 |S^2| / 3") {
        const BoundaryField K = with_spectral(coordinate_field(grid, 1), 4);
        const BoundaryField f = constant_field(grid, 1.0);
        CHECK(tangential_gradient_pairing(K, f, 1) ==
              doctest::Approx(2.0 * 4.0 * M_PI / 3.0).epsilon(1e-11));
        CHECK(std::fabs(tangential_gradient_pairing(K, f, 2)) < 1e-11);
    }
    SUBCASE("bilinear in K") {
        Rng rng(3);
        const BoundaryField K1 = with_spectral(random_band_limited(grid, 4, rng), 4);
        const BoundaryField K2 = with_spectral(random_band_limited(grid, 4, rng), 4);
        BoundaryField K3(grid, std::vector<double>(grid->node_count()));
        for (std::size_t j = 0; j < grid->node_count(); ++j)
            K3.values[j] = 2.0 * K1.values[j] - 0.5 * K2.values[j];
        K3 = with_spectral(std::move(K3), 4);
        const BoundaryField f = random_positive_field(grid, 3, 0.4, rng);
        const double lhs = tangential_gradient_pairing(K3, f, 2);
        const double rhs = 2.0 * tangential_gradient_pairing(K1, f, 2) -
                           0.5 * tangential_gradient_pairing(K2, f, 2);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
    }
    SUBCASE("rejections") {
        const BoundaryField Kplain = coordinate_field(grid, 1);
        const BoundaryField f = constant_field(grid, 1.0);
        CHECK_THROWS_AS(tangential_gradient_pairing(Kplain, f, 1), std::invalid_argument);
        const BoundaryField K = with_spectral(coordinate_field(grid, 1), 4);
        CHECK_THROWS_AS(tangential_gradient_pairing(K, f, 0), std::domain_error);
        const BoundaryField neg = constant_field(grid, -1.0);
        CHECK_THROWS_AS(tangential_gradient_pairing(K, neg, 1), std::domain_error);
        auto other = SphereGrid::build(3, 10);
        const BoundaryField g = constant_field(other, 1.0);
        CHECK_THROWS_AS(tangential_gradient_pairing(K, g, 1), std::invalid_argument);
    }
}
