#pragma once

#include "extremal/harmonics.hpp"

#include <memory>
#include <span>
#include <vector>

namespace extremal {

// Boundary geometry at the expansion point: mean curvature H(0) and the
// second fundamental form h_ij(0) with respect to the inner normal
// (for the unit ball h = +I, H = n-1; the sign is pinned by the explicit
// ball-kernel oracle).
struct GeometryData {
    int n;
    double H0;
    std::vector<double> h0; // (n-1) x (n-1), row-major, symmetric, trace == H0

    GeometryData(int n_, double H0_, std::vector<double> h0_);
};

GeometryData ball_geometry(int n);
GeometryData flat_geometry(int n);

// Quadrature on the upper hemisphere S^{n-1}_+ (theta_n > 0): product of a
// half-interval Gauss rule in t = theta_n and the full lower chain. Weights
// integrate over the hemisphere; exact for polynomials of degree <= exactness.
class HemisphereGrid {
  public:
    static std::shared_ptr<const HemisphereGrid> build(int n, int resolution);

    int dim() const { return dim_; }
    int exactness_degree() const { return exactness_; }
    std::size_t node_count() const { return weights_.size(); }
    std::span<const double> node(std::size_t j) const { return {nodes_.data() + j * dim_, static_cast<std::size_t>(dim_)}; }
    std::span<const double> weights() const { return weights_; }
    std::shared_ptr<const TransformPlan> plan(int L) const;

  private:
    HemisphereGrid() = default;
    int dim_ = 0;
    int exactness_ = 0;
    int azimuth_ = 0;
    std::vector<quadrature::Rule1D> polar_;
    std::vector<double> nodes_;
    std::vector<double> weights_;
    mutable std::shared_ptr<const TransformPlan> plan_;
    mutable int plan_degree_ = -1;
};

// Solution of the hemisphere Dirichlet problem in the odd (equator-vanishing)
// spherical-harmonic basis, with the projection residual of the data.
struct HemisphereField {
    SpectralField spec;     // coefficients on odd modes only
    double residual_l2;     // |Lap a1 + b0|_{L^2(S+)} at this truncation
    double rhs_l2;          // |b0|_{L^2(S+)}

    double evaluate(std::span<const double> theta) const { return spec.evaluate(theta); }
};

// Right-hand side of the first-order kernel coefficient problem:
// b0 = -H(0) - n H(0) theta_n^2 + 2n(n+2) h_ij(0) theta_i theta_j theta_n^2.
double rhs_b0_value(const GeometryData& geom, std::span<const double> theta);
std::vector<double> rhs_b0(const GeometryData& geom, const HemisphereGrid& grid);

// a0 accessor of the kernel expansion (always theta_n).
double a0_value(std::span<const double> theta);

// Solves -Lap_S a1 = b0 on S^{n-1}_+ with a1 = 0 on the equator by expanding
// in the odd harmonics and dividing by l(l+n-2).
HemisphereField solve_a1(const GeometryData& geom, int L);

struct FermiFit {
    double c0;
    double c1;
    double rms_residual;
};

// Least-squares fit of (n w_n / 2) r^{n-1} P_ball(x(r, theta), xi0) over a
// geometric radius ladder in [r_min, r_max]; returns the constant and linear
// coefficients (a quartic model absorbs the higher orders).
FermiFit ball_kernel_fermi_oracle(int n, std::span<const double> theta, double r_min = 1e-3,
                                  double r_max = 1e-1, int ladder = 16);

} // namespace extremal
