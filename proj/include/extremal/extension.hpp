#pragma once

#include "extremal/grid.hpp"
#include "extremal/harmonics.hpp"

#include <memory>
#include <span>
#include <vector>

namespace extremal {

// Sample of a function on the unit ball at the points r_k * theta_j
// (radial Gauss nodes x sphere grid). Values are stored radius-major.
struct BallSample {
    std::shared_ptr<const RadialRule> rule;
    std::shared_ptr<const SphereGrid> grid;
    std::vector<double> values; // [k * node_count + j]

    double& at(std::size_t k, std::size_t j) { return values[k * grid->node_count() + j]; }
    double at(std::size_t k, std::size_t j) const { return values[k * grid->node_count() + j]; }
};

// Harmonic extension sampled on the ball: each degree-l mode extends as r^l.
BallSample harmonic_extension(const SpectralField& spec, std::shared_ptr<const RadialRule> rule,
                              std::shared_ptr<const SphereGrid> grid);

// ( sum_k rho_k sum_j w_j |u_kj|^q )^{1/q}
double extension_lq_norm(const BallSample& u, double q);

// int_B u dmu on the sample
double ball_integral(const BallSample& u);

// Dual operator: (Th)(xi) = int_B P(x, xi) h(x) dmu(x), evaluated spectrally
// (project each radial shell, damp the degree-l coefficient by r^l, integrate
// in r). The result carries its spectral table of degree L.
BoundaryField apply_T(const BallSample& h, int L);

// Direct kernel-quadrature extension (cross-check oracle for the spectral
// path; near-singular as |x| -> 1, intended for |x| <= 0.9).
double extension_kernel_quadrature(const BoundaryField& f, std::span<const double> x);

} // namespace extremal
