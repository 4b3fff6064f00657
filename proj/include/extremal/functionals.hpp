#pragma once

#include "extremal/disk.hpp"
#include "extremal/extension.hpp"
#include "extremal/grid.hpp"

#include <span>
#include <utility>

namespace extremal {

// Parameters of the trace functional Q_p on the n-ball: the boundary norm
// exponent p, the derived target exponent q = np/(n-1), the spectral degree
// used for the harmonic extension and the radial node count.
struct FunctionalConfig {
    int n;
    double p;
    int spectral_degree;
    int radial_nodes;

    FunctionalConfig(int n_, double p_, int L, int m);
    double q() const { return n * p / (n - 1.0); }
};

// p = 2(n-1)/(n-2), where the trace functional is conformally invariant.
double critical_exponent(int n);

// Sharp constant of the critical trace inequality on the unit ball:
// n^{-(n-2)/(2(n-1))} w_n^{-(n-2)/(2n(n-1))}.
double sharp_constant_critical(int n);

// Isoperimetric ratio of the closed unit ball, n^{-1/(n-1)} w_n^{-1/(n(n-1))};
// equals sharp_constant_critical(n)^{2/(n-2)}.
double theta_ratio(int n);

// Sharp constant for p above critical: n^{-1/p} w_n^{-1/(np)}.
double supercritical_constant(int n, double p);

// Q_p(f) = |Pf|_{L^q(B)} / |f|_{L^p(boundary)}.
double q_functional(const BoundaryField& f, const FunctionalConfig& cfg);

// f(xi) = c (1 + lambda xi.zeta)^{-(n-2)/2}; the equality family of the
// critical inequality. Requires 0 <= lambda < 1.
BoundaryField extremal_family(std::shared_ptr<const SphereGrid> grid, double lambda,
                              std::span<const double> zeta, double c);

// Weighted isoperimetric ratio of the conformal metric induced by f:
// ( int_B (Pf)^{2n/(n-2)} dmu )^{1/n} / ( int_S K f^{2(n-1)/(n-2)} dS )^{1/(n-1)}.
double weighted_iso_ratio(const BoundaryField& f, const BoundaryField& K,
                          const FunctionalConfig& cfg);

// Two sides of the planar inequality int_D e^{2u} <= (1/4pi)(int_{S^1} e^u)^2
// for a harmonic u given by a Fourier series; computed by (radial Gauss) x
// (uniform angle) quadrature.
std::pair<double, double> carleman_check(const CarlemanSeries& u, int radial_nodes, int angular_nodes);

// Least-squares fit of the eps^2 coefficient of Q_p(1 + eps xi_1)/Q_p(1)
// over the given ladder (model c2 eps^2 + c4 eps^4, which isolates c2 from
// the quartic remainder). The predicted value is
// (n-2)/(2n(n-1)(n+2)) * (2(n-1)/(n-2) - p); below the critical exponent it
// is positive, so the constant is a critical point but not a maximizer.
struct ExpansionFit {
    double fitted;
    double predicted;
    std::vector<double> ratios; // Q_p(1 + eps xi_1)/Q_p(1) per ladder entry
};
ExpansionFit subcritical_expansion_fit(int n, double p, int L, int radial_nodes,
                                       std::span<const double> eps);

} // namespace extremal
