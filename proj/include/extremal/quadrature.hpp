#pragma once

#include <vector>

namespace extremal::quadrature {

struct Rule1D {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Gauss rule for the Jacobi weight (1-x)^a (1+x)^b on [-1,1].
// Nodes are the zeros of the degree-m Jacobi polynomial; exact for
// polynomials of degree <= 2m-1 against the weight.
Rule1D gauss_jacobi(int m, double a, double b);

// Gauss rule for the weight r^{n-1} on (0,1); sum of weights is 1/n.
Rule1D gauss_radial(int n, int m);

// Signed composite rule computing int_0^1 q(t) (1-t^2)^{(s-1)/2} dt exactly
// for polynomials q of degree <= exact_degree: the even part of q through the
// symmetric full-interval Gauss rule, the odd part t*h(t^2) through u = t^2
// (Jacobi weight (1-u)^{(s-1)/2} on (0,1), mirrored nodes with signed
// weights). All nodes lie in (-1,1), where the spherical-harmonic factors
// are well conditioned.
Rule1D half_interval_signed(int exact_degree, int s);

// Total mass of (1-t^2)^{lambda-1/2} on [-1,1].
double gegenbauer_mass(double lambda);

// Values p_0..p_kmax at t of the orthonormal polynomials for the weight
// (1-t^2)^{lambda-1/2} on [-1,1]. Appends into out (resized to kmax+1).
void gegenbauer_orthonormal(double lambda, int kmax, double t, std::vector<double>& out);

} // namespace extremal::quadrature
