#pragma once

#include <span>

namespace extremal {

// Poisson kernel of the unit ball: (1 - |x|^2) / (n w_n |x - xi|^n),
// x interior, xi on the boundary sphere.
double poisson_kernel_ball(int n, std::span<const double> x, std::span<const double> xi);

// Poisson kernel of the upper half space: (2/(n w_n)) x_n / (|x' - xi|^2 + x_n^2)^{n/2},
// x = (x', x_n) with x_n > 0, xi a point of R^{n-1}.
double poisson_kernel_halfspace(int n, std::span<const double> x, std::span<const double> xi);

} // namespace extremal
