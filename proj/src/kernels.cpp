#include "extremal/kernels.hpp"

#include "extremal/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace extremal {

double poisson_kernel_ball(int n, std::span<const double> x, std::span<const double> xi) {
    if (n < 2 || static_cast<int>(x.size()) != n || static_cast<int>(xi.size()) != n)
        throw std::invalid_argument("poisson_kernel_ball: bad dimensions");
    double r2 = 0.0, d2 = 0.0;
    for (int k = 0; k < n; ++k) {
        r2 += x[k] * x[k];
        const double d = x[k] - xi[k];
        d2 += d * d;
    }
    if (r2 >= 1.0)
        throw std::domain_error("poisson_kernel_ball: point must lie strictly inside the ball");
    return (1.0 - r2) / (sphere_area(n) * std::pow(d2, 0.5 * n));
}

double poisson_kernel_halfspace(int n, std::span<const double> x, std::span<const double> xi) {
    if (n < 2 || static_cast<int>(x.size()) != n || static_cast<int>(xi.size()) != n - 1)
        throw std::invalid_argument("poisson_kernel_halfspace: bad dimensions");
    const double xn = x[n - 1];
    if (xn <= 0.0)
        throw std::domain_error("poisson_kernel_halfspace: point must lie in the open half space");
    double d2 = xn * xn;
    for (int k = 0; k < n - 1; ++k) {
        const double d = x[k] - xi[k];
        d2 += d * d;
    }
    return (2.0 / sphere_area(n)) * xn / std::pow(d2, 0.5 * n);
}

} // namespace extremal
