#pragma once

#include <vector>

namespace extremal {

// Truncated Fourier series of a harmonic function on the unit disk:
// u(r, theta) = a0 + sum_k r^k (a_k cos k theta + b_k sin k theta).
struct CarlemanSeries {
    double a0 = 0.0;
    std::vector<double> cos_coeffs;
    std::vector<double> sin_coeffs;

    int order() const { return static_cast<int>(std::max(cos_coeffs.size(), sin_coeffs.size())); }
};

struct DiskPoint {
    double r;
    double theta;
};

double disk_harmonic_eval(const CarlemanSeries& u, const DiskPoint& pt);

// boundary trace u(1, theta)
double disk_boundary_eval(const CarlemanSeries& u, double theta);

} // namespace extremal
