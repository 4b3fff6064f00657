#include "extremal/disk.hpp"

#include <cmath>
#include <stdexcept>

namespace extremal {

namespace {

double series_eval(const CarlemanSeries& u, double r, double theta) {
    double s = u.a0;
    double rp = 1.0;
    const int K = u.order();
    for (int k = 1; k <= K; ++k) {
        rp *= r;
        const double a = (k <= static_cast<int>(u.cos_coeffs.size())) ? u.cos_coeffs[k - 1] : 0.0;
        const double b = (k <= static_cast<int>(u.sin_coeffs.size())) ? u.sin_coeffs[k - 1] : 0.0;
        s += rp * (a * std::cos(k * theta) + b * std::sin(k * theta));
    }
    return s;
}

} // namespace

double disk_harmonic_eval(const CarlemanSeries& u, const DiskPoint& pt) {
    if (pt.r >= 1.0 || pt.r < 0.0)
        throw std::domain_error("disk_harmonic_eval: point must lie strictly inside the disk");
    return series_eval(u, pt.r, pt.theta);
}

double disk_boundary_eval(const CarlemanSeries& u, double theta) {
    return series_eval(u, 1.0, theta);
}

} // namespace extremal
