#include "extremal/rearrange.hpp"

#include "extremal/extension.hpp"
#include "extremal/harmonics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace extremal {

namespace {

// polar angle of a node measured from the pole
double angle_to_pole(std::span<const double> x, std::span<const double> pole) {
    double dot = 0.0;
    for (std::size_t d = 0; d < x.size(); ++d)
        dot += x[d] * pole[d];
    return std::acos(std::clamp(dot, -1.0, 1.0));
}

// invert the cap-measure function |cap(alpha)| = |S^{n-2}| int_0^alpha sin^{n-2}
double cap_angle_for_measure(int n, double target, double total) {
    if (n == 3) // |cap| = 2 pi (1 - cos alpha), total = 4 pi
        return std::acos(std::clamp(1.0 - 2.0 * target / total, -1.0, 1.0));
    double lo = 0.0, hi = M_PI;
    const auto rule = quadrature::gauss_jacobi(64, 0.0, 0.0);
    auto cap = [&](double alpha) {
        double s = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double phi = 0.5 * alpha * (rule.nodes[i] + 1.0);
            s += 0.5 * alpha * rule.weights[i] * std::pow(std::sin(phi), n - 2);
        }
        return s * sphere_area(n - 1);
    };
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (cap(mid) < target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<std::size_t> nodes_by_angle(const SphereGrid& grid, std::span<const double> pole) {
    std::vector<std::size_t> order(grid.node_count());
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> ang(grid.node_count());
    for (std::size_t j = 0; j < grid.node_count(); ++j)
        ang[j] = angle_to_pole(grid.node(j), pole);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return ang[a] < ang[b]; });
    return order;
}

} // namespace

double distribution_function(const AxisymmetricField& f, double t) {
    double s = 0.0;
    for (std::size_t k = 0; k < f.values.size(); ++k)
        if (f.values[k] > t)
            s += f.weights[k];
    return s;
}

double axis_lp_norm(const AxisymmetricField& f, double p) {
    if (p < 1.0)
        throw std::domain_error("axis_lp_norm: p must be >= 1");
    double s = 0.0;
    for (std::size_t k = 0; k < f.values.size(); ++k)
        s += f.weights[k] * std::pow(std::fabs(f.values[k]), p);
    return std::pow(s, 1.0 / p);
}

AxisymmetricField symmetric_rearrangement(const BoundaryField& f, std::span<const double> pole) {
    const auto& grid = *f.grid;
    const int n = grid.dim();
    if (static_cast<int>(pole.size()) != n)
        throw std::invalid_argument("symmetric_rearrangement: pole dimension mismatch");

    // sort values descending, ties broken by node index for determinism
    std::vector<std::size_t> order(grid.node_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return f.values[a] > f.values[b];
    });

    AxisymmetricField out;
    out.dim = n;
    out.pole.assign(pole.begin(), pole.end());
    out.nonincreasing = true;
    out.values.resize(order.size());
    out.weights.resize(order.size());
    out.angles.resize(order.size());
    const auto w = grid.weights();
    const double total = sphere_area(n);
    double cum = 0.0;
    for (std::size_t k = 0; k < order.size(); ++k) {
        out.values[k] = f.values[order[k]];
        out.weights[k] = w[order[k]];
        out.angles[k] = cap_angle_for_measure(n, cum + 0.5 * out.weights[k], total);
        cum += out.weights[k];
    }
    return out;
}

BoundaryField resample_axisymmetric(const AxisymmetricField& f, std::shared_ptr<const SphereGrid> grid) {
    if (grid->dim() != f.dim)
        throw std::invalid_argument("resample_axisymmetric: dimension mismatch");
    const auto order = nodes_by_angle(*grid, f.pole);
    std::vector<double> cum(f.weights.size());
    std::partial_sum(f.weights.begin(), f.weights.end(), cum.begin());

    std::vector<double> vals(grid->node_count(), 0.0);
    const auto w = grid->weights();
    double u = 0.0;
    for (std::size_t k = 0; k < order.size(); ++k) {
        const double mid = u + 0.5 * w[order[k]];
        const auto it = std::lower_bound(cum.begin(), cum.end(), mid);
        const std::size_t cell = std::min<std::size_t>(it - cum.begin(), f.values.size() - 1);
        vals[order[k]] = f.values[cell];
        u += w[order[k]];
    }
    return BoundaryField(std::move(grid), std::move(vals));
}

std::pair<double, double> extension_comparison(const BoundaryField& f, double q, int L, int radial_nodes) {
    for (double v : f.values)
        if (v < 0.0)
            throw std::domain_error("extension_comparison: field must be nonnegative");
    const int n = f.grid->dim();
    std::vector<double> pole(n, 0.0);
    pole[n - 1] = 1.0;

    const AxisymmetricField star = symmetric_rearrangement(f, pole);
    const BoundaryField fstar = resample_axisymmetric(star, f.grid);

    auto rule = RadialRule::build(n, radial_nodes);
    const double lhs = extension_lq_norm(harmonic_extension(analyze(f, L), rule, f.grid), q);
    const double rhs = extension_lq_norm(harmonic_extension(analyze(fstar, L), rule, f.grid), q);
    return {lhs, rhs};
}

} // namespace extremal
