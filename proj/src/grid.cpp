/*
 * Quadrature grids on S^{n-1} and the radial interval.
 *
 * The sphere rule is a tensor product of Gauss-Gegenbauer rules along the
 * polar-angle chain (weights sin^{n-2}, sin^{n-3}, ..., sin) and a uniform
 * azimuth rule. With polar counts M >= resolution+1 and 2*resolution+2
 * azimuth nodes every monomial of total degree <= 2*resolution+1 integrates
 * exactly; the reported exactness degree is asserted by a moment self-test
 * at construction. Polar counts are kept even so no node sits on t = 0.
 *
 * For n = 2 the rule is the plain uniform rule with 2*resolution nodes,
 * exact through degree 2*resolution - 1.
 */

#include "extremal/grid.hpp"

#include "extremal/harmonics.hpp"

#include <cmath>
#include <stdexcept>

namespace extremal {

double ball_volume(int n) {
    return std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

double sphere_area(int n) {
    return n * ball_volume(n);
}

std::shared_ptr<const SphereGrid> SphereGrid::build(int n, int resolution) {
    if (n < 2)
        throw std::domain_error("SphereGrid: dimension must be >= 2");
    if (resolution < 1)
        throw std::domain_error("SphereGrid: resolution must be >= 1");

    auto grid = std::shared_ptr<SphereGrid>(new SphereGrid());
    grid->dim_ = n;
    grid->resolution_ = resolution;

    if (n == 2) {
        grid->azimuth_ = 2 * resolution;
        grid->exactness_ = 2 * resolution - 1;
    } else {
        int m = resolution + 1;
        if (m % 2 == 1)
            ++m;
        grid->azimuth_ = 2 * resolution + 2;
        grid->exactness_ = 2 * resolution + 1;
        for (int level = 0; level < n - 2; ++level) {
            const int s = n - 1 - (level + 1); // sin exponent of this polar angle
            const double e = 0.5 * (s - 1);
            grid->polar_.push_back(quadrature::gauss_jacobi(m, e, e));
        }
    }

    const int N = grid->azimuth_;
    const double az_w = 2.0 * M_PI / N;
    std::size_t count = N;
    for (const auto& r : grid->polar_)
        count *= r.nodes.size();
    grid->nodes_.resize(count * n);
    grid->weights_.resize(count);

    const int P = n - 2;
    std::vector<int> idx(P, 0);
    std::size_t pos = 0;
    for (;;) {
        double prefix = 1.0, wpolar = 1.0;
        std::vector<double> coord(n, 0.0);
        for (int j = 0; j < P; ++j) {
            const double t = grid->polar_[j].nodes[idx[j]];
            coord[n - 1 - j] = prefix * t;
            prefix *= std::sqrt(std::max(0.0, 1.0 - t * t));
            wpolar *= grid->polar_[j].weights[idx[j]];
        }
        for (int k = 0; k < N; ++k) {
            const double psi = az_w * k;
            coord[0] = prefix * std::cos(psi);
            coord[1] = prefix * std::sin(psi);
            for (int d = 0; d < n; ++d)
                grid->nodes_[pos * n + d] = coord[d];
            grid->weights_[pos] = wpolar * az_w;
            ++pos;
        }
        int j = P - 1;
        for (; j >= 0; --j) {
            if (++idx[j] < static_cast<int>(grid->polar_[j].nodes.size()))
                break;
            idx[j] = 0;
        }
        if (j < 0)
            break;
    }

    grid->self_test();
    return grid;
}

void SphereGrid::self_test() const {
    const int n = dim_;
    const double area = sphere_area(n);
    const double tol = 1e-10 * std::max(1.0, area);

    double total = 0.0;
    for (double w : weights_)
        total += w;
    if (std::fabs(total - area) > 1e-10 * area)
        throw std::runtime_error("SphereGrid: weight sum deviates from sphere area");

    std::vector<double> first(n, 0.0), second(n * n, 0.0);
    for (std::size_t j = 0; j < node_count(); ++j) {
        const auto x = node(j);
        const double w = weights_[j];
        for (int a = 0; a < n; ++a) {
            first[a] += w * x[a];
            for (int b = 0; b < n; ++b)
                second[a * n + b] += w * x[a] * x[b];
        }
    }
    for (int a = 0; a < n; ++a) {
        if (std::fabs(first[a]) > tol)
            throw std::runtime_error("SphereGrid: first moment self-test failed");
        for (int b = 0; b < n; ++b) {
            const double expect = (a == b) ? area / n : 0.0;
            if (std::fabs(second[a * n + b] - expect) > tol)
                throw std::runtime_error("SphereGrid: second moment self-test failed");
        }
    }
}

double SphereGrid::integrate(std::span<const double> values) const {
    if (values.size() != weights_.size())
        throw std::invalid_argument("SphereGrid::integrate: value count mismatch");
    double s = 0.0;
    for (std::size_t j = 0; j < weights_.size(); ++j)
        s += weights_[j] * values[j];
    return s;
}

std::shared_ptr<const RadialRule> RadialRule::build(int n, int m) {
    if (n < 2)
        throw std::domain_error("RadialRule: dimension must be >= 2");
    if (m < 1)
        throw std::domain_error("RadialRule: node count must be >= 1");
    auto rule = std::shared_ptr<RadialRule>(new RadialRule());
    rule->dim_ = n;
    rule->rule_ = quadrature::gauss_radial(n, m);
    return rule;
}

BoundaryField::BoundaryField(std::shared_ptr<const SphereGrid> g, std::vector<double> v)
    : grid(std::move(g)), values(std::move(v)) {
    if (!grid || values.size() != grid->node_count())
        throw std::invalid_argument("BoundaryField: value count does not match grid");
}

BoundaryField constant_field(std::shared_ptr<const SphereGrid> grid, double value) {
    std::vector<double> v(grid->node_count(), value);
    return BoundaryField(std::move(grid), std::move(v));
}

BoundaryField coordinate_field(std::shared_ptr<const SphereGrid> grid, int i) {
    if (i < 1 || i > grid->dim())
        throw std::domain_error("coordinate_field: index out of range");
    std::vector<double> v(grid->node_count());
    for (std::size_t j = 0; j < grid->node_count(); ++j)
        v[j] = grid->node(j)[i - 1];
    return BoundaryField(std::move(grid), std::move(v));
}

double lp_norm_boundary(const BoundaryField& f, double p) {
    if (p < 1.0)
        throw std::domain_error("lp_norm_boundary: p must be >= 1");
    double s = 0.0;
    const auto w = f.grid->weights();
    for (std::size_t j = 0; j < f.values.size(); ++j) {
        const double v = f.values[j];
        if (!std::isfinite(v))
            throw std::domain_error("lp_norm_boundary: field has non-finite values");
        s += w[j] * std::pow(std::fabs(v), p);
    }
    return std::pow(s, 1.0 / p);
}

double distribution_function(const BoundaryField& f, double t) {
    double s = 0.0;
    const auto w = f.grid->weights();
    for (std::size_t j = 0; j < f.values.size(); ++j)
        if (f.values[j] > t)
            s += w[j];
    return s;
}

} // namespace extremal
