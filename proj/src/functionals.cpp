/*
 * The trace functional Q_p and its closed-form sharp constants.
 *
 *   Q_p(f) = |Pf|_{L^q(B_1)} / |f|_{L^p(S^{n-1})},   q = np/(n-1).
 *
 * At p = 2(n-1)/(n-2) the supremum is
 * n^{-(n-2)/(2(n-1))} w_n^{-(n-2)/(2n(n-1))}, attained exactly on the family
 * c (1 + lambda xi.zeta)^{-(n-2)/2}; above the critical exponent it is
 * n^{-1/p} w_n^{-1/(np)}, attained only by constants. The evaluator is the
 * spectral extension on a radial Gauss rule, so Q_p is exact to quadrature
 * accuracy for band-limited data.
 */

#include "extremal/functionals.hpp"

#include <cmath>
#include <stdexcept>

namespace extremal {

FunctionalConfig::FunctionalConfig(int n_, double p_, int L, int m)
    : n(n_), p(p_), spectral_degree(L), radial_nodes(m) {
    if (n < 3)
        throw std::domain_error("FunctionalConfig: dimension must be >= 3");
    if (p <= 1.0)
        throw std::domain_error("FunctionalConfig: p must be > 1");
    if (L < 0 || m < 1)
        throw std::domain_error("FunctionalConfig: invalid resolution");
}

double critical_exponent(int n) {
    if (n < 3)
        throw std::domain_error("critical_exponent: dimension must be >= 3");
    return 2.0 * (n - 1.0) / (n - 2.0);
}

double sharp_constant_critical(int n) {
    if (n < 3)
        throw std::domain_error("sharp_constant_critical: dimension must be >= 3");
    const double nn = n;
    return std::pow(nn, -(nn - 2.0) / (2.0 * (nn - 1.0))) *
           std::pow(ball_volume(n), -(nn - 2.0) / (2.0 * nn * (nn - 1.0)));
}

double theta_ratio(int n) {
    if (n < 3)
        throw std::domain_error("theta_ratio: dimension must be >= 3");
    const double nn = n;
    return std::pow(nn, -1.0 / (nn - 1.0)) * std::pow(ball_volume(n), -1.0 / (nn * (nn - 1.0)));
}

double supercritical_constant(int n, double p) {
    if (n < 3)
        throw std::domain_error("supercritical_constant: dimension must be >= 3");
    if (p <= critical_exponent(n))
        throw std::domain_error("supercritical_constant: p must exceed the critical exponent");
    return std::pow(static_cast<double>(n), -1.0 / p) * std::pow(ball_volume(n), -1.0 / (n * p));
}

double q_functional(const BoundaryField& f, const FunctionalConfig& cfg) {
    if (!f.grid || f.grid->dim() != cfg.n)
        throw std::invalid_argument("q_functional: field dimension mismatch");
    const double q = cfg.q();
    const bool integer_q = std::fabs(q - std::round(q)) < 1e-12;
    if (!integer_q) {
        for (double v : f.values)
            if (v < 0.0)
                throw std::domain_error("q_functional: negative field with non-integer exponent");
    }
    const double denom = lp_norm_boundary(f, cfg.p);
    if (denom == 0.0)
        throw std::domain_error("q_functional: field is identically zero");

    const SpectralField spec = analyze(f, cfg.spectral_degree);
    const BallSample u = harmonic_extension(spec, RadialRule::build(cfg.n, cfg.radial_nodes), f.grid);
    return extension_lq_norm(u, q) / denom;
}

BoundaryField extremal_family(std::shared_ptr<const SphereGrid> grid, double lambda,
                              std::span<const double> zeta, double c) {
    if (lambda < 0.0 || lambda >= 1.0)
        throw std::domain_error("extremal_family: lambda must lie in [0,1)");
    if (c <= 0.0)
        throw std::domain_error("extremal_family: scale must be positive");
    const int n = grid->dim();
    if (static_cast<int>(zeta.size()) != n)
        throw std::invalid_argument("extremal_family: pole dimension mismatch");
    double znorm = 0.0;
    for (double z : zeta)
        znorm += z * z;
    if (std::fabs(znorm - 1.0) > 1e-10)
        throw std::invalid_argument("extremal_family: pole must be a unit vector");

    const double expo = -0.5 * (n - 2.0);
    std::vector<double> v(grid->node_count());
    for (std::size_t j = 0; j < v.size(); ++j) {
        const auto x = grid->node(j);
        double dot = 0.0;
        for (int d = 0; d < n; ++d)
            dot += x[d] * zeta[d];
        v[j] = c * std::pow(1.0 + lambda * dot, expo);
    }
    return BoundaryField(std::move(grid), std::move(v));
}

double weighted_iso_ratio(const BoundaryField& f, const BoundaryField& K,
                          const FunctionalConfig& cfg) {
    if (!f.grid || !K.grid || f.grid.get() != K.grid.get())
        throw std::invalid_argument("weighted_iso_ratio: fields live on different grids");
    const int n = cfg.n;
    if (f.grid->dim() != n)
        throw std::invalid_argument("weighted_iso_ratio: dimension mismatch");
    for (double v : f.values)
        if (v <= 0.0)
            throw std::domain_error("weighted_iso_ratio: f must be strictly positive");
    for (double v : K.values)
        if (v <= 0.0)
            throw std::domain_error("weighted_iso_ratio: K must be strictly positive");

    const SpectralField spec = analyze(f, cfg.spectral_degree);
    const BallSample u = harmonic_extension(spec, RadialRule::build(n, cfg.radial_nodes), f.grid);
    const double vol_exp = 2.0 * n / (n - 2.0);
    const auto rho = u.rule->weights();
    const auto w = f.grid->weights();
    const std::size_t nodes = f.grid->node_count();
    double vol = 0.0;
    for (std::size_t k = 0; k < u.rule->node_count(); ++k) {
        double shell = 0.0;
        for (std::size_t j = 0; j < nodes; ++j)
            shell += w[j] * std::pow(std::fabs(u.values[k * nodes + j]), vol_exp);
        vol += rho[k] * shell;
    }
    const double bdry_exp = 2.0 * (n - 1.0) / (n - 2.0);
    double bdry = 0.0;
    for (std::size_t j = 0; j < nodes; ++j)
        bdry += w[j] * K.values[j] * std::pow(f.values[j], bdry_exp);
    return std::pow(vol, 1.0 / n) / std::pow(bdry, 1.0 / (n - 1.0));
}

std::pair<double, double> carleman_check(const CarlemanSeries& u, int radial_nodes, int angular_nodes) {
    if (radial_nodes < 1 || angular_nodes < 1)
        throw std::domain_error("carleman_check: invalid resolution");
    const auto radial = quadrature::gauss_radial(2, radial_nodes);
    const double dw = 2.0 * M_PI / angular_nodes;

    double lhs = 0.0;
    for (int k = 0; k < radial_nodes; ++k) {
        double ring = 0.0;
        for (int i = 0; i < angular_nodes; ++i)
            ring += dw * std::exp(2.0 * disk_harmonic_eval(u, {radial.nodes[k], dw * i}));
        lhs += radial.weights[k] * ring;
    }
    double bdry = 0.0;
    for (int i = 0; i < angular_nodes; ++i)
        bdry += dw * std::exp(disk_boundary_eval(u, dw * i));
    const double rhs = bdry * bdry / (4.0 * M_PI);
    return {lhs, rhs};
}

ExpansionFit subcritical_expansion_fit(int n, double p, int L, int radial_nodes,
                                       std::span<const double> eps) {
    if (eps.size() < 2)
        throw std::domain_error("subcritical_expansion_fit: ladder needs at least two steps");
    const FunctionalConfig cfg(n, p, L, radial_nodes);
    auto grid = SphereGrid::build(n, std::max(L, 10));
    const double base = q_functional(constant_field(grid, 1.0), cfg);

    ExpansionFit fit;
    fit.ratios.reserve(eps.size());
    double a11 = 0, a12 = 0, a22 = 0, b1 = 0, b2 = 0;
    for (double e : eps) {
        BoundaryField f = constant_field(grid, 1.0);
        for (std::size_t j = 0; j < grid->node_count(); ++j)
            f.values[j] += e * grid->node(j)[0];
        const double ratio = q_functional(f, cfg) / base;
        fit.ratios.push_back(ratio);
        const double y = ratio - 1.0;
        const double e2 = e * e, e4 = e2 * e2;
        a11 += e4;
        a12 += e2 * e4;
        a22 += e4 * e4;
        b1 += e2 * y;
        b2 += e4 * y;
    }
    const double det = a11 * a22 - a12 * a12;
    fit.fitted = (b1 * a22 - b2 * a12) / det;
    fit.predicted = (n - 2.0) / (2.0 * n * (n - 1.0) * (n + 2.0)) * (critical_exponent(n) - p);
    return fit;
}

} // namespace extremal
