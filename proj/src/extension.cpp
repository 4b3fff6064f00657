#include "extremal/extension.hpp"

#include "extremal/kernels.hpp"
#include "extremal/parallel.hpp"

#include <cmath>
#include <stdexcept>

namespace extremal {

BallSample harmonic_extension(const SpectralField& spec, std::shared_ptr<const RadialRule> rule,
                              std::shared_ptr<const SphereGrid> grid) {
    if (!rule || !grid)
        throw std::invalid_argument("harmonic_extension: missing rule or grid");
    if (rule->dim() != grid->dim() || spec.dim() != grid->dim())
        throw std::invalid_argument("harmonic_extension: dimension mismatch");
    const int L = spec.max_degree();
    if (grid->exactness_degree() < 2 * L)
        throw std::domain_error("harmonic_extension: grid exactness insufficient for degree");

    BallSample out;
    out.rule = std::move(rule);
    out.grid = std::move(grid);
    const std::size_t nodes = out.grid->node_count();
    const std::size_t radii = out.rule->node_count();
    out.values.assign(radii * nodes, 0.0);

    auto plan = out.grid->plan(L);
    const auto r = out.rule->nodes();
    // each radius writes its own disjoint slice
    parallel_for(radii, [&](std::size_t k) {
        std::vector<double> scale(L + 1);
        double rp = 1.0;
        for (int l = 0; l <= L; ++l) {
            scale[l] = rp;
            rp *= r[k];
        }
        std::vector<double> shell;
        plan->synthesize(spec.coeffs, scale, shell);
        std::copy(shell.begin(), shell.end(), out.values.begin() + k * nodes);
    });
    return out;
}

double extension_lq_norm(const BallSample& u, double q) {
    if (q < 1.0)
        throw std::domain_error("extension_lq_norm: q must be >= 1");
    const auto rho = u.rule->weights();
    const auto w = u.grid->weights();
    const std::size_t nodes = u.grid->node_count();
    double acc = 0.0;
    for (std::size_t k = 0; k < u.rule->node_count(); ++k) {
        double shell = 0.0;
        for (std::size_t j = 0; j < nodes; ++j) {
            const double v = u.values[k * nodes + j];
            if (!std::isfinite(v))
                throw std::domain_error("extension_lq_norm: sample has non-finite values");
            shell += w[j] * std::pow(std::fabs(v), q);
        }
        acc += rho[k] * shell;
    }
    return std::pow(acc, 1.0 / q);
}

double ball_integral(const BallSample& u) {
    const auto rho = u.rule->weights();
    const auto w = u.grid->weights();
    const std::size_t nodes = u.grid->node_count();
    double acc = 0.0;
    for (std::size_t k = 0; k < u.rule->node_count(); ++k) {
        double shell = 0.0;
        for (std::size_t j = 0; j < nodes; ++j)
            shell += w[j] * u.values[k * nodes + j];
        acc += rho[k] * shell;
    }
    return acc;
}

BoundaryField apply_T(const BallSample& h, int L) {
    const auto& grid = *h.grid;
    if (grid.exactness_degree() < 2 * L)
        throw std::domain_error("apply_T: grid exactness insufficient for degree");
    auto plan = grid.plan(L);
    auto basis = HarmonicBasis::get(grid.dim(), L);

    const std::size_t nodes = grid.node_count();
    const std::size_t radii = h.rule->node_count();
    const auto r = h.rule->nodes();
    const auto rho = h.rule->weights();

    // per-shell projections (independent; reduced afterwards in fixed order)
    std::vector<std::vector<double>> shell_coeffs(radii);
    parallel_for(radii, [&](std::size_t k) {
        plan->analyze(std::span<const double>(h.values.data() + k * nodes, nodes), shell_coeffs[k]);
    });

    SpectralField s;
    s.basis = basis;
    s.coeffs.assign(basis->size(), 0.0);
    for (std::size_t k = 0; k < radii; ++k) {
        std::vector<double> rpow(L + 1);
        double acc = 1.0;
        for (int l = 0; l <= L; ++l) {
            rpow[l] = acc;
            acc *= r[k];
        }
        for (std::size_t i = 0; i < s.coeffs.size(); ++i)
            s.coeffs[i] += rho[k] * rpow[basis->degree(i)] * shell_coeffs[k][i];
    }

    std::vector<double> vals;
    plan->synthesize(s.coeffs, vals);
    BoundaryField out(h.grid, std::move(vals));
    out.spectral = std::move(s);
    return out;
}

double extension_kernel_quadrature(const BoundaryField& f, std::span<const double> x) {
    const auto& grid = *f.grid;
    const int n = grid.dim();
    double acc = 0.0;
    const auto w = grid.weights();
    for (std::size_t j = 0; j < grid.node_count(); ++j)
        acc += w[j] * poisson_kernel_ball(n, x, grid.node(j)) * f.values[j];
    return acc;
}

} // namespace extremal
