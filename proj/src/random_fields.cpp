#include "extremal/random_fields.hpp"

#include "extremal/harmonics.hpp"

#include <cmath>

namespace extremal {

std::uint64_t Rng::next() {
    // splitmix64
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double Rng::uniform() {
    const double u = static_cast<double>(next() >> 11) * 0x1.0p-53; // [0,1)
    return 2.0 * u - 1.0;
}

BoundaryField random_band_limited(std::shared_ptr<const SphereGrid> grid, int L, Rng& rng) {
    auto basis = HarmonicBasis::get(grid->dim(), L);
    SpectralField s;
    s.basis = basis;
    s.coeffs.resize(basis->size());
    for (double& c : s.coeffs)
        c = rng.uniform();
    std::vector<double> vals = synthesize(s, *grid);
    BoundaryField f(std::move(grid), std::move(vals));
    f.spectral = std::move(s);
    return f;
}

BoundaryField random_positive_field(std::shared_ptr<const SphereGrid> grid, int L, double amplitude,
                                    Rng& rng) {
    BoundaryField g = random_band_limited(std::move(grid), L, rng);
    double peak = 0.0;
    for (double v : g.values)
        peak = std::max(peak, std::fabs(v));
    const double scale = (peak > 0.0) ? amplitude / peak : 0.0;
    for (double& v : g.values)
        v = 1.0 + scale * v;
    if (g.spectral) {
        for (double& c : g.spectral->coeffs)
            c *= scale;
        g.spectral->coeffs[0] += std::sqrt(sphere_area(g.grid->dim())); // constant mode of 1
    }
    return g;
}

BallSample random_ball_sample(std::shared_ptr<const SphereGrid> grid,
                              std::shared_ptr<const RadialRule> rule, int L, Rng& rng) {
    const BoundaryField g0 = random_band_limited(grid, L, rng);
    const BoundaryField g1 = random_band_limited(grid, L, rng);
    const BoundaryField g2 = random_band_limited(grid, L, rng);
    BallSample h;
    h.grid = std::move(grid);
    h.rule = std::move(rule);
    const std::size_t nodes = h.grid->node_count();
    h.values.resize(nodes * h.rule->node_count());
    const auto r = h.rule->nodes();
    for (std::size_t k = 0; k < h.rule->node_count(); ++k)
        for (std::size_t j = 0; j < nodes; ++j)
            h.values[k * nodes + j] = g0.values[j] + r[k] * g1.values[j] + r[k] * r[k] * g2.values[j];
    return h;
}

CarlemanSeries random_carleman_series(int order, Rng& rng) {
    CarlemanSeries u;
    u.a0 = rng.uniform();
    u.cos_coeffs.resize(order);
    u.sin_coeffs.resize(order);
    for (int k = 0; k < order; ++k) {
        u.cos_coeffs[k] = rng.uniform();
        u.sin_coeffs[k] = rng.uniform();
    }
    return u;
}

} // namespace extremal
