/*
 * Leading coefficients of the boundary expansion of the Poisson kernel.
 *
 * In Fermi coordinates at a boundary point, with r = |x| and theta = x/r,
 *
 *     P(x, 0) = (2/(n w_n)) r^{1-n} (a_0(theta) + r a_1(theta) + ...),
 *
 * a_0(theta) = theta_n, and a_1 solves the hemisphere Dirichlet problem
 *
 *     -Lap_{S^{n-1}} a_1 = b_0,   a_1 = 0 on the equator,
 *
 * with b_0 the curvature polynomial of rhs_b0. The Dirichlet eigenfunctions
 * are the harmonics odd under theta_n -> -theta_n, so the solve is a
 * projection onto odd modes followed by division by l(l+n-2). b_0 is even,
 * so its odd-basis expansion converges only algebraically; the projection
 * residual is reported alongside the coefficients.
 *
 * For the unit ball the kernel is explicit and the oracle fit of
 * (n w_n / 2) r^{n-1} P along a radius ladder recovers a_0 and a_1
 * independently; this pins the inner-normal sign convention h = +I.
 */

#include "extremal/expansion.hpp"

#include "extremal/kernels.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace extremal {

GeometryData::GeometryData(int n_, double H0_, std::vector<double> h0_)
    : n(n_), H0(H0_), h0(std::move(h0_)) {
    if (n < 3)
        throw std::domain_error("GeometryData: dimension must be >= 3");
    const int d = n - 1;
    if (static_cast<int>(h0.size()) != d * d)
        throw std::invalid_argument("GeometryData: second fundamental form has wrong shape");
    double tr = 0.0;
    for (int i = 0; i < d; ++i) {
        tr += h0[i * d + i];
        for (int j = 0; j < d; ++j)
            if (std::fabs(h0[i * d + j] - h0[j * d + i]) > 1e-12)
                throw std::invalid_argument("GeometryData: second fundamental form must be symmetric");
    }
    if (std::fabs(tr - H0) > 1e-12 * std::max(1.0, std::fabs(H0)))
        throw std::invalid_argument("GeometryData: trace of h must equal the mean curvature");
}

GeometryData ball_geometry(int n) {
    const int d = n - 1;
    std::vector<double> h(d * d, 0.0);
    for (int i = 0; i < d; ++i)
        h[i * d + i] = 1.0;
    return GeometryData(n, static_cast<double>(d), std::move(h));
}

GeometryData flat_geometry(int n) {
    const int d = n - 1;
    return GeometryData(n, 0.0, std::vector<double>(d * d, 0.0));
}

std::shared_ptr<const HemisphereGrid> HemisphereGrid::build(int n, int resolution) {
    if (n < 3)
        throw std::domain_error("HemisphereGrid: dimension must be >= 3");
    if (resolution < 1)
        throw std::domain_error("HemisphereGrid: resolution must be >= 1");

    auto grid = std::shared_ptr<HemisphereGrid>(new HemisphereGrid());
    grid->dim_ = n;
    int m = resolution + 1;
    if (m % 2 == 1)
        ++m;
    grid->azimuth_ = 2 * resolution + 2;
    grid->exactness_ = 2 * resolution + 1;

    // level 1 integrates over t = theta_n in (0,1) through the signed
    // composite rule (mirrored nodes, some negative weights); the rest of
    // the chain is the ordinary full rule
    grid->polar_.push_back(quadrature::half_interval_signed(2 * resolution + 1, n - 2));
    for (int level = 2; level <= n - 2; ++level) {
        const int s = n - 1 - level;
        const double e = 0.5 * (s - 1);
        grid->polar_.push_back(quadrature::gauss_jacobi(m, e, e));
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
    return grid;
}

std::shared_ptr<const TransformPlan> HemisphereGrid::plan(int L) const {
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (plan_ && plan_degree_ == L)
        return plan_;
    plan_ = std::make_shared<const TransformPlan>(HarmonicBasis::get(dim_, L), polar_, azimuth_);
    plan_degree_ = L;
    return plan_;
}

double rhs_b0_value(const GeometryData& geom, std::span<const double> theta) {
    const int n = geom.n;
    const int d = n - 1;
    const double tn = theta[n - 1];
    double quad = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            quad += geom.h0[i * d + j] * theta[i] * theta[j];
    return -geom.H0 - n * geom.H0 * tn * tn + 2.0 * n * (n + 2.0) * quad * tn * tn;
}

std::vector<double> rhs_b0(const GeometryData& geom, const HemisphereGrid& grid) {
    std::vector<double> v(grid.node_count());
    for (std::size_t j = 0; j < grid.node_count(); ++j)
        v[j] = rhs_b0_value(geom, grid.node(j));
    return v;
}

double a0_value(std::span<const double> theta) {
    return theta[theta.size() - 1];
}

HemisphereField solve_a1(const GeometryData& geom, int L) {
    if (L < 4)
        throw std::domain_error("solve_a1: degree must be >= 4");
    const int n = geom.n;
    // b0 has degree 4; resolution L+2 keeps every projection integral exact
    auto grid = HemisphereGrid::build(n, L + 2);
    auto plan = grid->plan(L);
    const auto& basis = plan->basis();

    const std::vector<double> b0 = rhs_b0(geom, *grid);
    std::vector<double> half_coeffs;
    plan->analyze(b0, half_coeffs);

    // L^2(S+) projection onto an odd mode carries a factor 2 because the
    // basis is orthonormal on the full sphere, |Y|^2_{L^2(S+)} = 1/2.
    HemisphereField out;
    out.spec.basis = HarmonicBasis::get(n, L);
    out.spec.coeffs.assign(basis.size(), 0.0);
    std::vector<double> proj(basis.size(), 0.0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!basis.odd_in_polar(i))
            continue;
        const double bcoeff = 2.0 * half_coeffs[i];
        proj[i] = bcoeff;
        out.spec.coeffs[i] = bcoeff / (-basis.laplace_eigenvalue(i));
    }

    // residual |b0 - Pi_odd b0|_{L^2(S+)} = |Lap a1 + b0|
    std::vector<double> fit;
    plan->synthesize(proj, fit);
    double res2 = 0.0, rhs2 = 0.0;
    const auto w = grid->weights();
    for (std::size_t j = 0; j < b0.size(); ++j) {
        const double d = b0[j] - fit[j];
        res2 += w[j] * d * d;
        rhs2 += w[j] * b0[j] * b0[j];
    }
    out.residual_l2 = std::sqrt(res2);
    out.rhs_l2 = std::sqrt(rhs2);
    return out;
}

FermiFit ball_kernel_fermi_oracle(int n, std::span<const double> theta, double r_min, double r_max,
                                  int ladder) {
    if (n < 3 || static_cast<int>(theta.size()) != n)
        throw std::invalid_argument("ball_kernel_fermi_oracle: bad direction");
    if (!(0.0 < r_min && r_min < r_max && r_max < 1.0) || ladder < 6)
        throw std::domain_error("ball_kernel_fermi_oracle: bad radius ladder");
    const double tn = theta[n - 1];
    if (tn < 0.0)
        throw std::domain_error("ball_kernel_fermi_oracle: direction must point into the ball");

    // boundary point xi0 = e_n; tangential unit direction of theta
    std::vector<double> xi0(n, 0.0);
    xi0[n - 1] = 1.0;
    double rho = 0.0;
    for (int d = 0; d < n - 1; ++d)
        rho += theta[d] * theta[d];
    rho = std::sqrt(rho);

    const double scale = 0.5 * sphere_area(n);
    constexpr int degree = 4;
    double ata[(degree + 1) * (degree + 1)] = {0.0};
    double atb[degree + 1] = {0.0};

    std::vector<double> x(n);
    const double ratio = std::pow(r_max / r_min, 1.0 / (ladder - 1));
    std::vector<double> rs(ladder), vs(ladder);
    for (int i = 0; i < ladder; ++i) {
        const double r = r_min * std::pow(ratio, i);
        // Fermi point: geodesic arc s = r*rho along the boundary sphere,
        // then depth t = r*theta_n inward
        const double s = r * rho;
        const double depth = 1.0 - r * tn;
        for (int d = 0; d < n - 1; ++d)
            x[d] = depth * ((rho > 1e-14) ? std::sin(s) * theta[d] / rho : 0.0);
        x[n - 1] = depth * std::cos(s);
        const double v = scale * std::pow(r, n - 1) * poisson_kernel_ball(n, x, xi0);
        rs[i] = r / r_max; // scaled abscissa keeps the normal matrix tame
        vs[i] = v;
    }
    for (int i = 0; i < ladder; ++i) {
        double pw[degree + 1];
        pw[0] = 1.0;
        for (int d = 1; d <= degree; ++d)
            pw[d] = pw[d - 1] * rs[i];
        for (int a = 0; a <= degree; ++a) {
            atb[a] += pw[a] * vs[i];
            for (int b = 0; b <= degree; ++b)
                ata[a * (degree + 1) + b] += pw[a] * pw[b];
        }
    }

    // solve the 5x5 normal system by Gaussian elimination with partial pivoting
    constexpr int m = degree + 1;
    double A[m][m + 1];
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b)
            A[a][b] = ata[a * m + b];
        A[a][m] = atb[a];
    }
    for (int col = 0; col < m; ++col) {
        int piv = col;
        for (int r = col + 1; r < m; ++r)
            if (std::fabs(A[r][col]) > std::fabs(A[piv][col]))
                piv = r;
        if (std::fabs(A[piv][col]) < 1e-13 * std::fabs(A[0][0]))
            throw std::runtime_error("ball_kernel_fermi_oracle: ill-conditioned fit");
        for (int c = 0; c <= m; ++c)
            std::swap(A[col][c], A[piv][c]);
        for (int r = 0; r < m; ++r) {
            if (r == col)
                continue;
            const double fac = A[r][col] / A[col][col];
            for (int c = col; c <= m; ++c)
                A[r][c] -= fac * A[col][c];
        }
    }
    double coef[m];
    for (int a = 0; a < m; ++a)
        coef[a] = A[a][m] / A[a][a];

    double rss = 0.0;
    for (int i = 0; i < ladder; ++i) {
        double fitv = 0.0, pw = 1.0;
        for (int d = 0; d <= degree; ++d) {
            fitv += coef[d] * pw;
            pw *= rs[i];
        }
        const double e = vs[i] - fitv;
        rss += e * e;
    }

    FermiFit fit;
    fit.c0 = coef[0];
    fit.c1 = coef[1] / r_max; // undo the abscissa scaling
    fit.rms_residual = std::sqrt(rss / ladder);
    return fit;
}

} // namespace extremal
