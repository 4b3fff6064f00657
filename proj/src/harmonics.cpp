/*
 * Spherical-harmonic analysis and synthesis on product grids.
 *
 * The transform is staged along the product structure: one contraction per
 * polar level plus a trigonometric azimuth stage, so a full analysis costs
 * O(nodes * L) per level instead of O(nodes * modes). Regrouping the sums
 * this way leaves the arithmetic equal to sum_j w_j f_j Y(theta_j) and the
 * summation order fixed, so results do not depend on the thread count.
 */

#include "extremal/harmonics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace extremal {

namespace {

// slot of the factor (m >= m') in the per-level triangular table
inline int pair_slot(int L, int mprime, int m) {
    return mprime * (L + 1) - mprime * (mprime - 1) / 2 + (m - mprime);
}

inline int pair_slot_count(int L) {
    return (L + 1) * (L + 2) / 2;
}

} // namespace

HarmonicBasis::HarmonicBasis(int n, int L) : dim_(n), max_degree_(L) {
    if (n < 2 || L < 0)
        throw std::domain_error("HarmonicBasis: invalid dimension or degree");

    az_order_.push_back(0);
    az_sine_.push_back(false);
    for (int q = 1; q <= L; ++q) {
        az_order_.push_back(q);
        az_sine_.push_back(false);
        az_order_.push_back(q);
        az_sine_.push_back(true);
    }

    const int P = n - 2;
    links_.resize(P);
    // deepest polar level couples to the azimuth modes
    for (int level = P; level >= 1; --level) {
        auto& out = links_[level - 1];
        if (level == P) {
            for (std::size_t a = 0; a < az_order_.size(); ++a)
                for (int m = az_order_[a]; m <= L; ++m)
                    out.push_back({m, static_cast<int>(a), pair_slot(L, az_order_[a], m)});
        } else {
            const auto& deeper = links_[level];
            for (std::size_t c = 0; c < deeper.size(); ++c)
                for (int m = deeper[c].order; m <= L; ++m)
                    out.push_back({m, static_cast<int>(c), pair_slot(L, deeper[c].order, m)});
        }
    }
    if (P > 0) {
        // final modes appear in degree-major order
        std::stable_sort(links_[0].begin(), links_[0].end(),
                         [](const Link& a, const Link& b) { return a.order < b.order; });
        degree_.reserve(links_[0].size());
        for (const auto& l : links_[0])
            degree_.push_back(l.order);
    } else {
        degree_.assign(az_order_.begin(), az_order_.end());
    }
    index_in_degree_.resize(degree_.size());
    for (std::size_t i = 0; i < degree_.size(); ++i)
        index_in_degree_[i] = (i > 0 && degree_[i - 1] == degree_[i]) ? index_in_degree_[i - 1] + 1 : 0;
}

std::shared_ptr<const HarmonicBasis> HarmonicBasis::get(int n, int max_degree) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const HarmonicBasis>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, max_degree);
    auto it = cache.find(key);
    if (it != cache.end())
        return it->second;
    auto basis = std::shared_ptr<const HarmonicBasis>(new HarmonicBasis(n, max_degree));
    cache[key] = basis;
    return basis;
}

bool HarmonicBasis::odd_in_polar(std::size_t mode) const {
    if (dim_ == 2)
        return az_sine_[mode];
    const Link& l = links_[0][mode];
    const int mprime = (dim_ == 3) ? az_order_[l.parent] : links_[1][l.parent].order;
    return ((l.order - mprime) % 2) != 0;
}

int HarmonicBasis::azimuth_order(std::size_t mode) const {
    if (dim_ == 2)
        return az_sine_[mode] ? -az_order_[mode] : az_order_[mode];
    int idx = static_cast<int>(mode);
    for (int level = 0; level < dim_ - 2; ++level)
        idx = links_[level][idx].parent;
    return az_sine_[idx] ? -az_order_[idx] : az_order_[idx];
}

int HarmonicBasis::index_in_degree(std::size_t mode) const {
    return index_in_degree_[mode];
}

void HarmonicBasis::evaluate_point(std::span<const double> theta, std::vector<double>& out) const {
    const int n = dim_;
    if (static_cast<int>(theta.size()) != n)
        throw std::invalid_argument("evaluate_point: wrong point dimension");
    const int P = n - 2;
    const int L = max_degree_;

    // chain variables
    std::vector<double> t(P), sn(P);
    double rho = 1.0;
    for (int j = 0; j < P; ++j) {
        const double tj = (rho > 1e-300) ? theta[n - 1 - j] / rho : 1.0;
        t[j] = std::clamp(tj, -1.0, 1.0);
        double s2 = 0.0;
        for (int d = 0; d < n - 1 - j; ++d)
            s2 += theta[d] * theta[d];
        const double rho_next = std::sqrt(s2);
        sn[j] = (rho > 1e-300) ? rho_next / rho : 0.0;
        rho = rho_next;
    }
    const double psi = std::atan2(theta[1], theta[0]);

    // azimuth factors
    std::vector<double> az(az_order_.size());
    for (std::size_t a = 0; a < az_order_.size(); ++a) {
        const int q = az_order_[a];
        if (q == 0)
            az[a] = 1.0 / std::sqrt(2.0 * M_PI);
        else
            az[a] = (az_sine_[a] ? std::sin(q * psi) : std::cos(q * psi)) / std::sqrt(M_PI);
    }
    if (P == 0) {
        out = az;
        return;
    }

    // per-level factor values for every (m', k) pair
    std::vector<std::vector<double>> fac(P); // slot-indexed
    std::vector<double> pvals;
    for (int j = 0; j < P; ++j) {
        fac[j].assign(pair_slot_count(L), 0.0);
        const int s = n - 2 - j;
        for (int mprime = 0; mprime <= L; ++mprime) {
            const double lambda = mprime + 0.5 * s;
            quadrature::gegenbauer_orthonormal(lambda, L - mprime, t[j], pvals);
            const double spow = std::pow(sn[j], mprime);
            for (int m = mprime; m <= L; ++m)
                fac[j][pair_slot(L, mprime, m)] = pvals[m - mprime] * spow;
        }
    }

    // accumulate chain products from the azimuth inward
    std::vector<double> cur = az, next;
    for (int level = P; level >= 1; --level) {
        const auto& links = links_[level - 1];
        next.assign(links.size(), 0.0);
        for (std::size_t li = 0; li < links.size(); ++li)
            next[li] = fac[level - 1][links[li].table] * cur[links[li].parent];
        cur.swap(next);
    }
    out = cur;
}

int SpectralField::dim() const {
    return basis->dim();
}

int SpectralField::max_degree() const {
    return basis->max_degree();
}

double SpectralField::evaluate(std::span<const double> theta) const {
    std::vector<double> y;
    basis->evaluate_point(theta, y);
    double s = 0.0;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        s += coeffs[i] * y[i];
    return s;
}

TransformPlan::TransformPlan(std::shared_ptr<const HarmonicBasis> basis,
                             std::span<const quadrature::Rule1D> polar, int azimuth)
    : basis_(std::move(basis)), polar_(polar.begin(), polar.end()), azimuth_(azimuth) {
    const int n = basis_->dim();
    const int L = basis_->max_degree();
    const int P = n - 2;
    if (static_cast<int>(polar_.size()) != P)
        throw std::invalid_argument("TransformPlan: wrong number of polar rules");

    factor_tables_.resize(P);
    factor_stride_.resize(P);
    std::vector<double> pvals;
    for (int j = 0; j < P; ++j) {
        const auto& nodes = polar_[j].nodes;
        const std::size_t M = nodes.size();
        factor_stride_[j] = M;
        factor_tables_[j].assign(static_cast<std::size_t>(pair_slot_count(L)) * M, 0.0);
        const int s = n - 2 - j;
        for (int mprime = 0; mprime <= L; ++mprime) {
            const double lambda = mprime + 0.5 * s;
            for (std::size_t i = 0; i < M; ++i) {
                const double t = nodes[i];
                quadrature::gegenbauer_orthonormal(lambda, L - mprime, t, pvals);
                const double spow = std::pow(1.0 - t * t, 0.5 * mprime);
                for (int m = mprime; m <= L; ++m)
                    factor_tables_[j][static_cast<std::size_t>(pair_slot(L, mprime, m)) * M + i] =
                        pvals[m - mprime] * spow;
            }
        }
    }

    const int A = static_cast<int>(basis_->az_order_.size());
    az_table_.assign(static_cast<std::size_t>(A) * azimuth_, 0.0);
    for (int a = 0; a < A; ++a) {
        const int q = basis_->az_order_[a];
        for (int k = 0; k < azimuth_; ++k) {
            const double psi = 2.0 * M_PI * k / azimuth_;
            az_table_[static_cast<std::size_t>(a) * azimuth_ + k] =
                (q == 0) ? 1.0 / std::sqrt(2.0 * M_PI)
                         : (basis_->az_sine_[a] ? std::sin(q * psi) : std::cos(q * psi)) / std::sqrt(M_PI);
        }
    }
}

void TransformPlan::analyze(std::span<const double> values, std::vector<double>& coeffs) const {
    const int P = basis_->dim() - 2;
    const int N = azimuth_;
    const int A = static_cast<int>(basis_->az_order_.size());
    const double az_w = 2.0 * M_PI / N;

    std::size_t G = 1;
    for (int j = 0; j < P; ++j)
        G *= factor_stride_[j];
    if (values.size() != G * static_cast<std::size_t>(N))
        throw std::invalid_argument("TransformPlan::analyze: value count mismatch");

    // azimuth stage
    std::vector<double> cur(G * A, 0.0);
    for (std::size_t I = 0; I < G; ++I) {
        const double* v = values.data() + I * N;
        for (int a = 0; a < A; ++a) {
            const double* tab = az_table_.data() + static_cast<std::size_t>(a) * N;
            double s = 0.0;
            for (int k = 0; k < N; ++k)
                s += v[k] * tab[k];
            cur[I * A + a] = az_w * s;
        }
    }

    // polar stages, innermost level first
    std::size_t cols = A;
    std::vector<double> next;
    for (int level = P; level >= 1; --level) {
        const auto& links = basis_->links_[level - 1];
        const std::size_t M = factor_stride_[level - 1];
        const std::size_t Gout = G / M;
        const auto& w = polar_[level - 1].weights;
        const auto& ftab = factor_tables_[level - 1];
        next.assign(Gout * links.size(), 0.0);
        for (std::size_t I = 0; I < Gout; ++I) {
            for (std::size_t li = 0; li < links.size(); ++li) {
                const double* tab = ftab.data() + static_cast<std::size_t>(links[li].table) * M;
                const std::size_t parent = links[li].parent;
                double s = 0.0;
                for (std::size_t i = 0; i < M; ++i)
                    s += w[i] * tab[i] * cur[(I * M + i) * cols + parent];
                next[I * links.size() + li] = s;
            }
        }
        cur.swap(next);
        cols = links.size();
        G = Gout;
    }

    if (P == 0) {
        coeffs = cur;
        return;
    }
    // reorder level-1 links into mode order (they were sorted by degree)
    coeffs = cur;
}

void TransformPlan::synthesize(std::span<const double> coeffs, std::span<const double> degree_scale,
                               std::vector<double>& values) const {
    const int P = basis_->dim() - 2;
    const int N = azimuth_;
    const int A = static_cast<int>(basis_->az_order_.size());
    if (coeffs.size() != basis_->size())
        throw std::invalid_argument("TransformPlan::synthesize: coefficient count mismatch");

    std::vector<double> cur(coeffs.begin(), coeffs.end());
    if (!degree_scale.empty())
        for (std::size_t i = 0; i < cur.size(); ++i)
            cur[i] *= degree_scale[basis_->degree_[i]];

    std::size_t G = 1;
    std::vector<double> next;
    for (int level = 1; level <= P; ++level) {
        const auto& links = basis_->links_[level - 1];
        const std::size_t M = factor_stride_[level - 1];
        const std::size_t cols_out = (level == P) ? A : basis_->links_[level].size();
        const auto& ftab = factor_tables_[level - 1];
        next.assign(G * M * cols_out, 0.0);
        for (std::size_t I = 0; I < G; ++I) {
            for (std::size_t li = 0; li < links.size(); ++li) {
                const double c = cur[I * links.size() + li];
                if (c == 0.0)
                    continue;
                const double* tab = ftab.data() + static_cast<std::size_t>(links[li].table) * M;
                const std::size_t parent = links[li].parent;
                for (std::size_t i = 0; i < M; ++i)
                    next[(I * M + i) * cols_out + parent] += c * tab[i];
            }
        }
        cur.swap(next);
        G *= M;
    }

    values.assign(G * static_cast<std::size_t>(N), 0.0);
    for (std::size_t I = 0; I < G; ++I) {
        double* v = values.data() + I * N;
        for (int a = 0; a < A; ++a) {
            const double c = cur[I * A + a];
            if (c == 0.0)
                continue;
            const double* tab = az_table_.data() + static_cast<std::size_t>(a) * N;
            for (int k = 0; k < N; ++k)
                v[k] += c * tab[k];
        }
    }
}

void TransformPlan::synthesize(std::span<const double> coeffs, std::vector<double>& values) const {
    synthesize(coeffs, {}, values);
}

std::shared_ptr<const TransformPlan> SphereGrid::plan(int max_degree) const {
    std::lock_guard<std::mutex> lock(plan_mutex_);
    auto it = plans_.find(max_degree);
    if (it != plans_.end())
        return it->second;
    auto plan = std::make_shared<const TransformPlan>(HarmonicBasis::get(dim_, max_degree), polar_, azimuth_);
    plans_[max_degree] = plan;
    return plan;
}

SpectralField analyze(const BoundaryField& f, int L) {
    if (!f.grid)
        throw std::invalid_argument("analyze: field has no grid");
    if (f.grid->exactness_degree() < 2 * L)
        throw std::domain_error("analyze: grid exactness insufficient for requested degree");
    auto plan = f.grid->plan(L);
    SpectralField s;
    s.basis = HarmonicBasis::get(f.grid->dim(), L);
    plan->analyze(f.values, s.coeffs);
    return s;
}

std::vector<double> synthesize(const SpectralField& s, const SphereGrid& grid) {
    std::vector<double> v;
    grid.plan(s.max_degree())->synthesize(s.coeffs, v);
    return v;
}

std::vector<double> synthesize_scaled(const SpectralField& s, const SphereGrid& grid,
                                      std::span<const double> degree_scale) {
    std::vector<double> v;
    grid.plan(s.max_degree())->synthesize(s.coeffs, degree_scale, v);
    return v;
}

BoundaryField with_spectral(BoundaryField f, int L) {
    f.spectral = analyze(f, L);
    return f;
}

double tangential_gradient_pairing(const BoundaryField& K, const BoundaryField& f, int i) {
    if (!K.grid || !f.grid || K.grid.get() != f.grid.get())
        throw std::invalid_argument("tangential_gradient_pairing: fields live on different grids");
    const auto& grid = *K.grid;
    const int n = grid.dim();
    if (n < 3)
        throw std::domain_error("tangential_gradient_pairing: requires dimension >= 3");
    if (i < 1 || i > n)
        throw std::domain_error("tangential_gradient_pairing: coordinate index out of range");
    if (!K.spectral)
        throw std::invalid_argument("tangential_gradient_pairing: K has no spectral representation");
    for (double v : f.values)
        if (v < 0.0)
            throw std::domain_error("tangential_gradient_pairing: f must be nonnegative");

    const int L = K.spectral->max_degree();
    if (grid.exactness_degree() < 2 * (L + 1))
        throw std::domain_error("tangential_gradient_pairing: grid exactness insufficient");

    // <grad K, grad g> = (Lap(Kg) - K Lap g - g Lap K) / 2 with g = xi_i,
    // Lap g = -(n-1) g; all Laplacians act through the spectral table.
    const std::vector<double> Kvals = synthesize(*K.spectral, grid);
    const BoundaryField g = coordinate_field(K.grid, i);

    std::vector<double> prod(Kvals.size());
    for (std::size_t j = 0; j < prod.size(); ++j)
        prod[j] = Kvals[j] * g.values[j];
    SpectralField prod_spec = analyze(BoundaryField(K.grid, std::move(prod)), L + 1);

    std::vector<double> eig_prod(L + 2), eig_K(L + 1);
    for (int l = 0; l <= L + 1; ++l)
        eig_prod[l] = -static_cast<double>(l) * (l + n - 2.0);
    for (int l = 0; l <= L; ++l)
        eig_K[l] = -static_cast<double>(l) * (l + n - 2.0);
    const std::vector<double> lapKg = synthesize_scaled(prod_spec, grid, eig_prod);
    const std::vector<double> lapK = synthesize_scaled(*K.spectral, grid, eig_K);

    const double expo = 2.0 * (n - 1.0) / (n - 2.0);
    const auto w = grid.weights();
    double acc = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) {
        const double inner =
            0.5 * (lapKg[j] + (n - 1.0) * Kvals[j] * g.values[j] - g.values[j] * lapK[j]);
        acc += w[j] * inner * std::pow(f.values[j], expo);
    }
    return acc;
}

} // namespace extremal
