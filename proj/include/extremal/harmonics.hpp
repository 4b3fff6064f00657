#pragma once

#include "extremal/grid.hpp"

#include <memory>
#include <span>
#include <vector>

namespace extremal {

/*
 * Real orthonormal spherical harmonics on S^{n-1}, n >= 2, as products of
 * orthonormal ultraspherical factors along the polar-angle chain and a
 * trigonometric azimuth factor. A basis function is indexed by a chain
 *
 *     l = m_1 >= m_2 >= ... >= m_{n-2} >= q >= 0   (+ cos/sin for q > 0)
 *
 * and has total degree l; the factor at polar level j is
 *
 *     p_{m_j - m_{j+1}}^{(lambda)}(cos phi_j) (sin phi_j)^{m_{j+1}},
 *     lambda = m_{j+1} + (n-1-j)/2,
 *
 * with p_k the orthonormal polynomials for the weight (1-t^2)^{lambda-1/2}.
 * Normalization: int_{S^{n-1}} Y^2 dS = 1.
 */
class HarmonicBasis {
  public:
    // cached per (n, L)
    static std::shared_ptr<const HarmonicBasis> get(int n, int max_degree);

    int dim() const { return dim_; }
    int max_degree() const { return max_degree_; }
    std::size_t size() const { return degree_.size(); }
    int degree(std::size_t mode) const { return degree_[mode]; }
    double laplace_eigenvalue(std::size_t mode) const {
        const double l = degree_[mode];
        return -l * (l + dim_ - 2.0);
    }
    // true when the mode is odd under theta_n -> -theta_n (vanishes on the equator)
    bool odd_in_polar(std::size_t mode) const;
    // azimuth order q, signed: -q for the sine partner (n >= 2); for n > 3 this
    // only identifies the azimuth factor, not the full chain.
    int azimuth_order(std::size_t mode) const;
    // index of the mode within its degree block (enumeration order)
    int index_in_degree(std::size_t mode) const;

    // Values of every basis function at an arbitrary unit vector.
    void evaluate_point(std::span<const double> theta, std::vector<double>& out) const;

    struct Link {
        int order;  // m_j
        int parent; // index into level j+1 list (or azimuth list at the last polar level)
        int table;  // factor table slot in a TransformPlan
    };

  private:
    friend class TransformPlan;
    HarmonicBasis(int n, int L);

    int dim_;
    int max_degree_;
    // links_[j-1] holds level-j links, j = 1..n-2; chains at the last polar
    // level point into the azimuth mode list.
    std::vector<std::vector<Link>> links_;
    std::vector<int> az_order_;      // azimuth q per azimuth mode
    std::vector<bool> az_sine_;
    std::vector<int> degree_;        // per final mode (= level-1 link, or azimuth mode when n == 2)
    std::vector<int> index_in_degree_;
};

// Analysis/synthesis plan binding a basis to one grid's product structure.
class TransformPlan {
  public:
    TransformPlan(std::shared_ptr<const HarmonicBasis> basis,
                  std::span<const quadrature::Rule1D> polar, int azimuth);

    const HarmonicBasis& basis() const { return *basis_; }

    // coeffs[mode] = sum_j w_j values[j] Y_mode(theta_j)
    void analyze(std::span<const double> values, std::vector<double>& coeffs) const;
    // values[j] = sum_mode coeffs[mode] * scale[degree(mode)] * Y_mode(theta_j)
    void synthesize(std::span<const double> coeffs, std::span<const double> degree_scale,
                    std::vector<double>& values) const;
    void synthesize(std::span<const double> coeffs, std::vector<double>& values) const;

  private:
    std::shared_ptr<const HarmonicBasis> basis_;
    std::vector<quadrature::Rule1D> polar_;
    int azimuth_;
    std::vector<std::vector<double>> factor_tables_; // per level: tables x nodes, flattened
    std::vector<std::size_t> factor_stride_;
    std::vector<double> az_table_;                   // [az mode][azimuth node]
};

// Discrete spherical-harmonic transform; requires grid exactness >= 2L.
SpectralField analyze(const BoundaryField& f, int L);

// Grid values of a spectral field (optionally scaled per degree).
std::vector<double> synthesize(const SpectralField& s, const SphereGrid& grid);
std::vector<double> synthesize_scaled(const SpectralField& s, const SphereGrid& grid,
                                      std::span<const double> degree_scale);

// f with its spectral data attached (analysis performed once).
BoundaryField with_spectral(BoundaryField f, int L);

} // namespace extremal
