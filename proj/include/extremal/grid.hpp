#pragma once

#include "extremal/quadrature.hpp"
#include "extremal/spectral.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

namespace extremal {

class HarmonicBasis;
class TransformPlan;

// Volume of the unit ball in R^n and area of the unit sphere S^{n-1}.
double ball_volume(int n);
double sphere_area(int n);

// Quadrature nodes and weights on S^{n-1}, built as a tensor product of
// Gauss-Gegenbauer rules along the polar-angle chain and a uniform azimuth
// rule. Node order is row-major in (polar indices..., azimuth index).
// Immutable after construction; fields reference a grid by identity.
class SphereGrid : public std::enable_shared_from_this<SphereGrid> {
  public:
    static std::shared_ptr<const SphereGrid> build(int n, int resolution);

    int dim() const { return dim_; }
    int resolution() const { return resolution_; }
    int exactness_degree() const { return exactness_; }
    std::size_t node_count() const { return weights_.size(); }
    std::span<const double> node(std::size_t j) const { return {nodes_.data() + j * dim_, static_cast<std::size_t>(dim_)}; }
    std::span<const double> weights() const { return weights_; }
    std::span<const double> flat_nodes() const { return nodes_; }

    // product structure (used by the spherical-harmonic transforms)
    int polar_levels() const { return dim_ - 2; }
    const quadrature::Rule1D& polar_rule(int level) const { return polar_[level]; }
    int azimuth_count() const { return azimuth_; }

    std::shared_ptr<const TransformPlan> plan(int max_degree) const;

    double integrate(std::span<const double> values) const;

  private:
    SphereGrid() = default;
    void self_test() const;

    int dim_ = 0;
    int resolution_ = 0;
    int exactness_ = 0;
    int azimuth_ = 0;
    std::vector<quadrature::Rule1D> polar_;
    std::vector<double> nodes_;
    std::vector<double> weights_;
    mutable std::mutex plan_mutex_;
    mutable std::map<int, std::shared_ptr<const TransformPlan>> plans_;
};

// Gauss rule for the radial factor: sum_k rho_k phi(r_k) ~ int_0^1 phi r^{n-1} dr.
class RadialRule {
  public:
    static std::shared_ptr<const RadialRule> build(int n, int m);

    int dim() const { return dim_; }
    std::size_t node_count() const { return rule_.nodes.size(); }
    std::span<const double> nodes() const { return rule_.nodes; }
    std::span<const double> weights() const { return rule_.weights; }
    double largest_node() const { return rule_.nodes.back(); }

  private:
    RadialRule() = default;
    int dim_ = 0;
    quadrature::Rule1D rule_;
};

// Real-valued function on the boundary sphere: values per grid node plus an
// optional truncated spherical-harmonic representation.
struct BoundaryField {
    std::shared_ptr<const SphereGrid> grid;
    std::vector<double> values;
    std::optional<SpectralField> spectral;

    BoundaryField() = default;
    BoundaryField(std::shared_ptr<const SphereGrid> g, std::vector<double> v);
};

BoundaryField constant_field(std::shared_ptr<const SphereGrid> grid, double value);
BoundaryField coordinate_field(std::shared_ptr<const SphereGrid> grid, int i); // f(xi) = xi_i, 1-based i

double lp_norm_boundary(const BoundaryField& f, double p);

// Quadrature measure of {xi : f(xi) > t}.
double distribution_function(const BoundaryField& f, double t);

// int <grad_S K, grad_S xi_i> f^{2(n-1)/(n-2)} dS, evaluated spectrally from
// K's harmonic representation. Requires grid exactness >= 2(L+1).
double tangential_gradient_pairing(const BoundaryField& K, const BoundaryField& f, int i);

} // namespace extremal
