#pragma once

#include "extremal/grid.hpp"

#include <span>
#include <utility>
#include <vector>

namespace extremal {

// Axisymmetric profile about a pole: one (angle, value, weight) row per
// source node, sorted by polar angle with values nonincreasing. The
// (value, weight) multiset is exactly that of the source field, so every
// L^p norm and the distribution function are preserved bit-for-bit.
struct AxisymmetricField {
    std::vector<double> pole;
    std::vector<double> angles;  // polar angle of each profile cell (cap-measure midpoint)
    std::vector<double> values;
    std::vector<double> weights;
    bool nonincreasing = false;
    int dim = 0;
};

// Quadrature measure of {value > t} on the profile.
double distribution_function(const AxisymmetricField& f, double t);

double axis_lp_norm(const AxisymmetricField& f, double p);

// Symmetric decreasing rearrangement about the pole: node values sorted
// descending (ties by node index) are laid out by cumulative weight along
// the polar angle from the pole.
AxisymmetricField symmetric_rearrangement(const BoundaryField& f, std::span<const double> pole);

// Quantile resampling of a profile back onto a grid: each grid node, ordered
// by angle from the pole, takes the profile value at its cumulative-weight
// midpoint. Already-rearranged fields come back unchanged.
BoundaryField resample_axisymmetric(const AxisymmetricField& f, std::shared_ptr<const SphereGrid> grid);

// (|Pf|_{L^q}, |Pf*|_{L^q}) with f* the rearrangement of f about the grid
// pole e_n; the first is never larger up to quadrature tolerance.
std::pair<double, double> extension_comparison(const BoundaryField& f, double q, int L, int radial_nodes);

} // namespace extremal
