#pragma once

#include <memory>
#include <span>
#include <vector>

namespace extremal {

class HarmonicBasis;

// Truncated spherical-harmonic coefficient table, degree <= L; the basis
// handle fixes the dimension, cutoff and mode enumeration.
struct SpectralField {
    std::shared_ptr<const HarmonicBasis> basis;
    std::vector<double> coeffs;

    int dim() const;
    int max_degree() const;
    double evaluate(std::span<const double> theta) const;
};

} // namespace extremal
