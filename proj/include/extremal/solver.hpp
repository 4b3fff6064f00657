#pragma once

#include "extremal/functionals.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace extremal {

struct SolverConfig {
    FunctionalConfig functional;
    int max_iterations = 500;
    double tolerance = 1e-8;   // on |f_{k+1} - f_k|_{L^p}
    double damping = 0.8;      // in (0, 1]
    std::uint64_t seed = 0;

    SolverConfig(FunctionalConfig fc) : functional(fc) {}
    void validate() const;
};

struct SolverReport {
    int iterations = 0;
    BoundaryField final_field;
    std::vector<double> q_history;
    double el_residual_final = 0.0;
    std::optional<std::vector<double>> kw_defect; // present at the critical exponent
    bool converged = false;
    std::string diagnostics;
    double largest_radial_node = 0.0;
    double spectral_tail_fraction = 0.0; // energy above degree L/2 in the final field
};

// Positive weight manufactured so that the weighted critical EL equation
// holds for f: K = T((Pf)^{(n+2)/(n-2)}) / f^{n/(n-2)}.
struct KWWeight {
    BoundaryField field; // carries spectral data at the configuration degree
};

// Damped normalized fixed-point iteration for the EL equation
// f^{p-1} = T((Pf)^{q-1}) up to the multiplier Q_p(f)^q.
SolverReport solve_el(const BoundaryField& init, const SolverConfig& cfg);

// sup_j |T((Pf)^{q-1}) - Q^q f^{p-1}| / Q^q for |f|_p = 1 (renormalized internally).
double el_residual(const BoundaryField& f, const FunctionalConfig& cfg);

KWWeight manufacture_weight(const BoundaryField& f, const FunctionalConfig& cfg);

// Kazdan-Warner defect: component i is int <grad K, grad xi_i> f^{2(n-1)/(n-2)} dS.
std::vector<double> kw_defect(const BoundaryField& f, const KWWeight& K);

struct ConcentrationRow {
    double cap_angle;
    double mass_fraction;
};

// Fraction of int f^p dS inside geodesic caps around the mass peak.
std::vector<ConcentrationRow> concentration_profile(const BoundaryField& f, double p,
                                                    std::span<const double> cap_angles);

} // namespace extremal
