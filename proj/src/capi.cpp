#include "extremal_trace.h"

#include "extremal/expansion.hpp"
#include "extremal/functionals.hpp"
#include "extremal/kernels.hpp"
#include "extremal/random_fields.hpp"
#include "extremal/rearrange.hpp"
#include "extremal/solver.hpp"

#include <cstring>
#include <stdexcept>
#include <string>

using namespace extremal;

struct xtr_grid {
    std::shared_ptr<const SphereGrid> grid;
};

struct xtr_field {
    BoundaryField field;
};

struct xtr_report {
    SolverReport report;
};

struct xtr_expansion {
    HemisphereField field;
};

namespace {

thread_local std::string g_last_error;

xtr_status fail(xtr_status code, const char* what) {
    g_last_error = what;
    return code;
}

// Maps C++ exceptions onto status codes at the API boundary.
template <typename Fn>
xtr_status guarded(Fn&& fn) {
    try {
        fn();
        return XTR_OK;
    } catch (const std::domain_error& e) {
        return fail(XTR_ERR_DOMAIN, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(XTR_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(XTR_ERR_INTERNAL, e.what());
    }
}

} // namespace

extern "C" {

const char* xtr_status_message(xtr_status status) {
    switch (status) {
    case XTR_OK:
        return "ok";
    case XTR_ERR_NULL_POINTER:
        return "null pointer argument";
    case XTR_ERR_INVALID_ARGUMENT:
        return "invalid argument";
    case XTR_ERR_DOMAIN:
        return "domain error";
    case XTR_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

const char* xtr_last_error(void) {
    return g_last_error.c_str();
}

/* ---- constants ---- */

xtr_status xtr_critical_exponent(int n, double* out) {
    if (!out)
        return fail(XTR_ERR_NULL_POINTER, "out");
    return guarded([&] { *out = critical_exponent(n); });
}

xtr_status xtr_sharp_constant_critical(int n, double* out) {
    if (!out)
        return fail(XTR_ERR_NULL_POINTER, "out");
    return guarded([&] { *out = sharp_constant_critical(n); });
}

xtr_status xtr_theta_ratio(int n, double* out) {
    if (!out)
        return fail(XTR_ERR_NULL_POINTER, "out");
    return guarded([&] { *out = theta_ratio(n); });
}

xtr_status xtr_supercritical_constant(int n, double p, double* out) {
    if (!out)
        return fail(XTR_ERR_NULL_POINTER, "out");
    return guarded([&] { *out = supercritical_constant(n, p); });
}

/* ---- kernels ---- */

xtr_status xtr_poisson_ball(int n, const double* x, const double* xi, double* out) {
    if (!x || !xi || !out)
        return fail(XTR_ERR_NULL_POINTER, "x/xi/out");
    return guarded([&] {
        *out = poisson_kernel_ball(n, {x, static_cast<std::size_t>(n)},
                                   {xi, static_cast<std::size_t>(n)});
    });
}

xtr_status xtr_poisson_halfspace(int n, const double* x, const double* xi, double* out) {
    if (!x || !xi || !out)
        return fail(XTR_ERR_NULL_POINTER, "x/xi/out");
    return guarded([&] {
        *out = poisson_kernel_halfspace(n, {x, static_cast<std::size_t>(n)},
                                        {xi, static_cast<std::size_t>(n - 1)});
    });
}

/* ---- grids ---- */

xtr_status xtr_grid_create(int n, int resolution, xtr_grid** out) {
    if (!out)
        return fail(XTR_ERR_NULL_POINTER, "out");
    return guarded([&] { *out = new xtr_grid{SphereGrid::build(n, resolution)}; });
}

void xtr_grid_destroy(xtr_grid* grid) {
    delete grid;
}

int xtr_grid_dim(const xtr_grid* grid) {
    return grid ? grid->grid->dim() : 0;
}

int xtr_grid_exactness(const xtr_grid* grid) {
    return grid ? grid->grid->exactness_degree() : 0;
}

size_t xtr_grid_node_count(const xtr_grid* grid) {
    return grid ? grid->grid->node_count() : 0;
}

xtr_status xtr_grid_nodes(const xtr_grid* grid, double* buffer) {
    if (!grid || !buffer)
        return fail(XTR_ERR_NULL_POINTER, "grid/buffer");
    const auto flat = grid->grid->flat_nodes();
    std::memcpy(buffer, flat.data(), flat.size() * sizeof(double));
    return XTR_OK;
}

xtr_status xtr_grid_weights(const xtr_grid* grid, double* buffer) {
    if (!grid || !buffer)
        return fail(XTR_ERR_NULL_POINTER, "grid/buffer");
    const auto w = grid->grid->weights();
    std::memcpy(buffer, w.data(), w.size() * sizeof(double));
    return XTR_OK;
}

/* ---- fields ---- */

xtr_status xtr_field_constant(const xtr_grid* grid, double value, xtr_field** out) {
    if (!grid || !out)
        return fail(XTR_ERR_NULL_POINTER, "grid/out");
    return guarded([&] { *out = new xtr_field{constant_field(grid->grid, value)}; });
}

xtr_status xtr_field_coordinate(const xtr_grid* grid, int i, xtr_field** out) {
    if (!grid || !out)
        return fail(XTR_ERR_NULL_POINTER, "grid/out");
    return guarded([&] { *out = new xtr_field{coordinate_field(grid->grid, i)}; });
}

xtr_status xtr_field_extremal(const xtr_grid* grid, double lambda, const double* zeta, double c,
                              xtr_field** out) {
    if (!grid || !zeta || !out)
        return fail(XTR_ERR_NULL_POINTER, "grid/zeta/out");
    return guarded([&] {
        const std::span<const double> z{zeta, static_cast<std::size_t>(grid->grid->dim())};
        *out = new xtr_field{extremal_family(grid->grid, lambda, z, c)};
    });
}

xtr_status xtr_field_from_values(const xtr_grid* grid, const double* values, xtr_field** out) {
    if (!grid || !values || !out)
        return fail(XTR_ERR_NULL_POINTER, "grid/values/out");
    return guarded([&] {
        std::vector<double> v(values, values + grid->grid->node_count());
        *out = new xtr_field{BoundaryField(grid->grid, std::move(v))};
    });
}

xtr_status xtr_field_random_positive(const xtr_grid* grid, int band_limit, double amplitude,
                                     uint64_t seed, xtr_field** out) {
    if (!grid || !out)
        return fail(XTR_ERR_NULL_POINTER, "grid/out");
    return guarded([&] {
        Rng rng(seed);
        *out = new xtr_field{random_positive_field(grid->grid, band_limit, amplitude, rng)};
    });
}

void xtr_field_destroy(xtr_field* field) {
    delete field;
}

size_t xtr_field_size(const xtr_field* field) {
    return field ? field->field.values.size() : 0;
}

xtr_status xtr_field_values(const xtr_field* field, double* buffer) {
    if (!field || !buffer)
        return fail(XTR_ERR_NULL_POINTER, "field/buffer");
    std::memcpy(buffer, field->field.values.data(), field->field.values.size() * sizeof(double));
    return XTR_OK;
}

xtr_status xtr_field_lp_norm(const xtr_field* field, double p, double* out) {
    if (!field || !out)
        return fail(XTR_ERR_NULL_POINTER, "field/out");
    return guarded([&] { *out = lp_norm_boundary(field->field, p); });
}

xtr_status xtr_field_distribution(const xtr_field* field, double t, double* out) {
    if (!field || !out)
        return fail(XTR_ERR_NULL_POINTER, "field/out");
    return guarded([&] { *out = distribution_function(field->field, t); });
}

xtr_status xtr_field_analyze(xtr_field* field, int degree) {
    if (!field)
        return fail(XTR_ERR_NULL_POINTER, "field");
    return guarded([&] { field->field.spectral = analyze(field->field, degree); });
}

xtr_status xtr_field_spectral_count(const xtr_field* field, size_t* out) {
    if (!field || !out)
        return fail(XTR_ERR_NULL_POINTER, "field/out");
    if (!field->field.spectral)
        return fail(XTR_ERR_INVALID_ARGUMENT, "field has no spectral data");
    *out = field->field.spectral->coeffs.size();
    return XTR_OK;
}

xtr_status xtr_field_spectral(const xtr_field* field, int* degrees, int* orders, double* coeffs) {
    if (!field)
        return fail(XTR_ERR_NULL_POINTER, "field");
    if (!field->field.spectral)
        return fail(XTR_ERR_INVALID_ARGUMENT, "field has no spectral data");
    const SpectralField& s = *field->field.spectral;
    for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
        if (degrees)
            degrees[i] = s.basis->degree(i);
        if (orders)
            orders[i] = (s.dim() == 3) ? s.basis->azimuth_order(i) : s.basis->index_in_degree(i);
        if (coeffs)
            coeffs[i] = s.coeffs[i];
    }
    return XTR_OK;
}

xtr_status xtr_extension_sample(const xtr_field* f, int degree, int radial_nodes, double* radii,
                                double* values) {
    if (!f || !radii || !values)
        return fail(XTR_ERR_NULL_POINTER, "f/radii/values");
    return guarded([&] {
        auto rule = RadialRule::build(f->field.grid->dim(), radial_nodes);
        const BallSample u = harmonic_extension(analyze(f->field, degree), rule, f->field.grid);
        std::memcpy(radii, rule->nodes().data(), rule->node_count() * sizeof(double));
        std::memcpy(values, u.values.data(), u.values.size() * sizeof(double));
    });
}

/* ---- functionals ---- */

xtr_status xtr_q_functional(const xtr_field* f, double p, int degree, int radial_nodes, double* out) {
    if (!f || !out)
        return fail(XTR_ERR_NULL_POINTER, "f/out");
    return guarded([&] {
        const FunctionalConfig cfg(f->field.grid->dim(), p, degree, radial_nodes);
        *out = q_functional(f->field, cfg);
    });
}

xtr_status xtr_weighted_iso_ratio(const xtr_field* f, const xtr_field* weight, int degree,
                                  int radial_nodes, double* out) {
    if (!f || !weight || !out)
        return fail(XTR_ERR_NULL_POINTER, "f/weight/out");
    return guarded([&] {
        const int n = f->field.grid->dim();
        const FunctionalConfig cfg(n, critical_exponent(n), degree, radial_nodes);
        *out = weighted_iso_ratio(f->field, weight->field, cfg);
    });
}

/* ---- solver ---- */

xtr_status xtr_solver_options_default(xtr_solver_options* opts) {
    if (!opts)
        return fail(XTR_ERR_NULL_POINTER, "opts");
    opts->p = 4.0;
    opts->degree = 20;
    opts->radial_nodes = 20;
    opts->max_iterations = 500;
    opts->tolerance = 1e-8;
    opts->damping = 0.8;
    return XTR_OK;
}

xtr_status xtr_solve_el(const xtr_field* init, const xtr_solver_options* opts, xtr_report** out) {
    if (!init || !opts || !out)
        return fail(XTR_ERR_NULL_POINTER, "init/opts/out");
    return guarded([&] {
        SolverConfig cfg(FunctionalConfig(init->field.grid->dim(), opts->p, opts->degree,
                                          opts->radial_nodes));
        cfg.max_iterations = opts->max_iterations;
        cfg.tolerance = opts->tolerance;
        cfg.damping = opts->damping;
        *out = new xtr_report{solve_el(init->field, cfg)};
    });
}

void xtr_report_destroy(xtr_report* report) {
    delete report;
}

int xtr_report_converged(const xtr_report* report) {
    return report && report->report.converged ? 1 : 0;
}

int xtr_report_iterations(const xtr_report* report) {
    return report ? report->report.iterations : 0;
}

size_t xtr_report_q_history_size(const xtr_report* report) {
    return report ? report->report.q_history.size() : 0;
}

xtr_status xtr_report_q_history(const xtr_report* report, double* buffer) {
    if (!report || !buffer)
        return fail(XTR_ERR_NULL_POINTER, "report/buffer");
    std::memcpy(buffer, report->report.q_history.data(),
                report->report.q_history.size() * sizeof(double));
    return XTR_OK;
}

double xtr_report_residual(const xtr_report* report) {
    return report ? report->report.el_residual_final : 0.0;
}

double xtr_report_largest_radial_node(const xtr_report* report) {
    return report ? report->report.largest_radial_node : 0.0;
}

double xtr_report_spectral_tail(const xtr_report* report) {
    return report ? report->report.spectral_tail_fraction : 0.0;
}

const char* xtr_report_diagnostics(const xtr_report* report) {
    return report ? report->report.diagnostics.c_str() : "";
}

int xtr_report_has_kw_defect(const xtr_report* report) {
    return report && report->report.kw_defect ? 1 : 0;
}

xtr_status xtr_report_kw_defect(const xtr_report* report, double* buffer) {
    if (!report || !buffer)
        return fail(XTR_ERR_NULL_POINTER, "report/buffer");
    if (!report->report.kw_defect)
        return fail(XTR_ERR_INVALID_ARGUMENT, "report has no KW defect (non-critical exponent)");
    const auto& d = *report->report.kw_defect;
    std::memcpy(buffer, d.data(), d.size() * sizeof(double));
    return XTR_OK;
}

xtr_status xtr_report_final_field(const xtr_report* report, const xtr_grid* grid, xtr_field** out) {
    if (!report || !grid || !out)
        return fail(XTR_ERR_NULL_POINTER, "report/grid/out");
    if (report->report.final_field.grid.get() != grid->grid.get())
        return fail(XTR_ERR_INVALID_ARGUMENT, "grid does not match the report's field");
    return guarded([&] {
        *out = new xtr_field{BoundaryField(grid->grid, report->report.final_field.values)};
    });
}

xtr_status xtr_el_residual(const xtr_field* f, double p, int degree, int radial_nodes, double* out) {
    if (!f || !out)
        return fail(XTR_ERR_NULL_POINTER, "f/out");
    return guarded([&] {
        const FunctionalConfig cfg(f->field.grid->dim(), p, degree, radial_nodes);
        *out = el_residual(f->field, cfg);
    });
}

xtr_status xtr_manufacture_weight(const xtr_field* f, double p, int degree, int radial_nodes,
                                  xtr_field** out) {
    if (!f || !out)
        return fail(XTR_ERR_NULL_POINTER, "f/out");
    return guarded([&] {
        const FunctionalConfig cfg(f->field.grid->dim(), p, degree, radial_nodes);
        KWWeight K = manufacture_weight(f->field, cfg);
        *out = new xtr_field{std::move(K.field)};
    });
}

xtr_status xtr_kw_defect(const xtr_field* f, const xtr_field* weight, double* buffer) {
    if (!f || !weight || !buffer)
        return fail(XTR_ERR_NULL_POINTER, "f/weight/buffer");
    return guarded([&] {
        const auto d = kw_defect(f->field, KWWeight{weight->field});
        std::memcpy(buffer, d.data(), d.size() * sizeof(double));
    });
}

xtr_status xtr_concentration(const xtr_field* f, double p, const double* cap_angles, size_t count,
                             double* fractions) {
    if (!f || !cap_angles || !fractions)
        return fail(XTR_ERR_NULL_POINTER, "f/cap_angles/fractions");
    return guarded([&] {
        const auto rows = concentration_profile(f->field, p, {cap_angles, count});
        for (std::size_t i = 0; i < rows.size(); ++i)
            fractions[i] = rows[i].mass_fraction;
    });
}

/* ---- rearrangement ---- */

xtr_status xtr_rearrangement_profile(const xtr_field* f, const double* pole, double* angles,
                                     double* values, double* weights) {
    if (!f || !pole)
        return fail(XTR_ERR_NULL_POINTER, "f/pole");
    return guarded([&] {
        const std::span<const double> ps{pole, static_cast<std::size_t>(f->field.grid->dim())};
        const AxisymmetricField star = symmetric_rearrangement(f->field, ps);
        const std::size_t m = star.values.size();
        if (angles)
            std::memcpy(angles, star.angles.data(), m * sizeof(double));
        if (values)
            std::memcpy(values, star.values.data(), m * sizeof(double));
        if (weights)
            std::memcpy(weights, star.weights.data(), m * sizeof(double));
    });
}

xtr_status xtr_extension_comparison(const xtr_field* f, double q, int degree, int radial_nodes,
                                    double* lhs, double* rhs) {
    if (!f || !lhs || !rhs)
        return fail(XTR_ERR_NULL_POINTER, "f/lhs/rhs");
    return guarded([&] {
        const auto [a, b] = extension_comparison(f->field, q, degree, radial_nodes);
        *lhs = a;
        *rhs = b;
    });
}

/* ---- kernel expansion ---- */

xtr_status xtr_expand_kernel(int n, double H0, const double* h0, int degree, xtr_expansion** out) {
    if (!h0 || !out)
        return fail(XTR_ERR_NULL_POINTER, "h0/out");
    return guarded([&] {
        std::vector<double> h(h0, h0 + static_cast<std::size_t>(n - 1) * (n - 1));
        const GeometryData geom(n, H0, std::move(h));
        *out = new xtr_expansion{solve_a1(geom, degree)};
    });
}

void xtr_expansion_destroy(xtr_expansion* e) {
    delete e;
}

size_t xtr_expansion_coeff_count(const xtr_expansion* e) {
    return e ? e->field.spec.coeffs.size() : 0;
}

xtr_status xtr_expansion_coeffs(const xtr_expansion* e, int* degrees, int* orders, double* values) {
    if (!e)
        return fail(XTR_ERR_NULL_POINTER, "e");
    const SpectralField& s = e->field.spec;
    for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
        if (degrees)
            degrees[i] = s.basis->degree(i);
        if (orders)
            orders[i] = (s.dim() == 3) ? s.basis->azimuth_order(i) : s.basis->index_in_degree(i);
        if (values)
            values[i] = s.coeffs[i];
    }
    return XTR_OK;
}

double xtr_expansion_residual(const xtr_expansion* e) {
    return e ? e->field.residual_l2 : 0.0;
}

double xtr_expansion_rhs_norm(const xtr_expansion* e) {
    return e ? e->field.rhs_l2 : 0.0;
}

xtr_status xtr_expansion_eval(const xtr_expansion* e, const double* theta, double* out) {
    if (!e || !theta || !out)
        return fail(XTR_ERR_NULL_POINTER, "e/theta/out");
    return guarded([&] {
        *out = e->field.evaluate({theta, static_cast<std::size_t>(e->field.spec.dim())});
    });
}

xtr_status xtr_fermi_fit(int n, const double* theta, double* c0, double* c1, double* rms) {
    if (!theta || !c0 || !c1)
        return fail(XTR_ERR_NULL_POINTER, "theta/c0/c1");
    return guarded([&] {
        const FermiFit fit = ball_kernel_fermi_oracle(n, {theta, static_cast<std::size_t>(n)});
        *c0 = fit.c0;
        *c1 = fit.c1;
        if (rms)
            *rms = fit.rms_residual;
    });
}

/* ---- planar inequality ---- */

namespace {

CarlemanSeries make_series(double a0, const double* cos_coeffs, const double* sin_coeffs, int order) {
    CarlemanSeries u;
    u.a0 = a0;
    if (order > 0) {
        if (cos_coeffs)
            u.cos_coeffs.assign(cos_coeffs, cos_coeffs + order);
        if (sin_coeffs)
            u.sin_coeffs.assign(sin_coeffs, sin_coeffs + order);
    }
    return u;
}

} // namespace

xtr_status xtr_carleman_check(double a0, const double* cos_coeffs, const double* sin_coeffs,
                              int order, int radial_nodes, int angular_nodes, double* lhs,
                              double* rhs) {
    if (!lhs || !rhs)
        return fail(XTR_ERR_NULL_POINTER, "lhs/rhs");
    return guarded([&] {
        const CarlemanSeries u = make_series(a0, cos_coeffs, sin_coeffs, order);
        const auto [a, b] = carleman_check(u, radial_nodes, angular_nodes);
        *lhs = a;
        *rhs = b;
    });
}

xtr_status xtr_disk_eval(double a0, const double* cos_coeffs, const double* sin_coeffs, int order,
                         double r, double theta, double* out) {
    if (!out)
        return fail(XTR_ERR_NULL_POINTER, "out");
    return guarded([&] {
        const CarlemanSeries u = make_series(a0, cos_coeffs, sin_coeffs, order);
        *out = disk_harmonic_eval(u, {r, theta});
    });
}

/* ---- subcritical expansion ---- */

xtr_status xtr_subcritical_expansion_fit(int n, double p, int degree, int radial_nodes,
                                         const double* eps, size_t count, double* ratios_or_null,
                                         double* fitted, double* predicted) {
    if (!eps || !fitted || !predicted)
        return fail(XTR_ERR_NULL_POINTER, "eps/fitted/predicted");
    return guarded([&] {
        const ExpansionFit fit = subcritical_expansion_fit(n, p, degree, radial_nodes, {eps, count});
        *fitted = fit.fitted;
        *predicted = fit.predicted;
        if (ratios_or_null)
            std::memcpy(ratios_or_null, fit.ratios.data(), fit.ratios.size() * sizeof(double));
    });
}

} // extern "C"
