/*
 * extremal_trace — C API for the harmonic-extension trace functional library.
 *
 * All objects are opaque handles created and destroyed through this
 * interface; functions return XTR_OK or an error code, with a thread-local
 * detail string available from xtr_last_error(). Output buffers are caller
 * allocated; query the size first where one is needed.
 */

#ifndef EXTREMAL_TRACE_H
#define EXTREMAL_TRACE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum xtr_status {
    XTR_OK = 0,
    XTR_ERR_NULL_POINTER = 1,
    XTR_ERR_INVALID_ARGUMENT = 2,
    XTR_ERR_DOMAIN = 3,
    XTR_ERR_INTERNAL = 4
} xtr_status;

const char* xtr_status_message(xtr_status status);
const char* xtr_last_error(void);

typedef struct xtr_grid xtr_grid;
typedef struct xtr_field xtr_field;
typedef struct xtr_report xtr_report;
typedef struct xtr_expansion xtr_expansion;

/* ---- closed-form constants ---- */

xtr_status xtr_critical_exponent(int n, double* out);
xtr_status xtr_sharp_constant_critical(int n, double* out);
xtr_status xtr_theta_ratio(int n, double* out);
xtr_status xtr_supercritical_constant(int n, double p, double* out);

/* ---- Poisson kernels ---- */

xtr_status xtr_poisson_ball(int n, const double* x, const double* xi, double* out);
xtr_status xtr_poisson_halfspace(int n, const double* x, const double* xi, double* out);

/* ---- quadrature grids on S^{n-1} ---- */

xtr_status xtr_grid_create(int n, int resolution, xtr_grid** out);
void xtr_grid_destroy(xtr_grid* grid);
int xtr_grid_dim(const xtr_grid* grid);
int xtr_grid_exactness(const xtr_grid* grid);
size_t xtr_grid_node_count(const xtr_grid* grid);
xtr_status xtr_grid_nodes(const xtr_grid* grid, double* buffer);   /* count * dim */
xtr_status xtr_grid_weights(const xtr_grid* grid, double* buffer); /* count */

/* ---- boundary fields ---- */

xtr_status xtr_field_constant(const xtr_grid* grid, double value, xtr_field** out);
xtr_status xtr_field_coordinate(const xtr_grid* grid, int i, xtr_field** out);
xtr_status xtr_field_extremal(const xtr_grid* grid, double lambda, const double* zeta, double c,
                              xtr_field** out);
xtr_status xtr_field_from_values(const xtr_grid* grid, const double* values, xtr_field** out);
/* 1 + amplitude * g/max|g| with g band-limited random; strictly positive */
xtr_status xtr_field_random_positive(const xtr_grid* grid, int band_limit, double amplitude,
                                     uint64_t seed, xtr_field** out);
void xtr_field_destroy(xtr_field* field);
size_t xtr_field_size(const xtr_field* field);
xtr_status xtr_field_values(const xtr_field* field, double* buffer);
xtr_status xtr_field_lp_norm(const xtr_field* field, double p, double* out);
xtr_status xtr_field_distribution(const xtr_field* field, double t, double* out);

/* attach / inspect the spherical-harmonic table */
xtr_status xtr_field_analyze(xtr_field* field, int degree);
xtr_status xtr_field_spectral_count(const xtr_field* field, size_t* out);
xtr_status xtr_field_spectral(const xtr_field* field, int* degrees, int* orders, double* coeffs);

/* harmonic extension sampled at (radial Gauss nodes) x (grid nodes);
   radii is radial_nodes long, values is radial_nodes * field_size, radius-major */
xtr_status xtr_extension_sample(const xtr_field* f, int degree, int radial_nodes, double* radii,
                                double* values);

/* ---- trace functional ---- */

xtr_status xtr_q_functional(const xtr_field* f, double p, int degree, int radial_nodes, double* out);
xtr_status xtr_weighted_iso_ratio(const xtr_field* f, const xtr_field* weight, int degree,
                                  int radial_nodes, double* out);

/* ---- Euler-Lagrange solver ---- */

typedef struct xtr_solver_options {
    double p;
    int degree;
    int radial_nodes;
    int max_iterations;
    double tolerance;
    double damping;
} xtr_solver_options;

xtr_status xtr_solver_options_default(xtr_solver_options* opts);
xtr_status xtr_solve_el(const xtr_field* init, const xtr_solver_options* opts, xtr_report** out);
void xtr_report_destroy(xtr_report* report);
int xtr_report_converged(const xtr_report* report);
int xtr_report_iterations(const xtr_report* report);
size_t xtr_report_q_history_size(const xtr_report* report);
xtr_status xtr_report_q_history(const xtr_report* report, double* buffer);
double xtr_report_residual(const xtr_report* report);
double xtr_report_largest_radial_node(const xtr_report* report);
double xtr_report_spectral_tail(const xtr_report* report);
const char* xtr_report_diagnostics(const xtr_report* report);
int xtr_report_has_kw_defect(const xtr_report* report);
xtr_status xtr_report_kw_defect(const xtr_report* report, double* buffer /* dim */);
xtr_status xtr_report_final_field(const xtr_report* report, const xtr_grid* grid, xtr_field** out);

xtr_status xtr_el_residual(const xtr_field* f, double p, int degree, int radial_nodes, double* out);
xtr_status xtr_manufacture_weight(const xtr_field* f, double p, int degree, int radial_nodes,
                                  xtr_field** out);
xtr_status xtr_kw_defect(const xtr_field* f, const xtr_field* weight, double* buffer /* dim */);

/* fraction of int f^p dS in geodesic caps around the mass peak */
xtr_status xtr_concentration(const xtr_field* f, double p, const double* cap_angles, size_t count,
                             double* fractions);

/* ---- rearrangement ---- */

/* profile rows are field_size long; angles/values/weights may each be NULL */
xtr_status xtr_rearrangement_profile(const xtr_field* f, const double* pole, double* angles,
                                     double* values, double* weights);
xtr_status xtr_extension_comparison(const xtr_field* f, double q, int degree, int radial_nodes,
                                    double* lhs, double* rhs);

/* ---- Poisson kernel boundary expansion ---- */

xtr_status xtr_expand_kernel(int n, double H0, const double* h0 /* (n-1)^2 */, int degree,
                             xtr_expansion** out);
void xtr_expansion_destroy(xtr_expansion* e);
size_t xtr_expansion_coeff_count(const xtr_expansion* e);
xtr_status xtr_expansion_coeffs(const xtr_expansion* e, int* degrees, int* orders, double* values);
double xtr_expansion_residual(const xtr_expansion* e);
double xtr_expansion_rhs_norm(const xtr_expansion* e);
xtr_status xtr_expansion_eval(const xtr_expansion* e, const double* theta, double* out);
/* explicit-kernel fit: c0 ~ theta_n, c1 ~ first-order coefficient */
xtr_status xtr_fermi_fit(int n, const double* theta, double* c0, double* c1, double* rms);

/* ---- planar inequality ---- */

xtr_status xtr_carleman_check(double a0, const double* cos_coeffs, const double* sin_coeffs,
                              int order, int radial_nodes, int angular_nodes, double* lhs,
                              double* rhs);
xtr_status xtr_disk_eval(double a0, const double* cos_coeffs, const double* sin_coeffs, int order,
                         double r, double theta, double* out);

/* ---- subcritical expansion experiment ---- */

xtr_status xtr_subcritical_expansion_fit(int n, double p, int degree, int radial_nodes,
                                         const double* eps, size_t count, double* ratios_or_null,
                                         double* fitted, double* predicted);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* EXTREMAL_TRACE_H */
