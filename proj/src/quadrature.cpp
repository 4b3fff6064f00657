/*
 * Gauss quadrature construction.
 *
 * All rules come from the symmetric tridiagonal Jacobi matrix of the
 * three-term recurrence. Eigenvalues (nodes) are isolated by Sturm
 * bisection and polished with Newton steps on the orthonormal
 * recurrence; weights use the Christoffel identity
 *
 *     w_i = 1 / sum_{k<m} p_k(x_i)^2
 *
 * with p_k orthonormal, which avoids eigenvectors entirely.
 */

#include "extremal/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace extremal::quadrature {

namespace {

struct Recurrence {
    // monic: pi_{k+1} = (x - alpha_k) pi_k - beta_k pi_{k-1}, beta_0 = total mass
    std::vector<double> alpha;
    std::vector<double> beta;
};

// alpha[0..m-1] and beta[0..m]; beta[m] feeds the orthonormal evaluation of p_m
Recurrence jacobi_recurrence(int m, double a, double b) {
    Recurrence rec;
    rec.alpha.resize(m);
    rec.beta.resize(m + 1);
    const double ab = a + b;
    rec.beta[0] = std::pow(2.0, ab + 1.0) *
                  std::exp(std::lgamma(a + 1.0) + std::lgamma(b + 1.0) - std::lgamma(ab + 2.0));
    rec.alpha[0] = (b - a) / (ab + 2.0);
    for (int k = 1; k <= m; ++k) {
        const double t = 2.0 * k + ab;
        if (k < m)
            rec.alpha[k] = (b * b - a * a) / (t * (t + 2.0));
        if (k == 1)
            rec.beta[1] = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
        else
            rec.beta[k] = 4.0 * k * (k + a) * (k + b) * (k + ab) / (t * t * (t + 1.0) * (t - 1.0));
    }
    return rec;
}

// Number of eigenvalues of the Jacobi matrix strictly below x (Sturm count).
int sturm_count(const Recurrence& rec, int m, double x) {
    int count = 0;
    double d = rec.alpha[0] - x;
    if (d < 0.0)
        ++count;
    for (int k = 1; k < m; ++k) {
        if (d == 0.0)
            d = 1e-300;
        d = rec.alpha[k] - x - rec.beta[k] / d;
        if (d < 0.0)
            ++count;
    }
    return count;
}

// Orthonormal values p_0..p_m and derivative of p_m at x.
void orthonormal_eval(const Recurrence& rec, int m, double x, std::vector<double>& p, double& dpm) {
    p.assign(m + 1, 0.0);
    std::vector<double> dp(m + 1, 0.0);
    p[0] = 1.0 / std::sqrt(rec.beta[0]);
    if (m >= 1) {
        const double sb1 = std::sqrt(rec.beta[1]);
        p[1] = (x - rec.alpha[0]) * p[0] / sb1;
        dp[1] = p[0] / sb1;
    }
    for (int k = 1; k < m; ++k) {
        const double sbk1 = std::sqrt(rec.beta[k + 1]);
        p[k + 1] = ((x - rec.alpha[k]) * p[k] - std::sqrt(rec.beta[k]) * p[k - 1]) / sbk1;
        dp[k + 1] = (p[k] + (x - rec.alpha[k]) * dp[k] - std::sqrt(rec.beta[k]) * dp[k - 1]) / sbk1;
    }
    dpm = (m >= 1) ? dp[m] : 0.0;
}

Rule1D golub_welsch(const Recurrence& rec, int m, double lo, double hi) {
    Rule1D rule;
    rule.nodes.resize(m);
    rule.weights.resize(m);
    std::vector<double> p;
    for (int i = 0; i < m; ++i) {
        double a = lo, b = hi;
        for (int it = 0; it < 70; ++it) {
            const double mid = 0.5 * (a + b);
            if (sturm_count(rec, m, mid) <= i)
                a = mid;
            else
                b = mid;
        }
        double x = 0.5 * (a + b);
        for (int it = 0; it < 4; ++it) {
            double dpm = 0.0;
            orthonormal_eval(rec, m, x, p, dpm);
            if (dpm == 0.0)
                break;
            const double xn = x - p[m] / dpm;
            if (xn <= lo || xn >= hi)
                break;
            x = xn;
        }
        double dpm = 0.0;
        orthonormal_eval(rec, m, x, p, dpm);
        double s = 0.0;
        for (int k = 0; k < m; ++k)
            s += p[k] * p[k];
        rule.nodes[i] = x;
        rule.weights[i] = 1.0 / s;
    }
    return rule;
}

} // namespace

Rule1D gauss_jacobi(int m, double a, double b) {
    if (m < 1)
        throw std::domain_error("gauss_jacobi: node count must be >= 1");
    if (a <= -1.0 || b <= -1.0)
        throw std::domain_error("gauss_jacobi: weight exponents must be > -1");
    const Recurrence rec = jacobi_recurrence(m, a, b);
    return golub_welsch(rec, m, -1.0, 1.0);
}

Rule1D gauss_radial(int n, int m) {
    if (n < 2)
        throw std::domain_error("gauss_radial: dimension must be >= 2");
    Rule1D g = gauss_jacobi(m, 0.0, static_cast<double>(n - 1));
    const double scale = std::pow(0.5, n);
    Rule1D rule;
    rule.nodes.resize(m);
    rule.weights.resize(m);
    for (int i = 0; i < m; ++i) {
        rule.nodes[i] = 0.5 * (g.nodes[i] + 1.0);
        rule.weights[i] = scale * g.weights[i];
    }
    return rule;
}

double gegenbauer_mass(double lambda) {
    return std::sqrt(M_PI) * std::exp(std::lgamma(lambda + 0.5) - std::lgamma(lambda + 1.0));
}

void gegenbauer_orthonormal(double lambda, int kmax, double t, std::vector<double>& out) {
    out.resize(kmax + 1);
    out[0] = 1.0 / std::sqrt(gegenbauer_mass(lambda));
    if (kmax == 0)
        return;
    auto beta = [lambda](int k) {
        return k * (k + 2.0 * lambda - 1.0) / (4.0 * (k + lambda) * (k + lambda - 1.0));
    };
    out[1] = t * out[0] / std::sqrt(beta(1));
    for (int k = 1; k < kmax; ++k)
        out[k + 1] = (t * out[k] - std::sqrt(beta(k)) * out[k - 1]) / std::sqrt(beta(k + 1));
}

Rule1D half_interval_signed(int exact_degree, int s) {
    if (exact_degree < 1 || s < 1)
        throw std::domain_error("half_interval_signed: invalid parameters");
    const double a = 0.5 * (s - 1);
    const int m = exact_degree / 2 + 1; // 2m-1 >= exact_degree
    const Rule1D full = gauss_jacobi(m, a, a);
    const Rule1D oddr = gauss_jacobi(m, a, 0.0);

    Rule1D rule;
    rule.nodes.reserve(3 * m);
    rule.weights.reserve(3 * m);
    // int_0^1 q_e w = 1/2 int_{-1}^1 q_e w = 1/4 sum W_i [q(T_i) + q(-T_i)]
    for (int i = 0; i < m; ++i) {
        rule.nodes.push_back(full.nodes[i]);
        rule.weights.push_back(0.25 * full.weights[i]);
        rule.nodes.push_back(-full.nodes[i]);
        rule.weights.push_back(0.25 * full.weights[i]);
    }
    // int_0^1 t h(t^2) w dt = 2^{-a-2} sum V_j h(u_j), u_j = (x_j+1)/2,
    // with h(u) = (q(sqrt u) - q(-sqrt u)) / (2 sqrt u)
    const double odd_scale = std::pow(0.5, a + 3.0);
    for (int j = 0; j < m; ++j) {
        const double u = 0.5 * (oddr.nodes[j] + 1.0);
        const double t = std::sqrt(u);
        const double w = odd_scale * oddr.weights[j] / t;
        rule.nodes.push_back(t);
        rule.weights.push_back(w);
        rule.nodes.push_back(-t);
        rule.weights.push_back(-w);
    }
    return rule;
}

} // namespace extremal::quadrature
