#pragma once

// Expectations over W ~ Gamma(shape, rate), density
//   rate^shape w^{shape-1} e^{-rate w} / Gamma(shape).

#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>
#include <vector>

#include "fracspec/detail/quadrature.hpp"
#include "fracspec/error.hpp"

namespace fracspec {

/// Gauss rule for the Gamma(shape, rate) law; weights sum to one.
struct QuadratureRule {
    double shape = 1.0;
    double rate = 1.0;
    std::vector<double> nodes;
    std::vector<double> weights;

    template <class G>
    double expect(G&& g) const {
        double sum = 0.0;
        for (std::size_t k = 0; k < nodes.size(); ++k) sum += weights[k] * g(nodes[k]);
        return sum;
    }
};

/// Generalized Gauss-Laguerre rule by Golub-Welsch: eigenvalues of the Jacobi
/// matrix of the weight x^{shape-1} e^{-x}, nodes rescaled by 1/rate.
inline QuadratureRule gamma_quadrature(double shape, double rate, int node_count = 96) {
    std::vector<Violation> bad;
    if (!(shape > 0.0 && std::isfinite(shape))) bad.push_back({"shape", "must be > 0"});
    if (!(rate > 0.0 && std::isfinite(rate))) bad.push_back({"rate", "must be > 0"});
    if (node_count < 8) bad.push_back({"node_count", "must be >= 8"});
    if (!bad.empty()) throw ValidationError(std::move(bad));

    const double a = shape - 1.0;
    Eigen::VectorXd diag(node_count), sub(node_count - 1);
    for (int k = 0; k < node_count; ++k) diag[k] = 2.0 * k + a + 1.0;
    for (int k = 1; k < node_count; ++k) sub[k - 1] = std::sqrt(k * (k + a));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
        throw ConvergenceError("Gauss-Laguerre eigenvalue problem (" + std::to_string(node_count) +
                                   " nodes)",
                               0.0, 0.0, 0.0);
    }

    QuadratureRule rule;
    rule.shape = shape;
    rule.rate = rate;
    rule.nodes.resize(node_count);
    rule.weights.resize(node_count);
    double total = 0.0;
    for (int k = 0; k < node_count; ++k) {
        const double v = solver.eigenvectors()(0, k);
        rule.nodes[k] = solver.eigenvalues()[k] / rate;
        rule.weights[k] = v * v;
        total += v * v;
    }
    for (double& w : rule.weights) w /= total;
    return rule;
}

/// E[g(W)] by adaptive Gauss-Kronrod in s = log(rate W), where the gamma
/// weight becomes exp(shape s - e^s) and integrands with a w^{-p} singularity
/// or a cusp at small w are resolved. `singular_power` is p, the rate at which
/// g may grow as w -> 0; `w_min` restricts the expectation to W >= w_min.
template <class G>
double gamma_expectation(G&& g, double shape, double rate, double singular_power = 0.0,
                         double rel_tol = 1e-12, double w_min = 0.0) {
    if (!(shape > singular_power)) {
        throw DivergentVarianceError("gamma expectation diverges: shape " + std::to_string(shape) +
                                     " <= singular power " + std::to_string(singular_power));
    }
    const double log_norm = std::lgamma(shape);
    auto integrand = [&](double s) {
        const double x = std::exp(s);
        const double weight = std::exp(shape * s - x - log_norm);
        return weight == 0.0 ? 0.0 : weight * g(x / rate);
    };
    const double peak = std::log(shape);
    // weight relative to the peak: exp(shape (s - peak) - (e^s - shape))
    double s_hi = std::max(peak, 0.0) + 1.0;
    while (shape * (s_hi - peak) - (std::exp(s_hi) - shape) > -70.0) s_hi += 0.5;
    double s_lo = peak - 70.0 / (shape - singular_power);
    if (w_min > 0.0) s_lo = std::max(s_lo, std::log(rate * w_min));
    if (s_lo >= s_hi) return 0.0;

    double total = 0.0;
    const double mid = std::clamp(peak, s_lo, s_hi);
    if (mid > s_lo) {
        total += detail::adaptive(integrand, s_lo, mid, rel_tol, 0.0, 18, "gamma expectation").value;
    }
    if (s_hi > mid) {
        total += detail::adaptive(integrand, mid, s_hi, rel_tol, 0.0, 18, "gamma expectation").value;
    }
    return total;
}

}  // namespace fracspec
