#pragma once

// Long-format table of Weyl spectral curves over an (alpha, beta) grid.

#include <vector>

#include "fracspec/models.hpp"

namespace fracspec {

struct FigureTable {
    std::vector<double> alpha;
    std::vector<double> beta;
    std::vector<double> tau;
    std::vector<double> f;
};

/// tau_j = tau_max j / half for j = -half..half; the sample at -tau is the
/// exact negation of the sample at tau.
inline std::vector<double> symmetric_points(double tau_max, int half) {
    std::vector<double> p;
    p.reserve(2 * half + 1);
    for (int j = -half; j <= half; ++j) p.push_back(tau_max * (static_cast<double>(j) / half));
    return p;
}

/// f(tau) = sigma2 / (mu^2 + 2 mu |tau|^alpha cos(pi alpha/2) + |tau|^{2 alpha})^beta
/// for every (alpha, beta) pair, alpha-major, then beta, then tau ascending.
inline FigureTable figure_data(const std::vector<double>& alphas, const std::vector<double>& betas,
                               double mu, double sigma2, double tau_max, int half) {
    std::vector<Violation> bad;
    if (alphas.empty()) bad.push_back({"alpha", "list is empty"});
    if (betas.empty()) bad.push_back({"beta", "list is empty"});
    if (!(tau_max > 0.0 && std::isfinite(tau_max))) bad.push_back({"tau_max", "must be > 0"});
    if (half < 1) bad.push_back({"half", "must be >= 1"});
    if (!bad.empty()) throw ValidationError(std::move(bad));

    std::vector<ModelSpec> models;
    for (double a : alphas)
        for (double b : betas) models.push_back(ModelSpec::weyl(mu, b, sigma2, a));
    const auto points = symmetric_points(tau_max, half);
    FigureTable t;
    for (const auto& m : models) {
        for (double x : points) {
            t.alpha.push_back(*m.alpha());
            t.beta.push_back(m.beta());
            t.tau.push_back(x);
            t.f.push_back(spectral_modulus(m, x));
        }
    }
    return t;
}

}  // namespace fracspec
