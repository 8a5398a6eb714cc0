#pragma once

// The three equation families as validated parameter sets, their spectral
// densities, and the grid/curve containers shared by the numeric modules.
//
//   Weyl fractional  f(tau) = s2 / (mu^2 + 2 |tau|^a mu cos(pi a/2) + |tau|^{2a})^b
//   even order 2n    f(tau) = s2 / (mu + tau^{2n})^{2b}
//   odd order 2n+1   f(tau) = s2 / (mu - i kappa tau^{2n+1})^{2b}   (principal branch)

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "fracspec/error.hpp"

namespace fracspec {

enum class Family { WeylFractional, EvenOrder, OddOrder };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::WeylFractional: return "weyl";
        case Family::EvenOrder: return "even";
        case Family::OddOrder: return "odd";
    }
    return "unknown";
}

inline std::optional<Family> parse_family(const std::string& name) {
    if (name == "weyl" || name == "WeylFractional") return Family::WeylFractional;
    if (name == "even" || name == "EvenOrder") return Family::EvenOrder;
    if (name == "odd" || name == "OddOrder") return Family::OddOrder;
    return std::nullopt;
}

/// Unvalidated parameters as they arrive from a caller or the command line.
struct RawModel {
    std::optional<std::string> family;
    std::optional<double> mu;
    std::optional<double> beta;
    std::optional<double> sigma2;
    std::optional<double> alpha;
    std::optional<double> n;
    std::optional<double> kappa;
};

class ModelSpec;
ModelSpec validate_model(const RawModel& raw);

/// A validated model. Construct through validate_model or the named factories.
class ModelSpec {
public:
    static ModelSpec weyl(double mu, double beta, double sigma2, double alpha) {
        return validate_model({"weyl", mu, beta, sigma2, alpha, std::nullopt, std::nullopt});
    }
    static ModelSpec even(double mu, double beta, double sigma2, int n) {
        return validate_model({"even", mu, beta, sigma2, std::nullopt, n, std::nullopt});
    }
    static ModelSpec odd(double mu, double beta, double sigma2, int n, int kappa) {
        return validate_model({"odd", mu, beta, sigma2, std::nullopt, n, kappa});
    }

    Family family() const noexcept { return family_; }
    double mu() const noexcept { return mu_; }
    double beta() const noexcept { return beta_; }
    double sigma2() const noexcept { return sigma2_; }
    std::optional<double> alpha() const noexcept { return alpha_; }
    std::optional<int> n() const noexcept { return n_; }
    std::optional<int> kappa() const noexcept { return kappa_; }

    bool is_real() const noexcept { return family_ != Family::OddOrder; }

    /// Spatial derivative order of the kernel family: 2n or 2n+1 (0 for Weyl).
    int kernel_order() const noexcept {
        if (family_ == Family::EvenOrder) return 2 * *n_;
        if (family_ == Family::OddOrder) return 2 * *n_ + 1;
        return 0;
    }

    /// f(tau) ~ C |tau|^{-exponent} as |tau| -> infinity.
    double decay_exponent() const noexcept {
        switch (family_) {
            case Family::WeylFractional: return 2.0 * *alpha_ * beta_;
            case Family::EvenOrder: return 4.0 * *n_ * beta_;
            case Family::OddOrder: return 2.0 * beta_ * (2 * *n_ + 1);
        }
        return 0.0;
    }

    /// Cov(0) is finite exactly when f is integrable.
    bool has_finite_variance() const noexcept { return decay_exponent() > 1.0; }

    /// f(0) = sigma2 / mu^{2 beta} for every family.
    double spectral_peak() const noexcept { return sigma2_ * std::pow(mu_, -2.0 * beta_); }

    RawModel to_raw() const {
        RawModel r;
        r.family = family_name(family_);
        r.mu = mu_;
        r.beta = beta_;
        r.sigma2 = sigma2_;
        if (alpha_) r.alpha = *alpha_;
        if (n_) r.n = *n_;
        if (kappa_) r.kappa = *kappa_;
        return r;
    }

private:
    friend ModelSpec validate_model(const RawModel& raw);
    ModelSpec() = default;

    Family family_ = Family::WeylFractional;
    double mu_ = 1.0;
    double beta_ = 1.0;
    double sigma2_ = 1.0;
    std::optional<double> alpha_;
    std::optional<int> n_;
    std::optional<int> kappa_;
};

/// Checks every constraint and reports all violations together.
inline ModelSpec validate_model(const RawModel& raw) {
    std::vector<Violation> bad;
    auto positive = [&](const char* field, const std::optional<double>& v) {
        if (!v) {
            bad.push_back({field, "required"});
        } else if (!(std::isfinite(*v) && *v > 0.0)) {
            bad.push_back({field, "must be a finite number > 0"});
        }
    };

    std::optional<Family> family;
    if (!raw.family) {
        bad.push_back({"family", "required (weyl, even or odd)"});
    } else {
        family = parse_family(*raw.family);
        if (!family) bad.push_back({"family", "unknown family '" + *raw.family + "' (weyl, even or odd)"});
    }
    positive("mu", raw.mu);
    positive("beta", raw.beta);
    positive("sigma2", raw.sigma2);

    if (family == Family::WeylFractional) {
        if (!raw.alpha) {
            bad.push_back({"alpha", "required for the weyl family"});
        } else if (!(*raw.alpha > 0.0 && *raw.alpha <= 1.0)) {
            bad.push_back({"alpha", "alpha out of (0,1]"});
        }
        if (raw.n) bad.push_back({"n", "not a parameter of the weyl family"});
        if (raw.kappa) bad.push_back({"kappa", "not a parameter of the weyl family"});
    } else if (family) {
        if (!raw.n) {
            bad.push_back({"n", "n >= 1 required"});
        } else if (!(*raw.n >= 1.0 && std::floor(*raw.n) == *raw.n && *raw.n <= 1000.0)) {
            bad.push_back({"n", "n >= 1 required (integer)"});
        }
        if (raw.alpha) bad.push_back({"alpha", "not a parameter of the " + family_name(*family) + " family"});
        if (family == Family::OddOrder) {
            if (!raw.kappa) {
                bad.push_back({"kappa", "required for the odd family (-1 or +1)"});
            } else if (*raw.kappa != 1.0 && *raw.kappa != -1.0) {
                bad.push_back({"kappa", "kappa must be -1 or +1"});
            }
        } else if (raw.kappa) {
            bad.push_back({"kappa", "not a parameter of the even family"});
        }
    }
    if (!bad.empty()) throw ValidationError(std::move(bad));

    ModelSpec m;
    m.family_ = *family;
    m.mu_ = *raw.mu;
    m.beta_ = *raw.beta;
    m.sigma2_ = *raw.sigma2;
    if (m.family_ == Family::WeylFractional) {
        m.alpha_ = *raw.alpha;
    } else {
        m.n_ = static_cast<int>(*raw.n);
        if (m.family_ == Family::OddOrder) m.kappa_ = static_cast<int>(*raw.kappa);
    }
    return m;
}

/// Modulus |f(tau)|; equals f(tau) for the real families.
inline double spectral_modulus(const ModelSpec& m, double tau) {
    const double a = std::abs(tau);
    switch (m.family()) {
        case Family::WeylFractional: {
            const double alpha = *m.alpha();
            const double p = std::pow(a, alpha);
            double denom = m.mu() * m.mu() + p * p;
            // cos(pi/2) is not exactly zero in floating point
            if (alpha != 1.0) denom += 2.0 * p * m.mu() * std::cos(std::numbers::pi * alpha / 2.0);
            return m.sigma2() * std::pow(denom, -m.beta());
        }
        case Family::EvenOrder:
            return m.sigma2() * std::pow(m.mu() + std::pow(a, 2 * *m.n()), -2.0 * m.beta());
        case Family::OddOrder:
            return m.sigma2() *
                   std::pow(std::hypot(m.mu(), std::pow(a, 2 * *m.n() + 1)), -2.0 * m.beta());
    }
    return 0.0;
}

/// Argument of f(tau); zero for the real families, 2 beta kappa atan(tau^{2n+1}/mu) for odd.
inline double spectral_phase(const ModelSpec& m, double tau) {
    if (m.family() != Family::OddOrder) return 0.0;
    const double t = std::pow(std::abs(tau), 2 * *m.n() + 1);
    const double signed_t = tau < 0.0 ? -t : t;
    return 2.0 * m.beta() * *m.kappa() * std::atan2(signed_t, m.mu());
}

/// f(tau). Real families return a value with zero imaginary part.
inline std::complex<double> spectral_density(const ModelSpec& m, double tau) {
    const double mod = spectral_modulus(m, tau);
    if (m.family() != Family::OddOrder) return {mod, 0.0};
    return std::polar(mod, spectral_phase(m, tau));
}

// ---------------------------------------------------------------------------
// Grids and curves

struct Grid {
    double start = 0.0;
    double step = 1.0;
    int count = 2;

    Grid() = default;
    Grid(double start_, double step_, int count_) : start(start_), step(step_), count(count_) {
        std::vector<Violation> bad;
        if (!std::isfinite(start)) bad.push_back({"start", "must be finite"});
        if (!(std::isfinite(step) && step > 0.0)) bad.push_back({"step", "must be > 0"});
        if (count < 2) bad.push_back({"count", "must be >= 2"});
        if (!bad.empty()) throw ValidationError(std::move(bad));
    }

    double at(int k) const noexcept { return start + k * step; }
    std::vector<double> points() const {
        std::vector<double> p(count);
        for (int k = 0; k < count; ++k) p[k] = at(k);
        return p;
    }
};

enum class Quantity { Spectral, Covariance, Kernel, Density };

inline std::string quantity_name(Quantity q) {
    switch (q) {
        case Quantity::Spectral: return "spectral";
        case Quantity::Covariance: return "covariance";
        case Quantity::Kernel: return "kernel";
        case Quantity::Density: return "density";
    }
    return "unknown";
}

/// Samples of a quantity on a grid. `values_imag` is non-empty only for
/// complex spectral curves of the odd family.
struct Curve {
    Grid grid;
    std::vector<double> values;
    std::vector<double> values_imag;
    Quantity quantity = Quantity::Covariance;
    std::string method;
    std::optional<ModelSpec> model;

    bool is_complex() const noexcept { return !values_imag.empty(); }
};

/// Samples f on a grid; complex only for the odd family.
inline Curve spectral_curve(const ModelSpec& m, const Grid& grid) {
    Curve c;
    c.grid = grid;
    c.quantity = Quantity::Spectral;
    c.method = "exact";
    c.model = m;
    c.values.resize(grid.count);
    if (!m.is_real()) c.values_imag.resize(grid.count);
    for (int k = 0; k < grid.count; ++k) {
        const auto f = spectral_density(m, grid.at(k));
        c.values[k] = f.real();
        if (!m.is_real()) c.values_imag[k] = f.imag();
    }
    return c;
}

}  // namespace fracspec
