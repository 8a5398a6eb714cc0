#pragma once

// Covariance functions Cov(h) = (1/2pi) int e^{-i tau h} f(tau) dtau of the
// three families, by gamma-mixed kernels, closed forms and Fourier inversion.

#include <boost/math/interpolators/cardinal_cubic_b_spline.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

#include "fracspec/detail/quadrature.hpp"
#include "fracspec/error.hpp"
#include "fracspec/gamma_quadrature.hpp"
#include "fracspec/kernels.hpp"
#include "fracspec/models.hpp"
#include "fracspec/specfun.hpp"
#include "fracspec/transforms.hpp"

namespace fracspec {

enum class Method { Auto, Quadrature, ClosedForm, FourierOracle };

inline std::string method_name(Method m) {
    switch (m) {
        case Method::Auto: return "auto";
        case Method::Quadrature: return "quadrature";
        case Method::ClosedForm: return "closed";
        case Method::FourierOracle: return "fourier";
    }
    return "unknown";
}

inline std::optional<Method> parse_method(const std::string& s) {
    if (s == "auto") return Method::Auto;
    if (s == "quadrature") return Method::Quadrature;
    if (s == "closed" || s == "closed-form") return Method::ClosedForm;
    if (s == "fourier" || s == "fourier-oracle") return Method::FourierOracle;
    return std::nullopt;
}

namespace detail {

inline void require_finite_variance(const ModelSpec& m, double h) {
    if (h == 0.0 && !m.has_finite_variance()) {
        throw DivergentVarianceError("Cov(0) diverges for this model: |f(tau)| ~ |tau|^-" +
                                     std::to_string(m.decay_exponent()) + " is not integrable");
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Closed forms

/// sigma2/(Gamma(beta) sqrt(pi)) (|h|/2mu)^{beta-1/2} K_{beta-1/2}(mu |h|),
/// the covariance of f = sigma2/(mu^2 + tau^2)^beta.
inline double covariance_closed_weyl_alpha1(double h, double mu, double beta, double sigma2) {
    const double pi = std::numbers::pi;
    const double nu = beta - 0.5;
    if (h == 0.0) {
        if (!(beta > 0.5)) throw DivergentVarianceError("Cov(0) diverges for beta <= 1/2");
        return sigma2 * std::exp(std::lgamma(nu) - std::lgamma(beta)) / (2.0 * std::sqrt(pi)) *
               std::pow(mu, 1.0 - 2.0 * beta);
    }
    const double a = std::abs(h);
    return sigma2 * std::exp(-std::lgamma(beta) - 0.5 * std::log(pi) + nu * std::log(a / (2.0 * mu)) +
                             log_bessel_k(nu, mu * a));
}

/// sigma2/(Gamma(2beta) sqrt(pi)) (|h|/(2 sqrt mu))^{2beta-1/2} K_{2beta-1/2}(|h| sqrt mu),
/// the covariance of f = sigma2/(mu + tau^2)^{2beta}.
inline double covariance_closed_even_n1(double h, double mu, double beta, double sigma2) {
    const double pi = std::numbers::pi;
    const double nu = 2.0 * beta - 0.5;
    if (h == 0.0) {
        if (!(nu > 0.0)) throw DivergentVarianceError("Cov(0) diverges for 2 beta <= 1/2");
        return sigma2 * std::exp(std::lgamma(nu) - std::lgamma(2.0 * beta)) / (2.0 * std::sqrt(pi)) *
               std::pow(mu, -nu);
    }
    const double a = std::abs(h);
    const double r = std::sqrt(mu);
    return sigma2 * std::exp(-std::lgamma(2.0 * beta) - 0.5 * std::log(pi) +
                             nu * std::log(a / (2.0 * r)) + log_bessel_k(nu, a * r));
}

/// Alternative n = 1 even-order closed form,
/// (2 sigma2/Gamma(2beta)) (|h|/2 sqrt mu)^{2beta} K_{2beta}(|h| sqrt mu).
/// It does not match f = sigma2/(mu + tau^2)^{2beta}; kept for comparison only.
inline double covariance_printed_even_n1(double h, double mu, double beta, double sigma2) {
    const double nu = 2.0 * beta;
    const double r = std::sqrt(mu);
    if (h == 0.0) return sigma2 * std::pow(mu, -nu);
    const double a = std::abs(h);
    return 2.0 * sigma2 * std::exp(-std::lgamma(nu) + nu * std::log(a / (2.0 * r)) +
                                   log_bessel_k(nu, a * r));
}

/// Cov(0) = sigma2/mu^{2beta} E[u_m(0, W)], W ~ Gamma(2beta, mu), with
/// u_m(0, w) = w^{-1/m} Gamma(1 + 1/m) c_m / pi, c_m = 1 for even m and
/// cos(pi/2m) for odd m, and E[W^{-1/m}] = mu^{1/m} Gamma(2beta - 1/m)/Gamma(2beta).
inline double covariance_closed_at_zero(const ModelSpec& m) {
    detail::require_finite_variance(m, 0.0);
    const double pi = std::numbers::pi;
    if (m.family() == Family::WeylFractional) {
        if (*m.alpha() != 1.0) {
            throw MethodUnavailableError("no closed form for the Weyl family with alpha < 1");
        }
        return covariance_closed_weyl_alpha1(0.0, m.mu(), m.beta(), m.sigma2());
    }
    const double order = m.kernel_order();
    const double shape = 2.0 * m.beta();
    const double c = m.family() == Family::EvenOrder ? 1.0 : std::cos(pi / (2.0 * order));
    const double log_moment = std::log(m.mu()) / order + std::lgamma(shape - 1.0 / order) - std::lgamma(shape);
    return m.spectral_peak() * std::tgamma(1.0 + 1.0 / order) * c / pi * std::exp(log_moment);
}

// ---------------------------------------------------------------------------
// Gamma-mixed kernels

namespace detail {

/// E[u_3(h, W)] for the Airy kernel u_3(h, w) = Ai(-kappa h/(3w)^{1/3})/(3w)^{1/3}.
/// When kappa h > 0 the Airy argument runs to -inf as W -> 0; that part is
/// integrated in z = kappa h/(3W)^{1/3} lobe by lobe and Wynn-accelerated.
inline double airy_kernel_expectation(double h, int kappa, double shape, double rate) {
    const KernelSpec spec(3, kappa);
    auto u = [&](double w) { return heat_kernel(spec, h, w); };
    if (h == 0.0) return gamma_expectation(u, shape, rate, 1.0 / 3.0);
    const double y = kappa * h;
    if (y < 0.0) return gamma_expectation(u, shape, rate);

    const double z0 = 4.0;
    const double w0 = y * y * y / (3.0 * z0 * z0 * z0);
    const double upper = gamma_expectation(u, shape, rate, 0.0, 1e-12, w0);

    // W = y^3/(3 z^3): density times u times |dW/dz|
    const double log_norm = shape * std::log(rate) - std::lgamma(shape);
    auto g = [&](double z) {
        const double w = y * y * y / (3.0 * z * z * z);
        const double log_weight = log_norm + (shape - 1.0) * std::log(w) - rate * w;
        return std::exp(log_weight) * airy_ai(-z) * (z / y) * (y * y * y / (z * z * z * z));
    };
    // approximate zeros of Ai(-z): ((3 pi/8)(4k - 1))^{2/3}
    auto zero = [](int k) { return std::pow(3.0 * std::numbers::pi / 8.0 * (4.0 * k - 1.0), 2.0 / 3.0); };
    // plain lobes until W drops well below the bulk of the Gamma law, then an
    // algebraically decaying tail for the acceleration
    const double w_tail = 1e-2 * std::min(1.0, shape / rate);
    const double z_tail = y / std::cbrt(3.0 * w_tail);
    int k = 1;
    while (zero(k) <= z0) ++k;
    std::vector<Integral> lobes;
    lobes.push_back({});
    kronrod(g, z0, zero(k), 18, 1e-13, lobes.back());
    constexpr int tail_lobes = 40;
    int tail_left = tail_lobes;
    std::vector<double> partial;
    double sum = lobes.back().value;
    for (; tail_left > 0; ++k) {
        lobes.push_back({});
        kronrod(g, zero(k), zero(k + 1), 18, 1e-13, lobes.back());
        sum += lobes.back().value;
        if (zero(k + 1) > z_tail) {
            partial.push_back(sum);
            --tail_left;
        }
    }
    // lobes far below the largest one only need absolute accuracy
    double largest = std::abs(upper);
    for (const auto& l : lobes) largest = std::max(largest, std::abs(l.value));
    for (const auto& l : lobes) {
        const double target = std::max(1e-13 * l.l1, 1e-15 * largest);
        if (!std::isfinite(l.value) || l.error > 100.0 * target + 1e-300) {
            throw ConvergenceError("Airy kernel expectation", l.value, l.value - l.error, l.error);
        }
    }
    return upper + wynn_epsilon(partial);
}

}  // namespace detail

/// (sigma2/mu^{2beta}) E[u(h, W)] with the family's kernel: Gaussian mixed
/// over Gamma(beta, mu^2) for Weyl alpha = 1, u_{2n} or the Airy kernel mixed
/// over Gamma(2beta, mu) for the even and odd families.
inline double covariance_kernel_quadrature(const ModelSpec& m, double h) {
    detail::require_finite_variance(m, h);
    const double scale = m.spectral_peak();
    switch (m.family()) {
        case Family::WeylFractional: {
            if (*m.alpha() != 1.0) {
                throw MethodUnavailableError("kernel quadrature for alpha < 1 is the stable convolution");
            }
            const KernelSpec gauss(2);
            auto u = [&](double w) { return heat_kernel(gauss, h, w); };
            return scale * gamma_expectation(u, m.beta(), m.mu() * m.mu(), h == 0.0 ? 0.5 : 0.0);
        }
        case Family::EvenOrder: {
            const KernelSpec spec(m.kernel_order());
            auto u = [&](double w) { return heat_kernel(spec, h, w); };
            const double p = h == 0.0 ? 1.0 / spec.order() : 0.0;
            return scale * gamma_expectation(u, 2.0 * m.beta(), m.mu(), p);
        }
        case Family::OddOrder:
            if (*m.n() != 1) {
                throw MethodUnavailableError(
                    "odd-order covariance for n >= 2 is computed in the frequency domain only");
            }
            return scale * detail::airy_kernel_expectation(h, *m.kappa(), 2.0 * m.beta(), m.mu());
    }
    return 0.0;
}

// ---------------------------------------------------------------------------
// Stable convolution

namespace detail {

/// Unit symmetric stable density (characteristic function exp(-|xi|^a))
/// tabulated as log g on a uniform grid in t = log(1 + y), y <= 1e3, with
/// the tail expansion
///   g(y) ~ (1/pi) sum_k (-1)^{k+1} Gamma(ka+1)/k! sin(k pi a/2) y^{-ka-1}
/// beyond.
class StableTable {
public:
    explicit StableTable(double a) : a_(a) {
        constexpr int points = 4097;
        const double t_max = std::log1p(y_max);
        const double step = t_max / (points - 1);
        std::vector<double> log_g(points);
        for (int i = 0; i < points; ++i) {
            const double y = std::expm1(i * step);
            log_g[i] = std::log(symmetric_unit(a, y));
        }
        // even in y: g'(0) = 0, and dlog g/dt = 0 at t = 0
        const double end_slope = (log_g[points - 1] - log_g[points - 2]) / step;
        spline_ = std::make_unique<boost::math::interpolators::cardinal_cubic_b_spline<double>>(
            log_g.begin(), log_g.end(), 0.0, step, 0.0, end_slope);
    }

    double operator()(double y) const {
        y = std::abs(y);
        if (a_ == 1.0) return 1.0 / (std::numbers::pi * (1.0 + y * y));
        if (y <= y_max) return std::exp((*spline_)(std::log1p(y)));
        return tail(y);
    }

private:
    double tail(double y) const {
        double sum = 0.0;
        for (int k = 1; k <= 30; ++k) {
            const double term = std::exp(std::lgamma(k * a_ + 1.0) - std::lgamma(k + 1.0) -
                                         (k * a_ + 1.0) * std::log(y)) *
                                std::sin(k * std::numbers::pi * a_ / 2.0);
            sum += (k % 2 == 1 ? term : -term);
            if (std::abs(term) < 1e-17 * std::abs(sum)) break;
        }
        return sum / std::numbers::pi;
    }

    static constexpr double y_max = 1e3;
    double a_;
    std::unique_ptr<boost::math::interpolators::cardinal_cubic_b_spline<double>> spline_;
};

inline const StableTable& stable_table(double a) {
    static std::mutex lock;
    static std::map<double, std::unique_ptr<StableTable>> tables;
    std::lock_guard<std::mutex> guard(lock);
    auto& slot = tables[a];
    if (!slot) slot = std::make_unique<StableTable>(a);
    return *slot;
}

/// int_{-inf}^{b} F(x) dx for F peaked at x = 0 on the widths in `scales`.
/// Panels grow geometrically away from the peak; beyond the last panel the
/// tail is integrated in log distance. Accumulates into total/error/l1.
template <class F>
void peaked_integral(F&& f, double b, std::initializer_list<double> scales, double& total,
                     double& error, double& l1) {
    double reach = std::abs(b);
    for (double s : scales) reach = std::max(reach, 64.0 * s);
    std::vector<double> cuts{-reach, 0.0, b};
    for (double s : scales) {
        for (double d = s; d < reach; d *= 4.0) {
            cuts.push_back(-d);
            if (d < b) cuts.push_back(d);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    auto piece = [&](auto&& g, double lo, double hi) {
        Integral r;
        kronrod(g, lo, hi, 12, 1e-11, r);
        total += r.value;
        error += r.error;
        l1 += r.l1;
    };
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i] < b) piece(f, cuts[i], std::min(cuts[i + 1], b));
    }
    auto tail = [&](double u) { return f(-reach * std::exp(u)) * reach * std::exp(u); };
    piece(tail, 0.0, 60.0);
}

}  // namespace detail

/// Weyl covariance for 0 < alpha < 1 as a gamma mixture of a convolution of
/// two symmetric stable densities:
///   Cov(h) = (sigma2/Gamma(beta)) int w^{beta-1} e^{-w mu^2} (g1(., w) * g2(., w))(h) dw,
/// g1 of index 2alpha and scale 1, g2 of index alpha and scale 2 mu cos(pi alpha/2).
inline double covariance_stable_convolution(const ModelSpec& m, double h) {
    if (m.family() != Family::WeylFractional) {
        throw MethodUnavailableError("stable convolution applies to the Weyl family only");
    }
    const double alpha = *m.alpha();
    if (!(alpha < 1.0)) throw MethodUnavailableError("stable convolution needs 0 < alpha < 1");
    detail::require_finite_variance(m, h);
    const double c2 = 2.0 * m.mu() * std::cos(std::numbers::pi * alpha / 2.0);
    const auto& g1 = detail::stable_table(2.0 * alpha);
    const auto& g2 = detail::stable_table(alpha);

    // (g1 * g2)(h): the part near z = 0 in z, the part near z = h in v = h - z,
    // so each peak is resolved at its own width however narrow it is
    const double lag = std::abs(h);
    auto convolution = [&](double w) {
        const double s1 = std::pow(w, 1.0 / (2.0 * alpha));
        const double s2 = std::pow(c2 * w, 1.0 / alpha);
        auto p1 = [&](double x) { return g1(x / s1) / s1; };
        auto p2 = [&](double x) { return g2(x / s2) / s2; };
        double total = 0.0, error = 0.0, l1 = 0.0;
        if (lag == 0.0) {
            detail::peaked_integral([&](double z) { return p1(z) * p2(z); }, 0.0, {s1, s2}, total, error, l1);
            total *= 2.0;
            error *= 2.0;
            l1 *= 2.0;
        } else {
            const double mid = 0.5 * lag;
            detail::peaked_integral([&](double z) { return p1(lag - z) * p2(z); }, mid, {s2}, total, error, l1);
            detail::peaked_integral([&](double v) { return p1(v) * p2(lag - v); }, mid, {s1}, total, error, l1);
        }
        if (!std::isfinite(total) || error > 1e-8 * l1) {
            throw ConvergenceError("stable convolution at w = " + std::to_string(w), total, total - error, error);
        }
        return total;
    };
    const double p = h == 0.0 ? 1.0 / (2.0 * alpha) : 0.0;
    return m.spectral_peak() * gamma_expectation(convolution, m.beta(), m.mu() * m.mu(), p, 1e-9);
}

// ---------------------------------------------------------------------------
// Dispatch

/// The concrete method Auto resolves to for (model, h).
inline Method resolve_method(const ModelSpec& m, double h, Method requested) {
    if (requested != Method::Auto) return requested;
    switch (m.family()) {
        case Family::WeylFractional:
            return *m.alpha() == 1.0 ? Method::ClosedForm : Method::FourierOracle;
        case Family::EvenOrder:
            return (*m.n() == 1 || h == 0.0) ? Method::ClosedForm : Method::Quadrature;
        case Family::OddOrder:
            if (h == 0.0) return Method::ClosedForm;
            return *m.n() == 1 ? Method::Quadrature : Method::FourierOracle;
    }
    return Method::FourierOracle;
}

/// Cov(h) by the requested method. ClosedForm covers Weyl alpha = 1, even
/// n = 1, and h = 0 for the even and odd families; Quadrature is the
/// gamma-mixed kernel (stable convolution for Weyl alpha < 1).
inline double covariance(const ModelSpec& m, double h, Method method = Method::Auto,
                         const TransformPlan& plan = {}) {
    if (!std::isfinite(h)) throw DomainError("lag must be finite");
    detail::require_finite_variance(m, h);
    switch (resolve_method(m, h, method)) {
        case Method::ClosedForm:
            if (m.family() == Family::WeylFractional && *m.alpha() == 1.0) {
                return covariance_closed_weyl_alpha1(h, m.mu(), m.beta(), m.sigma2());
            }
            if (m.family() == Family::EvenOrder && *m.n() == 1) {
                return covariance_closed_even_n1(h, m.mu(), m.beta(), m.sigma2());
            }
            if (h == 0.0) return covariance_closed_at_zero(m);
            throw MethodUnavailableError("no closed form for " + family_name(m.family()) +
                                         " model at h != 0");
        case Method::Quadrature:
            if (m.family() == Family::WeylFractional && *m.alpha() < 1.0) {
                return covariance_stable_convolution(m, h);
            }
            return covariance_kernel_quadrature(m, h);
        case Method::FourierOracle:
            return inverse_fourier_at(m, h, plan);
        case Method::Auto:
            break;
    }
    return inverse_fourier_at(m, h, plan);
}

/// Covariance samples on a lag grid.
inline Curve covariance_curve(const ModelSpec& m, const Grid& lags, Method method = Method::Auto,
                              const TransformPlan& plan = {}) {
    Curve c;
    c.grid = lags;
    c.quantity = Quantity::Covariance;
    c.model = m;
    c.values.resize(lags.count);
    for (int k = 0; k < lags.count; ++k) c.values[k] = covariance(m, lags.at(k), method, plan);
    c.method = method_name(method == Method::Auto ? resolve_method(m, lags.at(lags.count - 1), method)
                                                  : method);
    return c;
}

/// Fitted exponential decay rate (log Cov(h1) - log Cov(h2))/(h2 - h1).
inline double decay_rate(const ModelSpec& m, double h1, double h2, Method method = Method::Auto) {
    if (!(h1 > 0.0 && h2 > h1)) throw DomainError("decay_rate needs 0 < h1 < h2");
    const double c1 = covariance(m, h1, method);
    const double c2 = covariance(m, h2, method);
    if (!(c1 > 0.0 && c2 > 0.0)) {
        throw DomainError("decay_rate needs positive covariances, got " + std::to_string(c1) + " and " +
                          std::to_string(c2));
    }
    return (std::log(c1) - std::log(c2)) / (h2 - h1);
}

}  // namespace fracspec
