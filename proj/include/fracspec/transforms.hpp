#pragma once

// Fourier duality between spectral densities and covariances:
//   f(tau) = int e^{i tau h} Cov(h) dh,   Cov(h) = (1/2pi) int e^{-i tau h} f(tau) dtau.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "fracspec/detail/quadrature.hpp"
#include "fracspec/error.hpp"
#include "fracspec/models.hpp"

namespace fracspec {

enum class Taper { None, TailCorrected };

struct TransformPlan {
    double frequency_cutoff = 0.0;  // 0 selects the cutoff automatically
    int sample_count = 1 << 14;
    Taper taper = Taper::TailCorrected;

    void check() const {
        std::vector<Violation> bad;
        if (!(frequency_cutoff >= 0.0) || !std::isfinite(frequency_cutoff)) {
            bad.push_back({"frequency_cutoff", "must be finite and >= 0 (0 = automatic)"});
        }
        if (sample_count < 256 || (sample_count & (sample_count - 1)) != 0) {
            bad.push_back({"sample_count", "must be a power of two >= 256"});
        }
        if (!bad.empty()) throw ValidationError(std::move(bad));
    }
};

namespace detail {

/// Large-tau form f(tau) = C tau^{-P} (1 + A y + B y^2)^{-g}, y = tau^{-q}.
struct SpectralTail {
    std::complex<double> C;
    double P;
    double q;
    std::complex<double> A;
    double B;
    double g;
    double radius;  // convergence radius of the expansion in y
};

inline SpectralTail spectral_tail(const ModelSpec& m) {
    const double mu = m.mu(), beta = m.beta(), s2 = m.sigma2();
    switch (m.family()) {
        case Family::WeylFractional: {
            const double a = *m.alpha();
            const double c = a == 1.0 ? 0.0 : std::cos(std::numbers::pi * a / 2.0);
            return {s2, 2.0 * a * beta, a, 2.0 * mu * c, mu * mu, beta, 1.0 / mu};
        }
        case Family::EvenOrder: {
            const double q = 2.0 * *m.n();
            return {s2, 2.0 * q * beta, q, mu, 0.0, 2.0 * beta, 1.0 / mu};
        }
        case Family::OddOrder: {
            const double q = 2.0 * *m.n() + 1.0;
            const double k = *m.kappa();
            // (mu - i k t^q)^{-2b} = (-i k t^q)^{-2b} (1 + i k mu t^{-q})^{-2b}
            const auto C = std::polar(s2, k * std::numbers::pi * beta);
            return {C, 2.0 * q * beta, q, std::complex<double>(0.0, k * mu), 0.0, 2.0 * beta,
                    1.0 / mu};
        }
    }
    return {};
}

/// Power-series coefficients of (1 + A y + B y^2)^{-g}.
inline std::vector<std::complex<double>> tail_series(const SpectralTail& t, int terms) {
    std::vector<std::complex<double>> p(terms);
    p[0] = 1.0;
    if (terms > 1) p[1] = -t.g * t.A;
    for (int k = 1; k + 1 < terms; ++k) {
        p[k + 1] = -((k + t.g) * t.A * p[k] + (k - 1.0 + 2.0 * t.g) * t.B * p[k - 1]) / (k + 1.0);
    }
    return p;
}

/// int_X^inf e^{-is} s^{-p} ds for X well beyond p, by the asymptotic series
/// -i e^{-iX} X^{-p} sum_j (p)_j (i/X)^j.
inline std::complex<double> oscillatory_tail(double p, double X) {
    const std::complex<double> i(0.0, 1.0);
    std::complex<double> sum = 0.0, term = 1.0;
    for (int j = 0; j < 400; ++j) {
        sum += term;
        const std::complex<double> next = term * (p + j) * i / X;
        if (std::abs(next) <= 1e-17 * std::abs(sum)) {
            return -i * std::exp(-i * X) * std::pow(X, -p) * sum;
        }
        if (std::abs(next) > std::abs(term)) {
            // optimal truncation: the smallest term bounds the error
            if (std::abs(next) <= 1e-15 * std::abs(sum)) {
                return -i * std::exp(-i * X) * std::pow(X, -p) * sum;
            }
            break;
        }
        term = next;
    }
    throw ConvergenceError("spectral tail correction: asymptotic series diverged (decay exponent " +
                               std::to_string(p) + ")",
                           std::abs(sum), std::abs(sum - term), std::abs(term));
}

/// int_T^inf e^{-i tau h} tau^{-p} dtau.
inline std::complex<double> power_tail(double p, double h, double T) {
    if (h == 0.0) return std::pow(T, 1.0 - p) / (p - 1.0);
    const double a = std::abs(h);
    const auto e = std::pow(a, p - 1.0) * oscillatory_tail(p, T * a);
    return h > 0.0 ? e : std::conj(e);
}

/// Lower end of the graded panels; [0, floor] contributes O(1e-15 f(0)).
inline double spectral_floor(const SpectralTail& t) {
    return 1e-15 * std::pow(t.radius, -1.0 / t.q);
}

/// int_0^T e^{-i tau h} g(tau) dtau on geometrically graded Gauss-Legendre
/// panels, each split further so no panel spans more than one period.
template <class G>
std::complex<double> graded_integral(G&& g, double h, double T, double floor, int sample_count) {
    auto integrand = [&](double tau) { return std::exp(std::complex<double>(0.0, -tau * h)) * g(tau); };
    const int min_panels = std::max(8, sample_count / LegendrePanel::size);
    const double ratio = std::min(2.0, std::pow(T / floor, 1.0 / min_panels));
    const double period = h == 0.0 ? std::numeric_limits<double>::infinity()
                                   : 2.0 * std::numbers::pi / std::abs(h);
    std::complex<double> sum = legendre_panel(integrand, 0.0, floor);
    double lo = floor;
    while (lo < T) {
        const double hi = std::min(T, lo * ratio);
        const int pieces = std::max(1, static_cast<int>(std::ceil((hi - lo) / period)));
        sum += composite_legendre(integrand, lo, hi, pieces);
        lo = hi;
    }
    return sum;
}

}  // namespace detail

/// Cutoff where |f| first drops below 1e-12 f(0); used for untapered plans.
inline double truncation_cutoff(const ModelSpec& m) {
    const double target = 1e-12 * m.spectral_peak();
    double hi = 1.0;
    while (spectral_modulus(m, hi) > target) {
        hi *= 2.0;
        if (hi > 1e300) throw ConvergenceError("truncation cutoff search", hi, hi / 2, 0.0);
    }
    double lo = 0.0;
    for (int k = 0; k < 200 && hi - lo > 1e-12 * hi; ++k) {
        const double mid = 0.5 * (lo + hi);
        (spectral_modulus(m, mid) > target ? lo : hi) = mid;
    }
    return hi;
}

/// Cov(h) = (1/2pi) int e^{-i tau h} f(tau) dtau by direct quadrature. The
/// tail beyond the cutoff is added analytically from the power-law expansion
/// of f unless the plan disables it.
inline double inverse_fourier_at(const ModelSpec& m, double h, const TransformPlan& plan = {}) {
    plan.check();
    if (!std::isfinite(h)) throw DomainError("lag must be finite");
    const auto tail = detail::spectral_tail(m);
    if (h == 0.0 && !m.has_finite_variance()) {
        throw DivergentVarianceError("Cov(0) diverges: spectral density decays like |tau|^-" +
                                     std::to_string(tail.P) + ", which is not integrable");
    }
    const double floor = detail::spectral_floor(tail);

    double T = 0.0;
    std::vector<std::complex<double>> series;
    if (plan.taper == Taper::None) {
        if (!m.has_finite_variance()) {
            throw DivergentVarianceError("untapered inversion needs an integrable spectral density");
        }
        T = plan.frequency_cutoff > 0.0 ? plan.frequency_cutoff : truncation_cutoff(m);
    } else {
        // expansion in y = T^{-q} converges at ratio <= 0.1
        T = std::pow(0.1 * tail.radius, -1.0 / tail.q);
        const int terms = 24;
        series = detail::tail_series(tail, terms);
        if (h != 0.0) {
            const double p_max = tail.P + terms * tail.q;
            T = std::max(T, (2.0 * p_max + 60.0) / std::abs(h));
        }
        T = std::max(T, plan.frequency_cutoff);
    }

    const auto f = [&](double tau) { return spectral_density(m, tau); };
    std::complex<double> positive = detail::graded_integral(f, h, T, floor, plan.sample_count);
    std::complex<double> tail_sum = 0.0;
    for (std::size_t k = 0; k < series.size(); ++k) {
        tail_sum += series[k] * detail::power_tail(tail.P + k * tail.q, h, T);
    }
    tail_sum *= tail.C;

    if (m.is_real()) return (positive + tail_sum).real() / std::numbers::pi;

    // negative frequencies evaluated directly, so Hermitian symmetry is checked
    const auto f_neg = [&](double tau) { return spectral_density(m, -tau); };
    const std::complex<double> negative =
        detail::graded_integral(f_neg, -h, T, floor, plan.sample_count) + std::conj(tail_sum);
    const std::complex<double> total = (positive + tail_sum + negative) / (2.0 * std::numbers::pi);
    if (std::abs(total.imag()) > 1e-10 * m.spectral_peak()) {
        throw ConvergenceError("inverse Fourier transform: imaginary residual exceeds 1e-10 f(0)",
                               total.real(), total.imag(), std::abs(total.imag()));
    }
    return total.real();
}

/// Covariance samples on a lag grid by inverse Fourier transform of f.
inline Curve inverse_fourier_spectral(const ModelSpec& m, const Grid& lags, const TransformPlan& plan = {}) {
    Curve c;
    c.grid = lags;
    c.quantity = Quantity::Covariance;
    c.method = plan.taper == Taper::None ? "fourier-truncated" : "fourier-tail-corrected";
    c.model = m;
    c.values.resize(lags.count);
    for (int k = 0; k < lags.count; ++k) c.values[k] = inverse_fourier_at(m, lags.at(k), plan);
    return c;
}

namespace detail {

/// Extended closed rule with O(step^4) end corrections; falls back to the
/// trapezoid rule for short segments.
inline std::vector<double> end_corrected_weights(int points) {
    std::vector<double> w(points, 1.0);
    if (points < 8) {
        w.front() = w.back() = 0.5;
        return w;
    }
    constexpr double edge[3] = {3.0 / 8.0, 7.0 / 6.0, 23.0 / 24.0};
    for (int k = 0; k < 3; ++k) {
        w[k] = edge[k];
        w[points - 1 - k] = edge[k];
    }
    return w;
}

}  // namespace detail

/// f(tau) = int e^{i tau h} Cov(h) dh over the sampled lags. A sample at
/// h = 0 splits the rule so a kink there does not spoil the end corrections.
inline Curve forward_fourier_covariance(const Curve& cov, const Grid& freqs) {
    const int n = cov.grid.count;
    if (static_cast<int>(cov.values.size()) != n) throw DomainError("curve size does not match its grid");
    double peak = 0.0;
    for (double v : cov.values) peak = std::max(peak, std::abs(v));
    const double left = cov.values.front(), right = cov.values.back();
    if (peak > 0.0 && (std::abs(left) > 1e-10 * peak || std::abs(right) > 1e-10 * peak)) {
        throw InsufficientDecayError("covariance does not decay below 1e-10 of its peak at the grid ends (left " +
                                         std::to_string(left) + ", right " + std::to_string(right) +
                                         ", peak " + std::to_string(peak) + ")",
                                     left, right);
    }

    std::vector<double> w(n, 0.0);
    const double step = cov.grid.step;
    const double k0 = -cov.grid.start / step;
    const int split = static_cast<int>(std::lround(k0));
    auto add = [&](int first, int last) {
        const auto seg = detail::end_corrected_weights(last - first + 1);
        for (int k = first; k <= last; ++k) w[k] += seg[k - first];
    };
    if (std::abs(k0 - split) < 1e-9 && split >= 1 && split <= n - 2) {
        add(0, split);
        add(split, n - 1);
    } else {
        add(0, n - 1);
    }

    Curve out;
    out.grid = freqs;
    out.quantity = Quantity::Spectral;
    out.method = "forward-fourier";
    out.model = cov.model;
    out.values.resize(freqs.count);
    std::vector<double> imag(freqs.count);
    double imag_max = 0.0, real_max = 0.0;
    for (int j = 0; j < freqs.count; ++j) {
        const double tau = freqs.at(j);
        std::complex<double> sum = 0.0;
        for (int k = 0; k < n; ++k) {
            if (w[k] == 0.0 || cov.values[k] == 0.0) continue;
            sum += w[k] * cov.values[k] * std::exp(std::complex<double>(0.0, tau * cov.grid.at(k)));
        }
        sum *= step;
        out.values[j] = sum.real();
        imag[j] = sum.imag();
        imag_max = std::max(imag_max, std::abs(sum.imag()));
        real_max = std::max(real_max, std::abs(sum.real()));
    }
    const bool complex_model = cov.model && !cov.model->is_real();
    if (complex_model || imag_max > 1e-12 * real_max) out.values_imag = std::move(imag);
    return out;
}

}  // namespace fracspec
