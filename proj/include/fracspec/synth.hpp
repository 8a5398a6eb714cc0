#pragma once

// Stationary Gaussian sample paths with a given real spectral density, and
// the empirical covariance and periodogram estimators used to check them.
//
// Random numbers: each frequency bin j draws its Gaussian pair from
// SplitMix64 outputs keyed by (seed, j) and Box-Muller, so a path depends
// only on (model, count, dt, seed).

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

#include "fracspec/error.hpp"
#include "fracspec/models.hpp"
#include "fracspec/transforms.hpp"

namespace fracspec {

struct SamplePath {
    ModelSpec model;
    double dt;
    std::vector<double> values;
    std::uint64_t seed;
};

/// Estimates with approximate one-sigma half widths.
struct EstimateCurve {
    Grid grid;
    std::vector<double> values;
    std::vector<double> half_width;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Independent standard normal pair for bin j.
inline std::pair<double, double> gaussian_pair(std::uint64_t seed, std::uint64_t bin) {
    const std::uint64_t key = splitmix64(seed) ^ splitmix64(bin * 2 + 0x5851f42d4c957f2dULL);
    // 53-bit uniforms in (0, 1]
    const double u1 = (static_cast<double>(splitmix64(key) >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(splitmix64(key + 1) >> 11) * 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(phi), r * std::sin(phi)};
}

/// FFTW planning is not thread-safe; execution is.
inline std::mutex& fftw_planner_lock() {
    static std::mutex m;
    return m;
}

/// out_k = sum_j in_j e^{sign 2 pi i j k / N}.
inline std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& in, int sign) {
    const int n = static_cast<int>(in.size());
    std::vector<std::complex<double>> out(n);
    auto* src = reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in.data()));
    auto* dst = reinterpret_cast<fftw_complex*>(out.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> guard(fftw_planner_lock());
        plan = fftw_plan_dft_1d(n, src, dst, sign > 0 ? FFTW_BACKWARD : FFTW_FORWARD,
                                FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> guard(fftw_planner_lock());
        fftw_destroy_plan(plan);
    }
    return out;
}

}  // namespace detail

/// Largest dt with f(pi/dt) <= tolerance f(0).
inline double max_alias_free_dt(const ModelSpec& m, double tolerance = 1e-6) {
    const double target = tolerance * m.spectral_peak();
    double hi = 1.0;
    while (spectral_modulus(m, hi) > target) hi *= 2.0;
    double lo = 0.0;
    for (int k = 0; k < 200 && hi - lo > 1e-12 * hi; ++k) {
        const double mid = 0.5 * (lo + hi);
        (spectral_modulus(m, mid) > target ? lo : hi) = mid;
    }
    return std::numbers::pi / hi;
}

/// Real Gaussian path X(k dt), k < count, with
///   X = sum_j sqrt(w_j f(tau_j) dtau/pi) (A_j cos(tau_j t) + B_j sin(tau_j t)),
/// tau_j = j dtau, dtau = 2pi/(count dt), 0 <= j <= count/2, w_j the
/// trapezoid weights. Refuses dt with f(pi/dt) > alias_tolerance f(0).
inline SamplePath synthesize(const ModelSpec& m, int count, double dt, std::uint64_t seed,
                             double alias_tolerance = 1e-6) {
    std::vector<Violation> bad;
    if (!m.is_real()) bad.push_back({"family", "synthesis needs a real spectral density (weyl or even)"});
    if (count < 256 || count % 2 != 0) bad.push_back({"count", "must be an even number >= 256"});
    if (!(dt > 0.0 && std::isfinite(dt))) bad.push_back({"dt", "must be > 0"});
    if (!bad.empty()) throw ValidationError(std::move(bad));
    if (!m.has_finite_variance()) {
        throw DivergentVarianceError("synthesis needs an integrable spectral density");
    }
    const double nyquist = std::numbers::pi / dt;
    if (spectral_modulus(m, nyquist) > alias_tolerance * m.spectral_peak()) {
        const double bound = max_alias_free_dt(m, alias_tolerance);
        throw AliasingError("dt = " + std::to_string(dt) + " aliases: f(pi/dt) > " +
                                std::to_string(alias_tolerance) + " f(0); use dt <= " + std::to_string(bound),
                            bound);
    }

    const int half = count / 2;
    const double dtau = 2.0 * std::numbers::pi / (count * dt);
    std::vector<std::complex<double>> coef(count, 0.0);
    for (int j = 0; j <= half; ++j) {
        const double weight = (j == 0 || j == half) ? 0.5 : 1.0;
        const double amp = std::sqrt(weight * spectral_modulus(m, j * dtau) * dtau / std::numbers::pi);
        const auto [a, b] = detail::gaussian_pair(seed, static_cast<std::uint64_t>(j));
        coef[j] = amp * std::complex<double>(a, -b);
    }
    const auto x = detail::dft(coef, +1);
    SamplePath path{m, dt, std::vector<double>(count), seed};
    for (int k = 0; k < count; ++k) path.values[k] = x[k].real();
    return path;
}

/// (1/pi) int_0^{cutoff} f(tau) cos(tau h) dtau: the covariance of the
/// band-limited process that synthesize produces with Nyquist cutoff pi/dt.
inline double bandlimited_covariance(const ModelSpec& m, double h, double cutoff) {
    if (!m.is_real()) throw DomainError("band-limited covariance needs a real spectral density");
    const auto tail = detail::spectral_tail(m);
    const auto f = [&](double tau) { return spectral_density(m, tau); };
    return detail::graded_integral(f, h, cutoff, detail::spectral_floor(tail), 1 << 14).real() /
           std::numbers::pi;
}

/// Biased lag products (1/N) sum (X_t - m)(X_{t+k} - m), k = 0..max_lag, with
/// Bartlett's large-sample variance
///   Var ~ (1/N) sum_{|r| <= M} [c(r)^2 + c(r + k) c(r - k)],  M = min(N/8, 4 sqrt N).
inline EstimateCurve empirical_covariance(const SamplePath& path, int max_lag) {
    const int n = static_cast<int>(path.values.size());
    if (max_lag < 1 || max_lag > n / 8) {
        throw ValidationError({{"max_lag", "must be in [1, count/8] = [1, " + std::to_string(n / 8) + "]"}});
    }
    double mean = 0.0;
    for (double v : path.values) mean += v;
    mean /= n;
    const int window = std::min(n / 8, static_cast<int>(4.0 * std::sqrt(static_cast<double>(n))));
    const int lags = std::max(max_lag, window) + max_lag + 1;
    std::vector<double> c(lags, 0.0);
    for (int k = 0; k < lags; ++k) {
        double s = 0.0;
        for (int t = 0; t + k < n; ++t) s += (path.values[t] - mean) * (path.values[t + k] - mean);
        c[k] = s / n;
    }
    auto at = [&](int r) { return c[std::abs(r)]; };

    EstimateCurve out;
    out.grid = Grid(0.0, path.dt, max_lag + 1);
    out.values.assign(out.grid.count, 0.0);
    out.half_width.assign(out.grid.count, 0.0);
    for (int k = 0; k <= max_lag; ++k) {
        double var = 0.0;
        for (int r = -window; r <= window; ++r) var += at(r) * at(r) + at(r + k) * at(r - k);
        out.values[k] = c[k];
        out.half_width[k] = std::sqrt(std::max(var, 0.0) / n);
    }
    return out;
}

/// Band-averaged periodogram I_j = (dt/N) |sum_k X_k e^{-i tau_j k dt}|^2 over
/// the positive frequencies tau_j = 2 pi j/(N dt), 1 <= j < N/2, split into
/// band_count equal bands. Each I_j is an unbiased estimate of f(tau_j) with
/// standard deviation f(tau_j), so a band of B bins has half width value/sqrt(B).
inline EstimateCurve periodogram(const SamplePath& path, int band_count) {
    const int n = static_cast<int>(path.values.size());
    const int bins = n / 2 - 1;
    if (band_count < 8 || band_count > bins) {
        throw ValidationError({{"band_count", "must be in [8, " + std::to_string(bins) + "]"}});
    }
    std::vector<std::complex<double>> x(path.values.begin(), path.values.end());
    const auto spectrum = detail::dft(x, -1);
    const double dtau = 2.0 * std::numbers::pi / (n * path.dt);
    const int per_band = bins / band_count;

    EstimateCurve out;
    // band b covers bins 1 + b per_band .. (b + 1) per_band; its centre frequency
    out.grid = Grid((1.0 + 0.5 * (per_band - 1)) * dtau, per_band * dtau, band_count);
    out.values.assign(band_count, 0.0);
    out.half_width.assign(band_count, 0.0);
    for (int b = 0; b < band_count; ++b) {
        double s = 0.0;
        for (int j = 1 + b * per_band; j <= (b + 1) * per_band; ++j) s += std::norm(spectrum[j]);
        out.values[b] = s * path.dt / n / per_band;
        out.half_width[b] = out.values[b] / std::sqrt(static_cast<double>(per_band));
    }
    return out;
}

}  // namespace fracspec
