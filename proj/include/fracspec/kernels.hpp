#pragma once

// Fundamental solutions u(x, w) of the higher-order heat equations
//   du/dw = (-1)^{n+1} d^{2n}u/dx^{2n}        (order 2n)
//   du/dw = kappa d^{2n+1}u/dx^{2n+1}         (order 2n+1)
// normalised so that int e^{i xi x} u(x, w) dx = exp(-xi^{2n} w), resp.
// exp(i kappa xi^{2n+1} w).

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "fracspec/detail/quadrature.hpp"
#include "fracspec/error.hpp"
#include "fracspec/specfun.hpp"

namespace fracspec {

class KernelSpec {
public:
    KernelSpec(int order, int kappa = 1) : order_(order), kappa_(kappa) {
        if (order < 2) throw DomainError("kernel order must be >= 2, got " + std::to_string(order));
        if (order % 2 == 0) {
            kappa_ = 1;
        } else if (kappa != 1 && kappa != -1) {
            throw DomainError("kernel sign kappa must be -1 or +1");
        }
    }

    int order() const noexcept { return order_; }
    int kappa() const noexcept { return kappa_; }
    bool is_even() const noexcept { return order_ % 2 == 0; }

private:
    int order_;
    int kappa_;
};

namespace detail {

/// (1/pi) Re int_0^inf g(t + ic) dt by composite Gauss-Legendre on [0, t_max],
/// doubling the panel count until the sum settles. `g` is pre-scaled so its
/// size near the dominant region is O(1).
template <class G>
double shifted_contour_integral(G&& g, double c, double t_max, const char* what) {
    // real part and modulus in one pass; the modulus sets the cancellation scale
    auto both = [&](double t) {
        const auto v = g(std::complex<double>(t, c));
        return std::complex<double>(v.real(), std::abs(v));
    };
    int panels = 8;
    double previous = composite_legendre(both, 0.0, t_max, panels).real();
    while (panels <= (1 << 14)) {
        panels *= 2;
        const auto current = composite_legendre(both, 0.0, t_max, panels);
        if (std::abs(current.real() - previous) <= 1e-13 * current.imag()) {
            return current.real() / std::numbers::pi;
        }
        previous = current.real();
    }
    throw ConvergenceError(what, previous / std::numbers::pi, previous / std::numbers::pi, 0.0);
}

/// u_{2n}(y, 1) = (1/pi) int_0^inf cos(t y) exp(-t^{2n}) dt, order = 2n >= 4.
/// The contour is moved onto the horizontal line through the saddle point of
/// i t y - t^{2n}, where the integrand no longer cancels catastrophically.
inline double even_kernel_unit(int order, double y) {
    y = std::abs(y);
    const double m = order;
    double c = 0.0;
    double log_size = 0.0;
    if (y > 0.0) {
        const double r = std::pow(y / m, 1.0 / (m - 1.0));
        c = r * std::sin(std::numbers::pi / (2.0 * (m - 1.0)));
        log_size = -c * y * (m - 1.0) / m;  // Re of the exponent at the saddle
    }
    if (log_size < -750.0) return 0.0;
    auto g = [&](std::complex<double> t) {
        const std::complex<double> i(0.0, 1.0);
        return std::exp(i * t * y - std::pow(t, order) - log_size);
    };
    // beyond t_max the factor exp(-t^m) is below e^{-40} relative to the saddle
    const double t_max = std::pow(40.0 + std::abs(log_size), 1.0 / m) + 2.0 * c + 1.0;
    return std::exp(log_size) * shifted_contour_integral(g, c, t_max, "even-order kernel quadrature");
}

/// V(y) = (1/2pi) int exp(i (xi^m - xi y)) d xi for odd m >= 3, so that the
/// order-m kernel with sign kappa at w = 1 is V(kappa y).
inline double odd_kernel_unit(int order, double y) {
    const double m = order;
    double c = 0.5;
    double log_size = 0.0;
    if (y < 0.0) {
        // complex saddle xi^{m-1} = y/m in the upper half plane
        const double r = std::pow(-y / m, 1.0 / (m - 1.0));
        const double c_saddle = r * std::sin(std::numbers::pi / (m - 1.0));
        if (c_saddle > c) {
            c = c_saddle;
            log_size = -c * (-y) * (m - 1.0) / m;
        }
        if (log_size < -750.0) return 0.0;
    } else if (y > 0.0) {
        // two real saddles: a shallow shift keeps exp(c y) at t = 0 bounded
        c = std::min(0.5, 1.0 / y);
    }
    auto g = [&](std::complex<double> t) {
        const std::complex<double> i(0.0, 1.0);
        return std::exp(i * (std::pow(t, order) - t * y) - log_size);
    };
    // |g| ~ exp(-m c t^{m-1} + c y - log_size); stop once that is below e^{-40}
    const double reach = (40.0 + c * std::max(y, 0.0)) / (m * c);
    const double t_max = std::pow(reach, 1.0 / (m - 1.0)) + c + 1.0;
    return std::exp(log_size) * shifted_contour_integral(g, c, t_max, "odd-order kernel quadrature");
}

}  // namespace detail

/// Kernel value u(x, w) for w > 0. Order 2 is the Gaussian, order 3 the
/// scaled Airy function Ai(-kappa x / (3w)^{1/3}) / (3w)^{1/3}; other orders
/// use contour-shifted Fourier inversion and the self-similarity
/// u(x, w) = w^{-1/order} u(x w^{-1/order}, 1).
inline double heat_kernel(const KernelSpec& spec, double x, double w) {
    if (!(w > 0.0)) throw DomainError("heat_kernel requires w > 0");
    if (!std::isfinite(x)) throw DomainError("heat_kernel requires finite x");
    const int order = spec.order();
    if (order == 2) return std::exp(-x * x / (4.0 * w)) / std::sqrt(4.0 * std::numbers::pi * w);
    if (order == 3) {
        const double s = std::cbrt(3.0 * w);
        return airy_ai(-spec.kappa() * x / s) / s;
    }
    const double scale = std::pow(w, 1.0 / order);
    const double y = x / scale;
    if (spec.is_even()) return detail::even_kernel_unit(order, y) / scale;
    return detail::odd_kernel_unit(order, spec.kappa() * y) / scale;
}

/// Signed total mass int u(x, w) dx. The decaying side is truncated at
/// R = 12 w^{1/order} + 12, widened when the saddle-point envelope of the
/// kernel is still above e^{-30} there; for odd orders the oscillating side
/// is summed lobe by lobe and the partial sums are extrapolated with Wynn's
/// epsilon.
inline double kernel_mass(const KernelSpec& spec, double w) {
    if (!(w > 0.0)) throw DomainError("kernel_mass requires w > 0");
    const int order = spec.order();
    const double m = order;
    const double scale = std::pow(w, 1.0 / order);
    // envelope exp(-a y^{m/(m-1)}) in y = x / scale; even orders use the
    // saddle angle pi/(2(m-1)), odd orders pi/(m-1)
    const double angle = std::numbers::pi / ((spec.is_even() ? 2.0 : 1.0) * (m - 1.0));
    const double envelope = std::sin(angle) * (m - 1.0) / m * std::pow(m, -1.0 / (m - 1.0));
    const double reach = std::max(12.0 * scale + 12.0,
                                  scale * std::pow(30.0 / envelope, (m - 1.0) / m));
    auto u = [&](double x) { return heat_kernel(spec, x, w); };

    if (spec.is_even()) {
        const int panels = 2 * static_cast<int>(std::ceil(reach / scale));
        return 2.0 * detail::composite_legendre(u, 0.0, reach, panels);
    }

    // oscillating side is kappa x > 0; lobes end where the stationary phase
    // ((m-1)/m) m^{-1/(m-1)} y^{m/(m-1)} reaches k pi, y = kappa x / scale
    const double phase_coef = (m - 1.0) / m * std::pow(m, -1.0 / (m - 1.0));
    auto lobe_end = [&](int k) {
        return scale * std::pow(k * std::numbers::pi / phase_coef, (m - 1.0) / m);
    };
    const double kappa = spec.kappa();
    auto u_oriented = [&](double s) { return u(kappa * s); };  // s > 0 oscillates

    const int decay_panels = 2 * static_cast<int>(std::ceil(reach / scale));
    const double decaying = detail::composite_legendre(u_oriented, -reach, 0.0, decay_panels);

    constexpr int lobes = 24;
    std::vector<double> partial;
    partial.reserve(lobes);
    double sum = decaying;
    double left = 0.0;
    for (int k = 1; k <= lobes; ++k) {
        const double right = lobe_end(k);
        sum += detail::composite_legendre(u_oriented, left, right, k == 1 ? 4 : 2);
        partial.push_back(sum);
        left = right;
    }
    return detail::wynn_epsilon(partial);
}

}  // namespace fracspec
