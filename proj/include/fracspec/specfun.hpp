#pragma once

// Scalar special functions behind every spectral and covariance formula:
// gamma, modified Bessel K, Airy Ai, and the one-sided and symmetric stable
// densities. All functions are pure and reentrant.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <utility>

#include "fracspec/detail/quadrature.hpp"
#include "fracspec/error.hpp"

namespace fracspec {

/// Exponent of a stable law. One-sided laws (subordinators) need
/// 0 < alpha <= 1, symmetric laws 0 < alpha <= 2.
class StableIndex {
public:
    static StableIndex one_sided(double alpha) {
        if (!(alpha > 0.0 && alpha <= 1.0)) {
            throw DomainError("one-sided stable index alpha out of (0,1]: " + std::to_string(alpha));
        }
        return StableIndex(alpha, true);
    }
    static StableIndex symmetric(double alpha) {
        if (!(alpha > 0.0 && alpha <= 2.0)) {
            throw DomainError("symmetric stable index alpha out of (0,2]: " + std::to_string(alpha));
        }
        return StableIndex(alpha, false);
    }

    double value() const noexcept { return alpha_; }
    bool is_one_sided() const noexcept { return one_sided_; }

private:
    StableIndex(double alpha, bool one_sided) : alpha_(alpha), one_sided_(one_sided) {}
    double alpha_;
    bool one_sided_;
};

/// A density value. `tail_warning` is set when the true value lies below
/// 1e-300 and 0 was returned instead.
struct Density {
    double value = 0.0;
    bool tail_warning = false;
};

inline constexpr double density_floor = 1e-300;

// ---------------------------------------------------------------------------
// Gamma

inline double gamma_fn(double x) {
    if (!(x > 0.0)) throw DomainError("gamma_fn requires x > 0, got " + std::to_string(x));
    const double g = std::tgamma(x);
    if (!std::isfinite(g)) throw OverflowError("gamma_fn overflows at x = " + std::to_string(x));
    return g;
}

// ---------------------------------------------------------------------------
// Modified Bessel function of the second kind

namespace detail {

inline double log_cosh(double u) {
    u = std::abs(u);
    return u + std::log1p(std::exp(-2.0 * u)) - std::numbers::ln2;
}

}  // namespace detail

/// log K_nu(x) from K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt.
/// The integrand is even and analytic in t, so the trapezoid rule converges
/// geometrically; the step is halved until successive sums agree to 1e-14.
inline double log_bessel_k(double nu, double x) {
    if (!(x > 0.0)) throw DomainError("bessel_k requires x > 0, got " + std::to_string(x));
    if (!std::isfinite(nu)) throw DomainError("bessel_k requires a finite order");
    nu = std::abs(nu);

    auto g = [&](double t) { return -x * std::cosh(t) + detail::log_cosh(nu * t); };
    auto dg = [&](double t) { return -x * std::sinh(t) + nu * std::tanh(nu * t); };

    double peak = 0.0;
    if (nu * nu > x) {
        double lo = 0.0;
        double hi = std::asinh(nu / x) + 1.0;
        for (int i = 0; i < 200 && hi - lo > 1e-15 * (1.0 + hi); ++i) {
            const double mid = 0.5 * (lo + hi);
            (dg(mid) > 0.0 ? lo : hi) = mid;
        }
        peak = 0.5 * (lo + hi);
    }
    const double g_peak = g(peak);

    double reach = 0.25;
    while (g(peak + reach) > g_peak - 46.0) reach *= 2.0;
    const double t_max = peak + reach;

    const double curvature = std::abs(-x * std::cosh(peak) +
                                      nu * nu / std::pow(std::cosh(nu * peak), 2));
    double step = std::min(0.5, 0.5 / std::sqrt(std::max(curvature, 1e-300)));
    step = std::min(step, t_max / 8.0);

    auto weight = [&](double t) { return std::exp(g(t) - g_peak); };

    // the exponent is only known to about eps * |g_peak|, which bounds the attainable accuracy
    const double tol = std::max(1e-14, 8.0 * std::numeric_limits<double>::epsilon() * std::abs(g_peak));
    double sum = 0.5 * weight(0.0);
    for (long i = 1; i * step <= t_max; ++i) sum += weight(i * step);
    double estimate = step * sum;
    for (int level = 0; level < 20; ++level) {
        double odd = 0.0;
        for (long i = 0; (i + 0.5) * step <= t_max; ++i) odd += weight((i + 0.5) * step);
        const double refined = 0.5 * estimate + 0.5 * step * odd;
        step *= 0.5;
        const bool done = std::abs(refined - estimate) <= tol * refined;
        estimate = refined;
        if (done && level > 0) return g_peak + std::log(estimate);
    }
    throw ConvergenceError("bessel_k trapezoid did not converge", estimate, estimate, 0.0);
}

/// K_nu(x) for real nu and x > 0. Throws OverflowError instead of returning inf.
inline double bessel_k(double nu, double x) {
    const double log_k = log_bessel_k(nu, x);
    if (log_k > std::log(std::numeric_limits<double>::max())) {
        throw OverflowError("bessel_k(" + std::to_string(nu) + ", " + std::to_string(x) +
                            ") exceeds double range");
    }
    return std::exp(log_k);
}

/// int_0^inf x^(nu-1) exp(-b x^p - a x^-p) dx by adaptive quadrature in log x.
/// Equals (2/p) (a/b)^(nu/2p) K_{nu/p}(2 sqrt(ab)); kept independent of bessel_k
/// so each can check the other.
inline double bessel_k_power_integral(double nu, double p, double a, double b) {
    if (!(p > 0.0 && a > 0.0 && b > 0.0)) {
        throw DomainError("bessel_k_power_integral requires p, a, b > 0");
    }
    // exponent after x = e^u: nu u - b e^{pu} - a e^{-pu}; its maximiser is closed form
    const double y = (nu + std::sqrt(nu * nu + 4.0 * a * b * p * p)) / (2.0 * b * p);
    const double u_peak = std::log(y) / p;
    auto exponent = [&](double u) {
        return nu * u - b * std::exp(p * u) - a * std::exp(-p * u);
    };
    const double e_peak = exponent(u_peak);

    double left = 1.0;
    while (exponent(u_peak - left) > e_peak - 60.0) left *= 2.0;
    double right = 1.0;
    while (exponent(u_peak + right) > e_peak - 60.0) right *= 2.0;

    auto integrand = [&](double u) { return std::exp(exponent(u) - e_peak); };
    const auto lo = detail::adaptive(integrand, u_peak - left, u_peak, 1e-14, 0.0, 18,
                                     "bessel_k_power_integral quadrature");
    const auto hi = detail::adaptive(integrand, u_peak, u_peak + right, 1e-14, 0.0, 18,
                                     "bessel_k_power_integral quadrature");
    const double log_value = e_peak + std::log(lo.value + hi.value);
    if (log_value > std::log(std::numeric_limits<double>::max())) {
        throw OverflowError("bessel_k_power_integral exceeds double range");
    }
    return std::exp(log_value);
}

// ---------------------------------------------------------------------------
// Airy function

namespace detail {

inline constexpr double airy_ai0 = 0.355028053887817239260063186004;   // 3^{-2/3}/Gamma(2/3)
inline constexpr double airy_aip0 = -0.258819403792806798405183560189; // -3^{-1/3}/Gamma(1/3)

/// Taylor expansion of the Airy equation y'' = x y about x0, stepping by d.
/// Returns {y(x0 + d), y'(x0 + d)}.
template <class Real>
std::array<Real, 2> airy_taylor(Real x0, Real y0, Real dy0, Real d, Real eps) {
    Real a_prev2 = 0;  // a_{k-1}
    Real a_prev = y0;  // a_k with k = 0
    Real a_cur = dy0;  // a_{k+1}
    Real value = y0 + dy0 * d;
    Real slope = dy0;
    Real d_pow = d;  // d^{k+1}
    int quiet = 0;
    for (int k = 0; k < 2000; ++k) {
        // a_{k+2} from (k+2)(k+1) a_{k+2} = x0 a_k + a_{k-1}
        const Real a_next = (x0 * a_prev + a_prev2) / Real((k + 1) * (k + 2));
        const Real slope_term = Real(k + 2) * a_next * d_pow;
        d_pow *= d;
        const Real term = a_next * d_pow;
        value += term;
        slope += slope_term;
        a_prev2 = a_prev;
        a_prev = a_cur;
        a_cur = a_next;
        using std::abs;
        const Real scale = abs(value) + abs(slope) + Real(1e-300);
        if (abs(term) + abs(slope_term) <= eps * scale) {
            if (++quiet >= 3) break;
        } else {
            quiet = 0;
        }
    }
    return {value, slope};
}

/// Knots at x = -4, -4.25, ..., -15 with Ai and Ai' computed once from the
/// Maclaurin series in 113-bit arithmetic, which absorbs the series'
/// cancellation on the oscillatory side.
struct AiryKnots {
    static constexpr double start = -4.0;
    static constexpr double spacing = 0.25;
    static constexpr int count = 45;
    std::array<double, count> value{};
    std::array<double, count> slope{};

    static const AiryKnots& get() {
        static const AiryKnots knots = [] {
            using Quad = boost::multiprecision::cpp_bin_float_quad;
            AiryKnots k;
            const Quad ai0("0.355028053887817239260063186004183176397979174199");
            const Quad aip0("-0.258819403792806798405183560189203963479091138354");
            for (int j = 0; j < count; ++j) {
                const Quad x = Quad(start) - Quad(spacing) * j;
                const auto r = airy_taylor<Quad>(Quad(0), ai0, aip0, x, Quad(1e-34));
                k.value[j] = static_cast<double>(r[0]);
                k.slope[j] = static_cast<double>(r[1]);
            }
            return k;
        }();
        return knots;
    }
};

/// Modulus-phase asymptotic expansion for Ai(-x), Ai'(-x), x >= 15.
inline std::array<double, 2> airy_negative_asymptotic(double x) {
    const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
    // u_k = (2k+1)(2k+3)...(6k-1) / (216^k k!),  v_k = -(6k+1)/(6k-1) u_k
    double p = 0.0, q = 0.0, r = 0.0, s = 0.0;
    double u = 1.0;
    double zpow = 1.0;
    double last = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 200; ++k) {
        if (k > 0) {
            u *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / ((2.0 * k - 1.0) * 216.0 * k);
            zpow /= zeta;
        }
        const double v = k == 0 ? 1.0 : -(6.0 * k + 1.0) / (6.0 * k - 1.0) * u;
        const double term = u * zpow;
        if (std::abs(term) > last) break;  // asymptotic series: stop at the smallest term
        last = std::abs(term);
        const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
        if (k % 2 == 0) {
            p += sign * term;
            r += sign * v * zpow;
        } else {
            q += sign * term;
            s += sign * v * zpow;
        }
        if (std::abs(term) < 1e-18) break;
    }
    const double phase = zeta + std::numbers::pi / 4.0;
    const double sn = std::sin(phase);
    const double cs = std::cos(phase);
    const double root = std::sqrt(std::sqrt(x));
    const double inv_sqrt_pi = std::numbers::inv_sqrtpi;
    const double ai = inv_sqrt_pi / root * (sn * p - cs * q);
    const double aip = -inv_sqrt_pi * root * (cs * r + sn * s);
    return {ai, aip};
}

inline std::array<double, 2> airy_pair(double x) {
    if (std::isnan(x)) return {x, x};
    if (x > 4.0) {
        // Ai(x) = sqrt(x/3)/pi K_{1/3}(zeta), Ai'(x) = -x/(pi sqrt 3) K_{2/3}(zeta)
        const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
        if (zeta > 745.0) return {0.0, 0.0};
        const double ai = std::exp(log_bessel_k(1.0 / 3.0, zeta) + 0.5 * std::log(x / 3.0)) /
                          std::numbers::pi;
        const double aip = -std::exp(log_bessel_k(2.0 / 3.0, zeta) + std::log(x)) /
                           (std::numbers::pi * std::numbers::sqrt3);
        return {ai, aip};
    }
    if (x >= -4.0) {
        return airy_taylor<double>(0.0, airy_ai0, airy_aip0, x, 1e-17);
    }
    if (x >= -15.0) {
        const auto& knots = AiryKnots::get();
        const int j = std::clamp(
            static_cast<int>(std::lround((AiryKnots::start - x) / AiryKnots::spacing)), 0,
            AiryKnots::count - 1);
        const double x0 = AiryKnots::start - AiryKnots::spacing * j;
        return airy_taylor<double>(x0, knots.value[j], knots.slope[j], x - x0, 1e-17);
    }
    return airy_negative_asymptotic(-x);
}

}  // namespace detail

/// Airy function Ai(x) for all real x. Maclaurin series on [-4, 4], Bessel-K
/// quadrature for x > 4, Taylor steps from precomputed knots on [-15, -4) and
/// the modulus-phase expansion below -15.
inline double airy_ai(double x) { return detail::airy_pair(x)[0]; }

/// Derivative Ai'(x), computed alongside Ai on every branch.
inline double airy_ai_prime(double x) { return detail::airy_pair(x)[1]; }

// ---------------------------------------------------------------------------
// Stable densities

namespace detail {

/// Integrates exp(log_f(t, hi - t) - peak) over [lo, hi] split at `split`,
/// where `peak` is the maximum of log_f. Returns log of the integral.
/// `exponent_size` is the magnitude of the terms cancelling inside log_f at
/// the peak; their rounding sets the attainable relative accuracy.
template <class LogF>
double log_peaked_integral(LogF&& log_f, double lo, double split, double hi, double peak,
                           double exponent_size) {
    const double tol =
        std::max(1e-11, 64.0 * std::numeric_limits<double>::epsilon() * (1.0 + exponent_size));
    auto left = [&](double t) {
        const double v = log_f(t, hi - t) - peak;
        return std::isfinite(v) ? std::exp(v) : 0.0;
    };
    // the upper segment runs in the distance to hi, which stays exact near hi
    auto right = [&](double to_hi) {
        const double v = log_f(hi - to_hi, to_hi) - peak;
        return std::isfinite(v) ? std::exp(v) : 0.0;
    };
    double total = 0.0;
    if (split > lo) total += endpoint_singular(left, lo, split, tol, "stable density quadrature").value;
    if (hi > split) {
        total += endpoint_singular(right, 0.0, hi - split, tol, "stable density quadrature").value;
    }
    return peak + std::log(total);
}

/// Bisection for the root of a monotone function on (lo, hi).
template <class F>
double bisect(F&& f, double lo, double hi) {
    const bool rising = f(hi) > f(lo);
    for (int i = 0; i < 200 && hi - lo > 1e-15 * std::abs(hi); ++i) {
        const double mid = 0.5 * (lo + hi);
        const bool above = f(mid) > 0.0;
        ((above == rising) ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

/// Unit-scale one-sided stable density (Laplace transform exp(-xi^alpha)) at x > 0,
/// from Kanter's integral over phi in (0, pi):
///   h(x) = alpha / ((1-alpha) pi) x^{-1/(1-alpha)} int A(phi) exp(-x^{-alpha/(1-alpha)} A(phi)) dphi
inline double log_onesided_unit(double alpha, double x) {
    const double e = alpha / (1.0 - alpha);
    const double inv = 1.0 / (1.0 - alpha);
    const double log_scale = -e * std::log(x);  // log of x^{-alpha/(1-alpha)}
    const double pi = std::numbers::pi;

    // near pi, sin(phi) is taken as sin(pi - phi) so the singular end keeps full precision
    auto log_a = [&](double phi, double to_pi) {
        const double sin_phi = std::sin(phi < to_pi ? phi : to_pi);
        return e * std::log(std::sin(alpha * phi)) + std::log(std::sin((1.0 - alpha) * phi)) -
               inv * std::log(sin_phi);
    };
    // log of A(phi) exp(-X A(phi))
    auto log_f = [&](double phi, double to_pi) {
        const double la = log_a(phi, to_pi);
        if (la + log_scale > 700.0) return -std::numeric_limits<double>::infinity();
        return la - std::exp(la + log_scale);
    };
    const double log_a0 = e * std::log(alpha) + std::log(1.0 - alpha);  // A(0+)

    double split = pi;
    double peak = 0.0;
    double size = 1.0;
    if (log_a0 + log_scale < 0.0) {
        // A increases from A(0+) to infinity; peak where X A = 1
        split = bisect([&](double phi) { return log_a(phi, pi - phi) + log_scale; }, 1e-300, pi);
        peak = -log_scale - 1.0;
    } else {
        size = std::exp(log_a0 + log_scale);
        peak = log_a0 - size;
        // A exp(-X A) <= A(0+) exp(-X A(0+)) here, which bounds the whole integral
        const double bound = std::log(alpha / (1.0 - alpha)) - inv * std::log(x) + peak;
        if (bound < -800.0) return -std::numeric_limits<double>::infinity();
    }
    const double log_integral =
        log_peaked_integral(log_f, 0.0, split, pi, peak, std::max(size, std::abs(log_scale)));
    return std::log(alpha / ((1.0 - alpha) * pi)) - inv * std::log(x) + log_integral;
}

/// Unit-scale symmetric stable density with characteristic function exp(-|xi|^a), y > 0,
/// from Zolotarev's integral over theta in (0, pi/2) (a != 1):
///   g(y) = a y^{1/(a-1)} / (pi |a-1|) int V exp(-y^{a/(a-1)} V) dtheta
///   V(theta) = (cos theta / sin(a theta))^{a/(a-1)} cos((a-1) theta) / cos theta
inline double log_symmetric_unit_zolotarev(double a, double y) {
    const double e = a / (a - 1.0);
    const double log_scale = e * std::log(y);
    const double half_pi = std::numbers::pi / 2.0;

    // near pi/2, cos(theta) is taken as sin(pi/2 - theta), and for a > 1
    // sin(a theta) as sin(pi - a theta), so that end keeps full precision
    auto log_v = [&](double th, double to_end) {
        const bool upper = th > to_end;
        const double c = upper ? std::sin(to_end) : std::cos(th);
        const double s = (upper && a > 1.0) ? std::sin((2.0 - a) * half_pi + a * to_end)
                                            : std::sin(a * th);
        return e * (std::log(c) - std::log(s)) + std::log(std::cos((a - 1.0) * th)) - std::log(c);
    };
    auto log_f = [&](double th, double to_end) {
        const double lv = log_v(th, to_end);
        if (!std::isfinite(lv) || lv + log_scale > 700.0) {
            return -std::numeric_limits<double>::infinity();
        }
        return lv - std::exp(lv + log_scale);
    };
    // V runs monotonically between 0 and infinity over the interval, so YV = 1 is crossed once
    auto crossing = [&](double th) { return log_v(th, half_pi - th) + log_scale; };
    const double lo = 1e-12;
    const double hi = half_pi - 1e-12;
    double split = lo;
    if ((crossing(lo) > 0.0) != (crossing(hi) > 0.0)) split = bisect(crossing, lo, hi);
    const double peak = -log_scale - 1.0;
    const double log_integral =
        log_peaked_integral(log_f, 0.0, split, half_pi, peak, std::abs(log_scale));
    return std::log(a / (std::numbers::pi * std::abs(a - 1.0))) + std::log(y) / (a - 1.0) +
           log_integral;
}

/// (1/pi) int_0^inf cos(xi y) exp(-xi^a) dxi, used near a = 1 where the
/// Zolotarev kernel degenerates.
inline double symmetric_unit_fourier(double a, double y) {
    auto f = [&](double xi) { return std::cos(xi * y) * std::exp(-std::pow(xi, a)); };
    const double reach = std::pow(60.0, 1.0 / a);
    const int pieces = std::max(1, static_cast<int>(std::ceil(reach * y / std::numbers::pi)));
    const double width = reach / pieces;
    // the xi^a cusp sits at the origin; later pieces are smooth half-periods
    double total = endpoint_singular(f, 0.0, width, 1e-13, "symmetric stable Fourier inversion").value;
    for (int i = 1; i < pieces; ++i) total += composite_legendre(f, i * width, (i + 1) * width, 2);
    return total / std::numbers::pi;
}

/// Sums term(k) = {value, magnitude bound}, k = first..; empty when the
/// bounds stop shrinking before reaching double precision.
template <class Term>
std::optional<double> settled_series(Term&& term, int first) {
    double sum = 0.0;
    double previous = std::numeric_limits<double>::infinity();
    for (int k = first; k < first + 60; ++k) {
        const auto [t, bound] = term(k);
        if (!std::isfinite(bound)) return std::nullopt;
        sum += t;
        if (bound <= 1e-17 * std::abs(sum)) return sum;
        if (bound >= previous) return std::nullopt;
        previous = bound;
    }
    return std::nullopt;
}

/// Large-y expansion: (1/pi) sum_k (-1)^{k+1} Gamma(ak+1)/k! sin(pi a k/2) y^{-ak-1}.
inline std::optional<double> symmetric_unit_tail(double a, double y) {
    const double log_y = std::log(y);
    return settled_series(
        [&](int k) {
            const double s = std::sin(std::numbers::pi * a * k / 2.0);
            const double bound =
                std::exp(std::lgamma(a * k + 1.0) - std::lgamma(k + 1.0) - (a * k + 1.0) * log_y) / std::numbers::pi;
            return std::pair{(k % 2 == 1 ? 1.0 : -1.0) * s * bound, bound};
        },
        1);
}

/// Small-y expansion: (1/(pi a)) sum_k (-1)^k Gamma((2k+1)/a) y^{2k} / (2k)!.
inline std::optional<double> symmetric_unit_origin(double a, double y) {
    const double log_y = std::log(y);
    return settled_series(
        [&](int k) {
            const double bound = std::exp(std::lgamma((2.0 * k + 1.0) / a) - std::lgamma(2.0 * k + 1.0) +
                                          2.0 * k * log_y) /
                                 (std::numbers::pi * a);
            return std::pair{(k % 2 == 0 ? 1.0 : -1.0) * bound, bound};
        },
        0);
}

inline double symmetric_unit(double a, double y) {
    y = std::abs(y);
    const double pi = std::numbers::pi;
    if (a == 2.0) return std::exp(-y * y / 4.0) / std::sqrt(4.0 * pi);
    if (a == 1.0) return 1.0 / (pi * (1.0 + y * y));
    if (y == 0.0) return std::tgamma(1.0 + 1.0 / a) / pi;
    if (a > 1.0 && y < 0.5) {
        // convergent power series for a > 1
        double sum = 0.0;
        double y2k = 1.0;
        double fact = 1.0;  // (2k)!
        for (int k = 0; k < 60; ++k) {
            if (k > 0) {
                y2k *= y * y;
                fact *= (2.0 * k - 1.0) * (2.0 * k);
            }
            const double term = std::tgamma((2.0 * k + 1.0) / a) * y2k / fact;
            sum += (k % 2 == 0 ? term : -term);
            if (term < 1e-18 * std::abs(sum)) break;
        }
        return sum / (pi * a);
    }
    if (y > 20.0) {
        if (const auto v = symmetric_unit_tail(a, y)) return *v;
    }
    if (a < 1.0 && y < 0.05) {
        if (const auto v = symmetric_unit_origin(a, y)) return *v;
    }
    if (std::abs(a - 1.0) < 0.02) return symmetric_unit_fourier(a, y);
    return std::exp(log_symmetric_unit_zolotarev(a, y));
}

}  // namespace detail

/// Density h_alpha(z, s) of a stable subordinator at time s, i.e. the law
/// with Laplace transform exp(-s xi^alpha), 0 < alpha < 1.
inline Density onesided_stable_density(StableIndex alpha, double z, double s) {
    if (!alpha.is_one_sided()) throw DomainError("onesided_stable_density needs a one-sided index");
    const double a = alpha.value();
    if (!(a < 1.0)) {
        throw DomainError("onesided_stable_density requires alpha < 1 (alpha = 1 is a point mass)");
    }
    if (!(z > 0.0)) throw DomainError("onesided_stable_density requires z > 0");
    if (!(s > 0.0)) throw DomainError("onesided_stable_density requires s > 0");
    // h(z, s) = s^{-1/alpha} h(z s^{-1/alpha}, 1)
    const double log_s_scale = std::log(s) / a;
    const double log_value = detail::log_onesided_unit(a, std::exp(std::log(z) - log_s_scale)) -
                             log_s_scale;
    if (!(log_value > std::log(density_floor))) return {0.0, true};
    return {std::exp(log_value), false};
}

/// Density at x of the symmetric stable law with characteristic function
/// exp(-scale |xi|^a w).
inline Density symmetric_stable_density(StableIndex a, double scale, double x, double w) {
    if (a.is_one_sided() && a.value() > 1.0) throw DomainError("symmetric index expected");
    if (!(scale > 0.0)) throw DomainError("symmetric_stable_density requires scale > 0");
    if (!(w > 0.0)) throw DomainError("symmetric_stable_density requires w > 0");
    const double index = a.value();
    const double spread = std::pow(scale * w, 1.0 / index);
    const double value = detail::symmetric_unit(index, std::abs(x) / spread) / spread;
    if (!(value > density_floor)) return {0.0, true};
    return {value, false};
}

}  // namespace fracspec
