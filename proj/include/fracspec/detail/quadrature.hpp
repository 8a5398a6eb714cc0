#pragma once

// Integration helpers shared by every module. Adaptive work is delegated to
// Boost.Math's Gauss-Kronrod; fixed composite rules use a 32-point
// Gauss-Legendre panel built once from Boost's Legendre zeros.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/legendre.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fracspec/error.hpp"

namespace fracspec::detail {

struct Integral {
    double value = 0.0;
    double error = 0.0;
    double l1 = 0.0;  // integral of |f|, used for relative tolerance decisions
};

/// One 21-point Gauss-Kronrod panel on a finite [a, b].
template <class F>
Integral kronrod_panel(F&& f, double a, double b) {
    using boost::math::quadrature::gauss_kronrod;
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    auto g = [&](double t) { return f(mid + half * t); };
    Integral out;
    out.value = half * gauss_kronrod<double, 21>::integrate(g, -1.0, 1.0, 0, 0.0, &out.error, &out.l1);
    out.error *= std::abs(half);
    out.l1 *= std::abs(half);
    return out;
}

/// Globally adaptive Gauss-Kronrod: the panel with the largest error is
/// bisected until the summed error meets rel_tol * L1, or a panel would fall
/// below 2^-max_depth of the original width.
template <class F>
Integral kronrod_finite(F&& f, double a, double b, unsigned max_depth, double rel_tol) {
    struct Panel {
        double a, b;
        Integral r;
        unsigned depth;
    };
    auto worse = [](const Panel& x, const Panel& y) { return x.r.error < y.r.error; };
    std::vector<Panel> heap{{a, b, kronrod_panel(f, a, b), 0}};
    Integral total = heap.front().r;
    constexpr std::size_t max_panels = 4096;
    while (total.error > rel_tol * total.l1 && heap.size() < max_panels) {
        std::pop_heap(heap.begin(), heap.end(), worse);
        const Panel p = heap.back();
        if (p.depth >= max_depth) {
            heap.back() = p;
            std::push_heap(heap.begin(), heap.end(), worse);
            break;
        }
        heap.pop_back();
        const double mid = 0.5 * (p.a + p.b);
        total.error -= p.r.error;
        total.l1 -= p.r.l1;
        for (auto [lo, hi] : {std::pair{p.a, mid}, std::pair{mid, p.b}}) {
            const Panel child{lo, hi, kronrod_panel(f, lo, hi), p.depth + 1};
            total.error += child.r.error;
            total.l1 += child.r.l1;
            heap.push_back(child);
            std::push_heap(heap.begin(), heap.end(), worse);
        }
    }
    // resum in one pass so cancellation in the running totals does not linger
    total = {};
    for (const auto& q : heap) {
        total.value += q.r.value;
        total.error += q.r.error;
        total.l1 += q.r.l1;
    }
    return total;
}

/// Adaptive Gauss-Kronrod with infinite limits mapped onto finite ones.
template <class F>
void kronrod(F&& f, double a, double b, unsigned max_depth, double rel_tol, Integral& out) {
    const bool lo_inf = std::isinf(a), hi_inf = std::isinf(b);
    if (!lo_inf && !hi_inf) {
        out = kronrod_finite(f, a, b, max_depth, rel_tol);
    } else if (lo_inf && hi_inf) {
        // x = t / (1 - t^2)
        auto g = [&](double t) {
            const double d = 1.0 - t * t;
            if (d <= 0.0) return 0.0;
            return f(t / d) * (1.0 + t * t) / (d * d);
        };
        out = kronrod_finite(g, -1.0, 1.0, max_depth, rel_tol);
    } else if (hi_inf) {
        // x = a + t / (1 - t)
        auto g = [&](double t) {
            const double d = 1.0 - t;
            if (d <= 0.0) return 0.0;
            return f(a + t / d) / (d * d);
        };
        out = kronrod_finite(g, 0.0, 1.0, max_depth, rel_tol);
    } else {
        // x = b - t / (1 - t)
        auto g = [&](double t) {
            const double d = 1.0 - t;
            if (d <= 0.0) return 0.0;
            return f(b - t / d) / (d * d);
        };
        out = kronrod_finite(g, 0.0, 1.0, max_depth, rel_tol);
    }
}

/// Adaptive 21-point Gauss-Kronrod on [a, b]; infinite limits are allowed.
/// Throws ConvergenceError when the error estimate misses both tolerances.
template <class F>
Integral adaptive(F&& f, double a, double b, double rel_tol = 1e-12, double abs_tol = 0.0,
                  unsigned max_depth = 18, const char* what = "adaptive quadrature") {
    Integral out;
    kronrod(f, a, b, max_depth, rel_tol, out);
    // The Kronrod-minus-Gauss estimate is pessimistic for smooth integrands,
    // so only a gross miss is treated as failure.
    const double target = std::max(rel_tol * out.l1, abs_tol);
    if (!std::isfinite(out.value) || out.error > 100.0 * target + 1e-300) {
        throw ConvergenceError(what, out.value, out.value - out.error, out.error);
    }
    return out;
}

/// Tanh-sinh quadrature on a finite [a, b], for integrands with algebraic or
/// logarithmic behaviour at the endpoints. Nodes closest to a non-zero
/// endpoint may round onto it, so f must accept the endpoints themselves.
template <class F>
Integral endpoint_singular(F&& f, double a, double b, double rel_tol = 1e-12,
                           const char* what = "tanh-sinh quadrature") {
    thread_local boost::math::quadrature::tanh_sinh<double> rule(15);
    Integral out;
    auto g = [&](double x, double) { return f(x); };
    out.value = rule.integrate(g, a, b, rel_tol, &out.error, &out.l1);
    out.error *= 0.5 * (b - a);  // boost reports the error of the rule mapped onto [-1, 1]
    if (!std::isfinite(out.value) || out.error > 100.0 * rel_tol * out.l1 + 1e-300) {
        throw ConvergenceError(what, out.value, out.value - out.error, out.error);
    }
    return out;
}

/// 32-point Gauss-Legendre rule on [-1, 1]; built once, immutable afterwards.
struct LegendrePanel {
    static constexpr int size = 32;
    std::array<double, size> nodes{};
    std::array<double, size> weights{};

    static const LegendrePanel& get() {
        static const LegendrePanel panel = [] {
            LegendrePanel p;
            const auto zeros = boost::math::legendre_p_zeros<double>(size);  // nonnegative half
            int k = 0;
            for (auto it = zeros.rbegin(); it != zeros.rend(); ++it, ++k) {
                const double x = *it;
                const double dp = boost::math::legendre_p_prime(size, x);
                const double w = 2.0 / ((1.0 - x * x) * dp * dp);
                p.nodes[k] = -x;
                p.weights[k] = w;
                p.nodes[size - 1 - k] = x;
                p.weights[size - 1 - k] = w;
            }
            return p;
        }();
        return panel;
    }
};

/// Composite Gauss-Legendre over [a, b] with `panels` equal panels.
template <class F>
auto composite_legendre(F&& f, double a, double b, int panels) {
    const auto& rule = LegendrePanel::get();
    using R = decltype(f(a));
    R sum{};
    const double width = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * width;
        const double mid = lo + 0.5 * width;
        R panel_sum{};
        for (int i = 0; i < LegendrePanel::size; ++i) {
            panel_sum += rule.weights[i] * f(mid + 0.5 * width * rule.nodes[i]);
        }
        sum += 0.5 * width * panel_sum;
    }
    return sum;
}

/// Gauss-Legendre on one panel [a, b].
template <class F>
auto legendre_panel(F&& f, double a, double b) {
    return composite_legendre(std::forward<F>(f), a, b, 1);
}

/// Wynn epsilon acceleration of a sequence of partial sums. Returns the
/// last diagonal estimate; the sequence should hold at least three entries.
inline double wynn_epsilon(std::span<const double> partial_sums) {
    const std::size_t n = partial_sums.size();
    if (n == 0) return 0.0;
    if (n < 3) return partial_sums[n - 1];
    std::vector<double> prev(n + 1, 0.0);
    std::vector<double> cur(partial_sums.begin(), partial_sums.end());
    double best = cur.back();
    double best_delta = std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; cur.size() > 1; ++k) {
        std::vector<double> next(cur.size() - 1);
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            const double diff = cur[i + 1] - cur[i];
            // a repeated entry means the column has converged
            if (std::abs(diff) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(cur[i + 1])) {
                return k % 2 == 1 ? cur[i + 1] : best;
            }
            next[i] = prev[i + 1] + 1.0 / diff;
        }
        prev.assign(cur.begin(), cur.end());
        cur = std::move(next);
        // even columns hold the extrapolated sums
        if (k % 2 == 0 && cur.size() >= 2) {
            const double delta = std::abs(cur[cur.size() - 1] - cur[cur.size() - 2]);
            if (std::isfinite(cur.back()) && delta < best_delta) {
                best_delta = delta;
                best = cur.back();
            }
        }
    }
    return best;
}

}  // namespace fracspec::detail
