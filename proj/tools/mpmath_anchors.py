#!/usr/bin/env python3
"""Reference values for the unit tests, computed with mpmath at 40 digits.

The tests embed these numbers as literals; rerun this script to regenerate
them. Covariances use Cov(h) = (1/2pi) int e^{-i tau h} f(tau) dtau with the
spectral densities written out directly here.
"""

import mpmath as mp

mp.mp.dps = 40


def show(label, value):
    print(f"{label:52s} {mp.nstr(value, 20)}")


def half_line(g, h):
    """int_0^inf g; the first period goes to tanh-sinh, which handles the
    tau^alpha branch point at 0 that quadosc alone resolves poorly."""
    if h == 0:
        return mp.quad(g, [0, 1, 10, mp.inf])
    a = mp.pi / abs(h)
    return mp.quad(g, mp.linspace(0, a, 5)) + mp.quadosc(g, [a, mp.inf], omega=abs(h))


def cov_real(f, h):
    """(1/pi) int_0^inf cos(tau h) f(tau) dtau for an even real f."""
    return half_line(lambda t: mp.cos(t * h) * f(t), h) / mp.pi


def cov_odd(f, h):
    """(1/pi) int_0^inf Re[e^{-i tau h} f(tau)] dtau for Hermitian f."""
    return half_line(lambda t: mp.re(mp.exp(-1j * t * h) * f(t)), h) / mp.pi


def weyl(mu, beta, alpha):
    c = mp.cos(mp.pi * alpha / 2)
    return lambda t: (mu**2 + 2 * mu * t**alpha * c + t**(2 * alpha)) ** (-beta)


def even(mu, beta, n):
    return lambda t: (mu + t**(2 * n)) ** (-2 * beta)


def odd(mu, beta, n, kappa):
    return lambda t: (mu - 1j * kappa * t**(2 * n + 1)) ** (-2 * beta)


def main():
    for nu, x in [(0.5, 1), (1, 0.1), (2.5, 3), (0.3, 20), (-0.7, 2), (10, 1)]:
        show(f"besselk({nu}, {x})", mp.besselk(nu, x))
    for x in [-30, -10, -4.5, -1, 0, 1, 2.5, 5, 10]:
        show(f"airyai({x})", mp.airyai(x))
        show(f"airyai'({x})", mp.airyai(x, derivative=1))
    show("bessel_k_power_integral(1, 2, 1, 1)", mp.quad(lambda x: mp.exp(-x**2 - 1 / x**2), [0, 1, mp.inf]))
    for y in [0, 0.5, 2, 10]:
        show(f"symmetric unit a=1.5 y={y}",
             mp.quadosc(lambda t: mp.cos(t * y) * mp.exp(-t**1.5), [0, mp.inf], omega=max(y, 1)) / mp.pi)
    for x in [0, 1, 3]:
        show(f"u_4({x}, 1)", mp.quadosc(lambda t: mp.cos(t * x) * mp.exp(-t**4), [0, mp.inf], omega=max(x, 1)) / mp.pi)
    for y in [-2, 0, 1.5]:
        # V(y) = (1/pi) int_0^inf cos(t^5 - t y) dt
        show(f"odd unit m=5 y={y}",
             mp.quad(lambda t: mp.re(mp.exp(1j * ((t + 0.4j)**5 - (t + 0.4j) * y))), [0, 1, 2, 4, 8]) / mp.pi)
    for h in [1, 5]:
        show(f"cov weyl(1, 0.75, 0.5) h={h}", cov_real(weyl(1, 0.75, 0.5), h))
    show("cov weyl(1, 1, 0.7) h=0.5", cov_real(weyl(1, 1, 0.7), 0.5))
    show("cov weyl(1, 2, 0.5) h=0", cov_real(weyl(1, 2, 0.5), 0))
    for h in [0, 1, 5]:
        show(f"cov even(1, 1, n=2) h={h}", cov_real(even(1, 1, 2), h))
    for h in [1, -1, 5]:
        show(f"cov odd(1, 1, n=1, kappa=-1) h={h}", cov_odd(odd(1, 1, 1, -1), h))
    show("cov odd(1, 0.75, n=1, kappa=1) h=2", cov_odd(odd(1, 0.75, 1, 1), 2))


if __name__ == "__main__":
    main()
