#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "fracspec/gamma_quadrature.hpp"

using namespace fracspec;

TEST(GammaRule, MomentsAndLaplaceTransform) {
    for (double shape : {0.5, 1.5, 4.0})
        for (double rate : {0.7, 2.0}) {
            const auto rule = gamma_quadrature(shape, rate);
            double total = 0.0;
            for (double w : rule.weights) total += w;
            EXPECT_NEAR(total, 1.0, 1e-14);
            EXPECT_NEAR(rule.expect([](double w) { return w; }), shape / rate, 1e-12);
            EXPECT_NEAR(rule.expect([](double w) { return w * w; }), shape * (shape + 1.0) / (rate * rate), 1e-11);
            EXPECT_NEAR(rule.expect([](double w) { return std::exp(-w); }), std::pow(rate / (rate + 1.0), shape), 1e-13);
        }
}

TEST(GammaRule, RejectsBadParameters) {
    EXPECT_THROW(gamma_quadrature(0.0, 1.0), ValidationError);
    EXPECT_THROW(gamma_quadrature(1.0, -1.0), ValidationError);
    EXPECT_THROW(gamma_quadrature(1.0, 1.0, 4), ValidationError);
}

TEST(GammaExpectation, NegativePowerMoment) {
    // E[W^{-p}] = rate^p Gamma(shape - p) / Gamma(shape)
    for (double shape : {0.8, 2.0})
        for (double p : {0.3, 0.7}) {
            if (p >= shape) continue;
            const double rate = 1.7;
            const double exact = std::pow(rate, p) * std::tgamma(shape - p) / std::tgamma(shape);
            EXPECT_NEAR(gamma_expectation([&](double w) { return std::pow(w, -p); }, shape, rate, p) / exact, 1.0, 1e-11);
        }
}

TEST(GammaExpectation, CharacteristicFunction) {
    // E[cos(t W)] = Re (1 - i t / rate)^{-shape}
    for (double t : {0.5, 3.0}) {
        const double shape = 2.5, rate = 1.2;
        const double exact = std::pow(std::complex<double>(1.0, -t / rate), -shape).real();
        EXPECT_NEAR(gamma_expectation([&](double w) { return std::cos(t * w); }, shape, rate), exact, 1e-12);
    }
}

TEST(GammaExpectation, LowerCutoff) {
    // shape 1: P(W >= w_min) = exp(-rate w_min)
    const double v = gamma_expectation([](double) { return 1.0; }, 1.0, 2.0, 0.0, 1e-12, 0.4);
    EXPECT_NEAR(v, std::exp(-0.8), 1e-12);
}

TEST(GammaExpectation, DivergenceIsReported) {
    EXPECT_THROW(gamma_expectation([](double w) { return 1.0 / w; }, 1.0, 1.0, 1.0), DivergentVarianceError);
}
