#include <gtest/gtest.h>

#include <cmath>

#include "fracspec/covariance.hpp"
#include "fracspec/transforms.hpp"

using namespace fracspec;

TEST(InverseFourier, OrnsteinUhlenbeck) {
    const auto m = ModelSpec::weyl(1, 1, 1, 1);
    for (double h : {0.0, 1e-4, 0.1, 1.0, -2.0, 5.0, 20.0})
        EXPECT_NEAR(inverse_fourier_at(m, h), 0.5 * std::exp(-std::abs(h)), 1e-15) << h;
}

TEST(InverseFourier, ScaledOrnsteinUhlenbeck) {
    // sigma2/(mu^2 + tau^2) <-> sigma2 e^{-mu |h|} / (2 mu)
    const auto m = ModelSpec::weyl(2.5, 1, 3, 1);
    for (double h : {0.0, 0.3, 2.0}) EXPECT_NEAR(inverse_fourier_at(m, h), 3.0 * std::exp(-2.5 * h) / 5.0, 1e-14);
}

TEST(InverseFourier, ReferenceValues) {
    // mpmath, see tools/mpmath_anchors.py
    EXPECT_NEAR(inverse_fourier_at(ModelSpec::weyl(1, 0.75, 1, 0.5), 1.0) / 0.071953865989711571581, 1.0, 1e-11);
    EXPECT_NEAR(inverse_fourier_at(ModelSpec::weyl(1, 0.75, 1, 0.5), 5.0) / 0.011826166182429984028, 1.0, 1e-11);
    EXPECT_NEAR(inverse_fourier_at(ModelSpec::weyl(1, 2, 1, 0.5), 0.0) / 0.13661977236758134308, 1.0, 1e-11);
    EXPECT_NEAR(inverse_fourier_at(ModelSpec::even(1, 1, 1, 2), 0.0), 0.26516504294495532165, 1e-13);
    EXPECT_NEAR(inverse_fourier_at(ModelSpec::even(1, 1, 1, 2), 1.0), 0.22437382475099213387, 1e-13);
    EXPECT_NEAR(inverse_fourier_at(ModelSpec::even(1, 1, 1, 2), 5.0), -0.017093270709985248291, 1e-13);
    const auto odd = ModelSpec::odd(1, 1, 1, 1, -1);
    EXPECT_NEAR(inverse_fourier_at(odd, 1.0), 0.12262648039048077387, 1e-13);
    EXPECT_NEAR(inverse_fourier_at(odd, -1.0), 0.31041432598338595478, 1e-13);
    EXPECT_NEAR(inverse_fourier_at(odd, 5.0), 0.0052406254437331410752, 1e-13);
    EXPECT_NEAR(inverse_fourier_at(ModelSpec::odd(1, 0.75, 1, 1, 1), 2.0), 0.25863507457712749577, 1e-13);
}

TEST(InverseFourier, PlanRobustness) {
    TransformPlan wide;
    wide.sample_count = 1 << 15;
    for (const auto& m : {ModelSpec::weyl(1, 0.75, 1, 0.5), ModelSpec::even(2, 0.5, 1, 2), ModelSpec::odd(1, 1, 1, 1, 1)}) {
        for (double h : {0.1, 1.0, 5.0}) {
            TransformPlan base;
            const double a = inverse_fourier_at(m, h, base);
            base.frequency_cutoff = 400.0;
            wide.frequency_cutoff = 800.0;
            const double b = inverse_fourier_at(m, h, base);
            const double c = inverse_fourier_at(m, h, wide);
            EXPECT_NEAR(b / a, 1.0, 1e-8);
            EXPECT_NEAR(c / a, 1.0, 1e-8);
        }
    }
}

TEST(InverseFourier, UntaperedTruncation) {
    TransformPlan plan;
    plan.taper = Taper::None;
    const auto m = ModelSpec::weyl(1, 1.5, 1, 1);
    // sigma2/(1 + tau^2)^{3/2} <-> |h| K_1(|h|) / pi
    EXPECT_NEAR(inverse_fourier_at(m, 0.0, plan), 1.0 / std::numbers::pi, 1e-8);
}

TEST(InverseFourier, DivergentVariance) {
    EXPECT_THROW(inverse_fourier_at(ModelSpec::weyl(1, 1, 1, 0.5), 0.0), DivergentVarianceError);
    EXPECT_NO_THROW(inverse_fourier_at(ModelSpec::weyl(1, 1, 1, 0.5), 1.0));
}

TEST(InverseFourier, CurveMatchesPointwise) {
    const auto m = ModelSpec::even(1, 1, 1, 2);
    const auto c = inverse_fourier_spectral(m, Grid(0, 0.5, 5));
    EXPECT_EQ(c.quantity, Quantity::Covariance);
    for (int k = 0; k < 5; ++k) EXPECT_EQ(c.values[k], inverse_fourier_at(m, c.grid.at(k)));
}

TEST(EndCorrectedWeights, ExactForCubics) {
    for (int n : {8, 11, 40}) {
        const auto w = detail::end_corrected_weights(n);
        const double step = 1.0 / (n - 1);
        double s3 = 0.0, s0 = 0.0;
        for (int k = 0; k < n; ++k) {
            const double x = k * step;
            s3 += w[k] * x * x * x;
            s0 += w[k];
        }
        EXPECT_NEAR(s3 * step, 0.25, 1e-14);
        EXPECT_NEAR(s0 * step, 1.0, 1e-14);
    }
}

TEST(ForwardFourier, RecoversOrnsteinUhlenbeck) {
    const Grid lags(-50, 0.005, 20001);
    Curve cov;
    cov.grid = lags;
    cov.model = ModelSpec::weyl(1, 1, 1, 1);
    for (double h : lags.points()) cov.values.push_back(0.5 * std::exp(-std::abs(h)));
    const auto f = forward_fourier_covariance(cov, Grid(0, 0.5, 7));
    EXPECT_FALSE(f.is_complex());
    for (int j = 0; j < 7; ++j) {
        const double tau = f.grid.at(j);
        EXPECT_NEAR(f.values[j] * (1.0 + tau * tau), 1.0, 1e-8) << tau;
    }
}

TEST(ForwardFourier, RoundTripOfOddModelIsComplex) {
    const auto m = ModelSpec::odd(4, 1, 1, 1, 1);
    const auto cov = covariance_curve(m, Grid(-35, 0.02, 3501), Method::Quadrature);
    const auto f = forward_fourier_covariance(cov, Grid(0.5, 0.5, 4));
    ASSERT_TRUE(f.is_complex());
    for (int j = 0; j < 4; ++j) {
        const auto exact = spectral_density(m, f.grid.at(j));
        EXPECT_NEAR(f.values[j], exact.real(), 1e-6 * std::abs(exact));
        EXPECT_NEAR(f.values_imag[j], exact.imag(), 1e-6 * std::abs(exact));
    }
}

TEST(ForwardFourier, RejectsUndecayedCurve) {
    Curve cov;
    cov.grid = Grid(-2, 0.1, 41);
    for (double h : cov.grid.points()) cov.values.push_back(std::exp(-std::abs(h)));
    EXPECT_THROW(forward_fourier_covariance(cov, Grid(0, 1, 3)), InsufficientDecayError);
}

TEST(TransformPlan, Validates) {
    TransformPlan p;
    p.sample_count = 1000;
    EXPECT_THROW(p.check(), ValidationError);
    p.sample_count = 1024;
    p.frequency_cutoff = -1;
    EXPECT_THROW(p.check(), ValidationError);
}
