#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "fracspec/models.hpp"

using namespace fracspec;

namespace {

RawModel raw(std::optional<std::string> family, std::optional<double> mu, std::optional<double> beta,
             std::optional<double> sigma2, std::optional<double> alpha = {}, std::optional<double> n = {},
             std::optional<double> kappa = {}) {
    return {family, mu, beta, sigma2, alpha, n, kappa};
}

std::string message(const RawModel& r) {
    try {
        validate_model(r);
    } catch (const ValidationError& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST(ValidateModel, AcceptsEachFamily) {
    EXPECT_NO_THROW(validate_model(raw("weyl", 1, 1, 1, 0.5)));
    EXPECT_NO_THROW(validate_model(raw("even", 2, 0.5, 3, {}, 2)));
    EXPECT_NO_THROW(validate_model(raw("odd", 1, 1, 1, {}, 1, -1)));
}

TEST(ValidateModel, NamesAlphaBound) {
    const auto msg = message(raw("weyl", 1, 1, 1, 1.5));
    EXPECT_NE(msg.find("alpha"), std::string::npos);
    EXPECT_NE(msg.find("(0,1]"), std::string::npos);
}

TEST(ValidateModel, ReportsEveryViolation) {
    try {
        validate_model(raw("weyl", -1, 0, 1, 2.0));
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.violations().size(), 3u);
    }
}

TEST(ValidateModel, RejectsMisplacedAndMalformedFields) {
    EXPECT_FALSE(message(raw("weyl", 1, 1, 1, 0.5, 1)).empty());
    EXPECT_FALSE(message(raw("even", 1, 1, 1, 0.5, 1)).empty());
    EXPECT_FALSE(message(raw("even", 1, 1, 1, {}, 1.5)).empty());
    EXPECT_FALSE(message(raw("even", 1, 1, 1, {}, 0)).empty());
    EXPECT_FALSE(message(raw("odd", 1, 1, 1, {}, 1, 0.5)).empty());
    EXPECT_FALSE(message(raw("odd", 1, 1, 1, {}, 1)).empty());
    EXPECT_FALSE(message(raw("levy", 1, 1, 1)).empty());
    EXPECT_FALSE(message(raw({}, 1, 1, 1)).empty());
    EXPECT_FALSE(message(raw("weyl", 1, {}, 1, 1)).empty());
    EXPECT_FALSE(message(raw("weyl", NAN, 1, 1, 1)).empty());
}

TEST(ModelSpec, RoundTripsThroughRaw) {
    const auto m = ModelSpec::odd(1.5, 0.75, 2.0, 2, -1);
    const auto back = validate_model(m.to_raw());
    EXPECT_EQ(back.family(), Family::OddOrder);
    EXPECT_EQ(back.mu(), 1.5);
    EXPECT_EQ(back.n(), 2);
    EXPECT_EQ(back.kappa(), -1);
}

TEST(ModelSpec, DecayAndVariance) {
    EXPECT_DOUBLE_EQ(ModelSpec::weyl(1, 1, 1, 0.5).decay_exponent(), 1.0);
    EXPECT_FALSE(ModelSpec::weyl(1, 1, 1, 0.5).has_finite_variance());
    EXPECT_TRUE(ModelSpec::even(1, 0.5, 1, 1).has_finite_variance());
    EXPECT_DOUBLE_EQ(ModelSpec::odd(1, 1, 1, 1, 1).decay_exponent(), 6.0);
    EXPECT_EQ(ModelSpec::odd(1, 1, 1, 2, 1).kernel_order(), 5);
}

TEST(SpectralDensity, OrnsteinUhlenbeck) {
    const auto m = ModelSpec::weyl(1, 1, 1, 1);
    for (double tau : {0.0, 0.5, -3.0, 100.0}) EXPECT_DOUBLE_EQ(spectral_modulus(m, tau), 1.0 / (1.0 + tau * tau));
}

TEST(SpectralDensity, WeylFractionalValue) {
    // (1 + 2 cos(pi/4) + 1)^{-2}
    const double expected = 1.0 / ((2.0 + std::sqrt(2.0)) * (2.0 + std::sqrt(2.0)));
    EXPECT_NEAR(spectral_modulus(ModelSpec::weyl(1, 2, 1, 0.5), 1.0), expected, 1e-16);
    EXPECT_NEAR(expected, 0.08578643762690495, 1e-16);
}

TEST(SpectralDensity, EvenAndOddValues) {
    EXPECT_DOUBLE_EQ(spectral_modulus(ModelSpec::even(2, 0.5, 3, 2), 1.0), 1.0);
    // (mu - i kappa tau^3)^{-2 beta} with kappa = -1, beta = 1/2, tau = 1: 1/(1 + i)
    const auto f = spectral_density(ModelSpec::odd(1, 0.5, 1, 1, -1), 1.0);
    EXPECT_NEAR(f.real(), 0.5, 1e-15);
    EXPECT_NEAR(f.imag(), -0.5, 1e-15);
}

TEST(SpectralDensity, OddIsHermitianAndPeaksAtZero) {
    const auto m = ModelSpec::odd(1.3, 0.8, 2, 1, 1);
    for (double tau : {0.3, 1.0, 4.0}) {
        const auto a = spectral_density(m, tau), b = spectral_density(m, -tau);
        EXPECT_NEAR(a.real(), b.real(), 1e-16);
        EXPECT_NEAR(a.imag(), -b.imag(), 1e-16);
        EXPECT_LT(std::abs(a), m.spectral_peak());
        const auto direct = 2.0 * std::pow(std::complex<double>(1.3, -tau * tau * tau), -1.6);
        EXPECT_NEAR(std::abs(a - direct), 0.0, 1e-15);
    }
}

TEST(Grid, ValidatesAndSamples) {
    EXPECT_THROW(Grid(0, 0, 10), ValidationError);
    EXPECT_THROW(Grid(0, 1, 1), ValidationError);
    EXPECT_THROW(Grid(NAN, 1, 5), ValidationError);
    const Grid g(-1, 0.5, 5);
    EXPECT_EQ(g.points(), (std::vector<double>{-1, -0.5, 0, 0.5, 1}));
}

TEST(SpectralCurve, ComplexOnlyForOdd) {
    const Grid g(0, 0.25, 9);
    EXPECT_FALSE(spectral_curve(ModelSpec::weyl(1, 1, 1, 0.7), g).is_complex());
    const auto c = spectral_curve(ModelSpec::odd(1, 1, 1, 1, 1), g);
    ASSERT_TRUE(c.is_complex());
    EXPECT_EQ(c.values_imag.size(), 9u);
    EXPECT_EQ(c.quantity, Quantity::Spectral);
}
