#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>

#include "fracspec/covariance.hpp"

using namespace fracspec;

TEST(ClosedForm, OrnsteinUhlenbeck) {
    for (double h : {0.0, 0.1, 1.0, -3.0})
        EXPECT_NEAR(covariance(ModelSpec::weyl(1, 1, 1, 1), h, Method::ClosedForm), 0.5 * std::exp(-std::abs(h)), 1e-15);
}

TEST(ClosedForm, WeylHalfIntegerOrders) {
    // beta = 2: (|h| + 1) e^{-|h|} / 4; beta = 3/2: |h| K_1(|h|) / pi with K_1(2) from mpmath
    const auto m2 = ModelSpec::weyl(1, 2, 1, 1);
    for (double h : {0.0, 0.5, 3.0, 15.0}) EXPECT_NEAR(covariance(m2, h, Method::ClosedForm) / ((h + 1.0) * std::exp(-h) / 4.0), 1.0, 1e-14);
    EXPECT_NEAR(covariance(ModelSpec::weyl(1, 1.5, 1, 1), 2.0, Method::ClosedForm),
                2.0 * 0.13986588181652242728 / std::numbers::pi, 1e-15);
}

TEST(ClosedForm, EvenFirstOrder) {
    // beta = 1/2 gives f = 1/(mu + tau^2), Cov = e^{-sqrt(mu) |h|} / (2 sqrt(mu))
    EXPECT_NEAR(covariance(ModelSpec::even(1, 0.5, 1, 1), 1.0, Method::ClosedForm), 0.18393972058572117, 1e-16);
    EXPECT_NEAR(covariance(ModelSpec::even(4, 0.5, 1, 1), 0.5, Method::ClosedForm), std::exp(-1.0) / 4.0, 1e-16);
    // beta = 1 gives f = 1/(1 + tau^2)^2, Cov = (1 + |h|) e^{-|h|} / 4
    EXPECT_NEAR(covariance(ModelSpec::even(1, 1, 1, 1), 2.0, Method::ClosedForm), 3.0 * std::exp(-2.0) / 4.0, 1e-16);
}

TEST(ClosedForm, PrintedEvenFormDisagrees) {
    const double h = 1e-7;
    const double printed = covariance_printed_even_n1(h, 1.0, 0.5, 1.0);
    const double correct = covariance_closed_even_n1(h, 1.0, 0.5, 1.0);
    EXPECT_NEAR(printed, 1.0, 1e-6);
    EXPECT_NEAR(correct, 0.5, 1e-6);
}

TEST(ClosedForm, VarianceOfEvenAndOddFamilies) {
    // odd n = 1, kappa = -1, beta = 1: Ai(0) 3^{-1/3} Gamma(5/3) = 2/9
    EXPECT_NEAR(covariance(ModelSpec::odd(1, 1, 1, 1, -1), 0.0, Method::ClosedForm), 2.0 / 9.0, 1e-15);
    // even n = 2: (1/pi) int (mu + t^4)^{-2 beta} dt, mpmath for mu = beta = 1
    EXPECT_NEAR(covariance(ModelSpec::even(1, 1, 1, 2), 0.0, Method::ClosedForm), 0.26516504294495532165, 1e-15);
}

TEST(ClosedForm, UnavailableWhereUndefined) {
    EXPECT_THROW(covariance(ModelSpec::even(1, 1, 1, 2), 1.0, Method::ClosedForm), MethodUnavailableError);
    EXPECT_THROW(covariance(ModelSpec::odd(1, 1, 1, 1, 1), 1.0, Method::ClosedForm), MethodUnavailableError);
}

TEST(Quadrature, ReferenceValues) {
    // mpmath, see tools/mpmath_anchors.py
    EXPECT_NEAR(covariance(ModelSpec::even(1, 1, 1, 2), 1.0, Method::Quadrature), 0.22437382475099213387, 1e-12);
    EXPECT_NEAR(covariance(ModelSpec::even(1, 1, 1, 2), 5.0, Method::Quadrature), -0.017093270709985248291, 1e-12);
    const auto odd = ModelSpec::odd(1, 1, 1, 1, -1);
    EXPECT_NEAR(covariance(odd, 1.0, Method::Quadrature), 0.12262648039048077387, 1e-12);
    EXPECT_NEAR(covariance(odd, -1.0, Method::Quadrature), 0.31041432598338595478, 1e-12);
    EXPECT_NEAR(covariance(odd, 5.0, Method::Quadrature), 0.0052406254437331410752, 1e-12);
    EXPECT_NEAR(covariance(ModelSpec::odd(1, 0.75, 1, 1, 1), 2.0, Method::Quadrature), 0.25863507457712749577, 1e-12);
}

TEST(Quadrature, StableConvolutionReferenceValues) {
    EXPECT_NEAR(covariance(ModelSpec::weyl(1, 1, 1, 0.7), 0.5, Method::Quadrature) / 0.19187930096822772948, 1.0, 1e-9);
    EXPECT_NEAR(covariance(ModelSpec::weyl(1, 0.75, 1, 0.5), 1.0, Method::Quadrature) / 0.071953865989711571581, 1.0, 1e-9);
    EXPECT_NEAR(covariance(ModelSpec::weyl(1, 2, 1, 0.5), 0.0, Method::Quadrature) / 0.13661977236758134308, 1.0, 1e-9);
}

TEST(Quadrature, StableConvolutionIsEven) {
    const auto m = ModelSpec::weyl(1, 1, 1, 0.7);
    EXPECT_EQ(covariance(m, 0.8, Method::Quadrature), covariance(m, -0.8, Method::Quadrature));
}

TEST(Quadrature, GaussianMixtureForWeylAlphaOne) {
    const auto m = ModelSpec::weyl(2, 1.5, 1, 1);
    for (double h : {0.2, 1.0, 4.0})
        EXPECT_NEAR(covariance(m, h, Method::Quadrature) / covariance(m, h, Method::ClosedForm), 1.0, 1e-12);
}

TEST(OddOrder, KappaReflection) {
    for (double h : {-2.0, -0.4, 0.3, 1.7}) {
        const auto plus = ModelSpec::odd(1.5, 0.75, 1, 1, 1);
        const auto minus = ModelSpec::odd(1.5, 0.75, 1, 1, -1);
        EXPECT_EQ(covariance(plus, h, Method::Quadrature), covariance(minus, -h, Method::Quadrature));
        EXPECT_NEAR(covariance(plus, h, Method::FourierOracle), covariance(minus, -h, Method::FourierOracle), 1e-14);
    }
}

TEST(Covariance, AutoResolution) {
    EXPECT_EQ(resolve_method(ModelSpec::weyl(1, 1, 1, 1), 1.0, Method::Auto), Method::ClosedForm);
    EXPECT_EQ(resolve_method(ModelSpec::weyl(1, 1, 1, 0.6), 1.0, Method::Auto), Method::FourierOracle);
    EXPECT_EQ(resolve_method(ModelSpec::even(1, 1, 1, 2), 1.0, Method::Auto), Method::Quadrature);
    EXPECT_EQ(resolve_method(ModelSpec::odd(1, 1, 1, 1, 1), 0.0, Method::Auto), Method::ClosedForm);
    EXPECT_EQ(resolve_method(ModelSpec::odd(1, 1, 1, 2, 1), 1.0, Method::Auto), Method::FourierOracle);
    EXPECT_EQ(resolve_method(ModelSpec::odd(1, 1, 1, 1, 1), 1.0, Method::Quadrature), Method::Quadrature);
}

TEST(Covariance, DivergentVariance) {
    EXPECT_THROW(covariance(ModelSpec::weyl(1, 1, 1, 0.5), 0.0), DivergentVarianceError);
    EXPECT_THROW(covariance(ModelSpec::even(1, 0.2, 1, 1), 0.0, Method::Quadrature), DivergentVarianceError);
    EXPECT_THROW(covariance(ModelSpec::weyl(1, 1, 1, 1), NAN), DomainError);
}

TEST(Covariance, PositiveDefiniteOnLagGrid) {
    for (const auto& m : {ModelSpec::weyl(1, 0.75, 1, 0.8), ModelSpec::weyl(2, 1, 1, 1), ModelSpec::even(1, 1, 1, 2),
                          ModelSpec::even(2, 0.5, 1, 1)}) {
        const double step = 0.4;
        Eigen::MatrixXd c(16, 16);
        std::vector<double> lag(16);
        for (int k = 0; k < 16; ++k) lag[k] = covariance(m, k * step);
        for (int i = 0; i < 16; ++i)
            for (int j = 0; j < 16; ++j) c(i, j) = lag[std::abs(i - j)];
        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(c);
        EXPECT_GE(eig.eigenvalues().minCoeff(), -1e-8 * eig.eigenvalues().maxCoeff());
    }
}

TEST(DecayRate, ExponentialCases) {
    EXPECT_NEAR(decay_rate(ModelSpec::weyl(2, 1, 1, 1), 5, 10), 2.0, 1e-12);
    EXPECT_NEAR(decay_rate(ModelSpec::even(1, 0.5, 1, 1), 5, 10), 1.0, 1e-12);
}

TEST(DecayRate, IncludesPowerPrefactor) {
    // Cov = (h + 1) e^{-h} / 4 for beta = 2, so the fitted rate is 1 + log(16/26)/10
    EXPECT_NEAR(decay_rate(ModelSpec::weyl(1, 2, 1, 1), 15, 25), 1.0 + std::log(16.0 / 26.0) / 10.0, 1e-12);
}

TEST(DecayRate, RejectsBadArguments) {
    EXPECT_THROW(decay_rate(ModelSpec::weyl(1, 1, 1, 1), 5, 5), DomainError);
    EXPECT_THROW(decay_rate(ModelSpec::weyl(1, 1, 1, 1), -1, 5), DomainError);
    EXPECT_THROW(decay_rate(ModelSpec::even(1, 1, 1, 2), 5, 6), DomainError);  // Cov(5) < 0
}

TEST(SmallLagScaling, ConstantAcrossMu) {
    for (double beta : {1.0, 2.0}) {
        auto scaled = [&](double mu) {
            return covariance(ModelSpec::weyl(mu, beta, 1, 1), 0.0, Method::FourierOracle) * std::pow(mu, 2 * beta - 1);
        };
        const double ref = std::tgamma(beta - 0.5) / (2.0 * std::sqrt(std::numbers::pi) * std::tgamma(beta));
        for (double mu : {0.5, 1.0, 2.0}) EXPECT_NEAR(scaled(mu) / ref, 1.0, 1e-10);
    }
}

TEST(CovarianceCurve, RecordsMethod) {
    const auto c = covariance_curve(ModelSpec::weyl(1, 1, 1, 1), Grid(0, 1, 3));
    EXPECT_EQ(c.method, "closed");
    EXPECT_EQ(method_name(Method::FourierOracle), "fourier");
    EXPECT_EQ(parse_method("quadrature"), Method::Quadrature);
    EXPECT_FALSE(parse_method("exact").has_value());
}
