#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fracspec {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Result exceeds the representable range of double.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// An iterative or adaptive computation did not reach its tolerance.
/// Carries the last two refinement values so callers can judge how far off it was.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double last, double previous, double error_estimate)
        : std::runtime_error(what + " (last=" + std::to_string(last) + ", previous=" +
                             std::to_string(previous) + ", error estimate=" +
                             std::to_string(error_estimate) + ")"),
          last_(last), previous_(previous), error_estimate_(error_estimate) {}

    double last() const noexcept { return last_; }
    double previous() const noexcept { return previous_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double last_;
    double previous_;
    double error_estimate_;
};

/// Cov(0) requested for a model whose spectral density is not integrable.
class DivergentVarianceError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The requested method has no formula for this model or lag.
class MethodUnavailableError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A sampled curve does not decay enough at its ends to be Fourier transformed.
class InsufficientDecayError : public std::domain_error {
public:
    InsufficientDecayError(const std::string& what, double left, double right)
        : std::domain_error(what), left_(left), right_(right) {}
    double left() const noexcept { return left_; }
    double right() const noexcept { return right_; }

private:
    double left_;
    double right_;
};

/// Sampling step too coarse for the spectral density being synthesized.
class AliasingError : public std::domain_error {
public:
    AliasingError(const std::string& what, double max_dt)
        : std::domain_error(what), max_dt_(max_dt) {}
    double max_dt() const noexcept { return max_dt_; }

private:
    double max_dt_;
};

struct Violation {
    std::string field;
    std::string message;
};

/// One or more model parameters violate their constraints.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(std::vector<Violation> violations)
        : std::invalid_argument(join(violations)), violations_(std::move(violations)) {}

    const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
    static std::string join(const std::vector<Violation>& v) {
        std::string out;
        for (const auto& item : v) {
            if (!out.empty()) out += "; ";
            out += item.field + ": " + item.message;
        }
        return out;
    }

    std::vector<Violation> violations_;
};

}  // namespace fracspec
