#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace fracpwc::mlfunc {

/// Parameter pair (alpha, beta) of the two-parameter Mittag-Leffler function
/// E_{alpha,beta}(z) = sum_{k>=0} z^k / Gamma(alpha*k + beta).
struct MLOrder {
    double alpha;
    double beta;

    MLOrder(double alpha_, double beta_) : alpha(alpha_), beta(beta_) {
        if (!(alpha > 0.0) || !std::isfinite(alpha))
            throw std::invalid_argument("MLOrder: alpha must be positive and finite");
        if (!std::isfinite(beta))
            throw std::invalid_argument("MLOrder: beta must be finite");
    }
};

/// Thrown when the series has not met the stopping rule within the term cap.
/// Carries the partial sum (max-norm for matrices) and the number of terms
/// consumed, so callers can decide whether the partial result is usable.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double partial, int terms)
        : std::runtime_error(what), partial_sum(partial), terms_used(terms) {}

    double partial_sum;
    int terms_used;
};

/// Largest admissible max-norm of the (scaled) argument. Larger arguments
/// would silently lose precision to cancellation in double arithmetic, so
/// they are rejected instead (std::domain_error).
inline constexpr double kArgumentBudget = 30.0;

/// Hard cap on series terms before ConvergenceError.
inline constexpr int kMaxTerms = 500;

/// Gamma function via the Lanczos approximation (g = 7, 9 coefficients),
/// with the reflection formula for negative non-integer arguments.
/// Accurate to better than 1e-13 relative on (0, 50]. Poles (x = 0, -1, ...)
/// raise std::domain_error.
[[nodiscard]] double gamma_fn(double x);

/// E_{alpha,beta}(z) by direct series summation. Stops once terms are
/// decreasing and the next term falls below 1e-16 of the running sum.
[[nodiscard]] double ml_scalar(const MLOrder& order, double z);

/// Matrix series sum_{k>=0} (scale*M)^k / Gamma(alpha*k + beta), stopping
/// rule applied in max-norm. M must be square; the identity term is k = 0.
[[nodiscard]] Eigen::MatrixXd ml_matrix(const MLOrder& order,
                                        const Eigen::MatrixXd& M,
                                        double scale);

}  // namespace fracpwc::mlfunc
