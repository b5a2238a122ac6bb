#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracpwc::caputo {

using RhsFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

/// Caputo initial value problem D^q x = f(x), x(0) = x0, on [0, t_end]
/// with fixed step h and fractional order q in (0, 1].
struct FDEProblem {
    double q;
    RhsFn rhs;
    Eigen::VectorXd x0;
    double t_end;
    double h;

    void validate() const {
        if (!(q > 0.0 && q <= 1.0))
            throw std::invalid_argument("FDEProblem: q must lie in (0, 1]");
        if (!(h > 0.0)) throw std::invalid_argument("FDEProblem: h must be positive");
        if (!(t_end > 0.0))
            throw std::invalid_argument("FDEProblem: t_end must be positive");
        if (h > t_end) throw std::invalid_argument("FDEProblem: h exceeds t_end");
        if (!rhs) throw std::invalid_argument("FDEProblem: rhs not set");
        if (x0.size() < 1 || !x0.allFinite())
            throw std::invalid_argument("FDEProblem: invalid initial state");
    }
};

/// Solution samples on the uniform grid t_k = k*h. states is (N+1) x n with
/// one state per row; states.row(0) == x0.
struct Trajectory {
    std::vector<double> times;
    Eigen::MatrixXd states;

    [[nodiscard]] std::size_t size() const { return times.size(); }
    [[nodiscard]] int dim() const { return static_cast<int>(states.cols()); }
};

/// Raised when the integration produces a non-finite state.
class IntegrationError : public std::runtime_error {
public:
    IntegrationError(const std::string& what, std::size_t step)
        : std::runtime_error(what), step_index(step) {}

    std::size_t step_index;
};

/// Quadrature weights used by the step from t_n to t_{n+1}.
///   predictor[j]  = (h^q/q) * ((n+1-j)^q - (n-j)^q), j = 0..n
///   corrector[j]  = (h^q/Gamma(q+2)) * a_{j,n+1},     j = 0..n
///   corrector_new = h^q/Gamma(q+2)  (weight of f at the predicted point)
struct AbmWeights {
    std::vector<double> predictor;
    std::vector<double> corrector;
    double corrector_new;
};

[[nodiscard]] AbmWeights abm_weights(std::size_t step_index, double q, double h);

/// Fractional Adams-Bashforth-Moulton P(EC)^m integration. The history
/// convolution is O(N^2); every run with identical inputs is bit-identical.
[[nodiscard]] Trajectory abm_integrate(const FDEProblem& problem,
                                       int corrector_iters = 1);

namespace detail {
// (k+1)^q - k^q and the interior corrector kernel
// (k+2)^{q+1} - 2(k+1)^{q+1} + k^{q+1}, shared by abm_weights and the
// integrator so both sides evaluate the same expressions.
[[nodiscard]] double predictor_kernel(std::size_t k, double q);
[[nodiscard]] double corrector_kernel(std::size_t k, double q);
[[nodiscard]] double corrector_first_weight(std::size_t n, double q);
}  // namespace detail

}  // namespace fracpwc::caputo
