#include "fracpwc/caputo_abm.hpp"

#include "fracpwc/mlfunc.hpp"

#include <cmath>

namespace fracpwc::caputo {

namespace detail {

double predictor_kernel(std::size_t k, double q) {
    const double kd = static_cast<double>(k);
    return std::pow(kd + 1.0, q) - std::pow(kd, q);
}

double corrector_kernel(std::size_t k, double q) {
    const double kd = static_cast<double>(k);
    return std::pow(kd + 2.0, q + 1.0) - 2.0 * std::pow(kd + 1.0, q + 1.0) +
           std::pow(kd, q + 1.0);
}

double corrector_first_weight(std::size_t n, double q) {
    const double nd = static_cast<double>(n);
    return std::pow(nd, q + 1.0) - (nd - q) * std::pow(nd + 1.0, q);
}

}  // namespace detail

AbmWeights abm_weights(std::size_t step_index, double q, double h) {
    if (!(q > 0.0 && q <= 1.0))
        throw std::invalid_argument("abm_weights: q must lie in (0, 1]");
    if (!(h > 0.0)) throw std::invalid_argument("abm_weights: h must be positive");

    const std::size_t n = step_index;
    const double hq = std::pow(h, q);
    const double pred_scale = hq / q;
    const double corr_scale = hq / mlfunc::gamma_fn(q + 2.0);

    AbmWeights w;
    w.predictor.resize(n + 1);
    w.corrector.resize(n + 1);
    w.corrector_new = corr_scale;
    for (std::size_t j = 0; j <= n; ++j)
        w.predictor[j] = pred_scale * detail::predictor_kernel(n - j, q);
    w.corrector[0] = corr_scale * detail::corrector_first_weight(n, q);
    for (std::size_t j = 1; j <= n; ++j)
        w.corrector[j] = corr_scale * detail::corrector_kernel(n - j, q);
    return w;
}

Trajectory abm_integrate(const FDEProblem& problem, int corrector_iters) {
    problem.validate();
    if (corrector_iters < 1)
        throw std::invalid_argument("abm_integrate: corrector_iters must be >= 1");

    const double q = problem.q;
    const double h = problem.h;
    const int dim = static_cast<int>(problem.x0.size());
    const std::size_t n_steps =
        static_cast<std::size_t>(std::floor(problem.t_end / h + 1e-9));

    Trajectory traj;
    traj.times.resize(n_steps + 1);
    traj.states.resize(static_cast<Eigen::Index>(n_steps + 1), dim);
    for (std::size_t k = 0; k <= n_steps; ++k)
        traj.times[k] = static_cast<double>(k) * h;
    traj.states.row(0) = problem.x0.transpose();

    // precomputed convolution kernels, indexed by lag k = n - j
    std::vector<double> pred_kernel(n_steps + 1), corr_kernel(n_steps + 1);
    for (std::size_t k = 0; k <= n_steps; ++k) {
        pred_kernel[k] = detail::predictor_kernel(k, q);
        corr_kernel[k] = detail::corrector_kernel(k, q);
    }

    const double hq = std::pow(h, q);
    const double cp = hq / mlfunc::gamma_fn(q + 1.0);  // = (h^q/q)/Gamma(q)
    const double cc = hq / mlfunc::gamma_fn(q + 2.0);

    // rhs history, row-major: f_hist[j*dim + d] = f(x_j)[d]
    std::vector<double> f_hist((n_steps + 1) * dim);

    Eigen::VectorXd x = problem.x0;
    Eigen::VectorXd f0 = problem.rhs(x);
    if (static_cast<int>(f0.size()) != dim)
        throw std::invalid_argument("abm_integrate: rhs dimension mismatch");
    for (int d = 0; d < dim; ++d) f_hist[d] = f0[d];

    Eigen::VectorXd pred_sum(dim), hist_sum(dim), xp(dim), xc(dim), fe(dim);

    for (std::size_t n = 0; n < n_steps; ++n) {
        pred_sum.setZero();
        hist_sum.setZero();
        // j = 0 carries the special first corrector weight
        {
            const double wp = pred_kernel[n];
            const double wc = detail::corrector_first_weight(n, q);
            for (int d = 0; d < dim; ++d) {
                pred_sum[d] += wp * f_hist[d];
                hist_sum[d] += wc * f_hist[d];
            }
        }
        for (std::size_t j = 1; j <= n; ++j) {
            const double wp = pred_kernel[n - j];
            const double wc = corr_kernel[n - j];
            const double* fj = f_hist.data() + j * dim;
            for (int d = 0; d < dim; ++d) {
                pred_sum[d] += wp * fj[d];
                hist_sum[d] += wc * fj[d];
            }
        }

        xp = problem.x0 + cp * pred_sum;
        fe = problem.rhs(xp);
        for (int it = 0;;) {
            xc = problem.x0 + cc * (hist_sum + fe);
            if (++it >= corrector_iters) break;
            fe = problem.rhs(xc);
        }
        if (!xc.allFinite())
            throw IntegrationError(
                "abm_integrate: non-finite state at step " + std::to_string(n + 1),
                n + 1);

        traj.states.row(static_cast<Eigen::Index>(n + 1)) = xc.transpose();
        fe = problem.rhs(xc);
        double* fr = f_hist.data() + (n + 1) * dim;
        for (int d = 0; d < dim; ++d) fr[d] = fe[d];
        x = xc;
    }
    return traj;
}

}  // namespace fracpwc::caputo
