#pragma once

#include <stdexcept>

namespace fracpwc::regularize {

/// Replacement policy for the sign discontinuity.
///   Exact      - sgn itself, with sgn(0) = 0 (set midpoint convention)
///   Global     - sigmoid 2/(1+e^{-x/delta}) - 1 on the whole axis
///   Local      - C^1 cubic -x^3/(2 eps^3) + 3x/(2 eps) on [-eps, eps],
///                glued to +-1 outside
struct SgnApprox {
    enum class Kind { Exact, Global, Local };

    Kind kind = Kind::Exact;
    double width = 0.0;  // delta for Global, epsilon for Local

    static SgnApprox exact() { return {Kind::Exact, 0.0}; }
    static SgnApprox global(double delta) {
        if (!(delta > 0.0))
            throw std::invalid_argument("SgnApprox: delta must be positive");
        return {Kind::Global, delta};
    }
    static SgnApprox local(double epsilon) {
        if (!(epsilon > 0.0))
            throw std::invalid_argument("SgnApprox: epsilon must be positive");
        return {Kind::Local, epsilon};
    }
};

/// Replacement policy for |x|: exact modulus or the quadratic
/// x^2/(2 eps) + eps/2 on [-eps, eps].
struct AbsApprox {
    enum class Kind { Exact, Quadratic };

    Kind kind = Kind::Exact;
    double epsilon = 0.0;

    static AbsApprox exact() { return {Kind::Exact, 0.0}; }
    static AbsApprox quadratic(double epsilon) {
        if (!(epsilon > 0.0))
            throw std::invalid_argument("AbsApprox: epsilon must be positive");
        return {Kind::Quadratic, epsilon};
    }
};

[[nodiscard]] double sgn_eval(const SgnApprox& approx, double x);

/// Analytic derivative of sgn_eval. Exact kind has no derivative at 0 and
/// throws; callers handle the piecewise-constant branches themselves.
[[nodiscard]] double sgn_deriv(const SgnApprox& approx, double x);

[[nodiscard]] double abs_eval(const AbsApprox& approx, double x);
[[nodiscard]] double abs_deriv(const AbsApprox& approx, double x);

/// True iff every sampled point of the approximation's graph lies within
/// `neighborhood` of the graph of the set-valued Sgn (horizontal branches
/// plus the vertical segment {0} x [-1, 1]). Sampling: 1e5 uniform points
/// over [-R, R], R = 10 * max(width, 1), plus the band edges.
[[nodiscard]] bool graph_containment_check(const SgnApprox& approx,
                                           double neighborhood);

}  // namespace fracpwc::regularize
