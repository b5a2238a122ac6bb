#include "fracpwc/sprott_pwc.hpp"

#include "fracpwc/mlfunc.hpp"

#include <cmath>

namespace fracpwc::sprott {

using regularize::abs_deriv;
using regularize::abs_eval;
using regularize::sgn_deriv;
using regularize::sgn_eval;

Vec4 rhs(const Vec4& x, const SystemParams& p, const RhsVariant& v) {
    p.validate();
    const double s = sgn_eval(v.sgn, x[0]);
    const double m = abs_eval(v.abs, x[0]);
    return {-x[0] + x[1], -x[2] * s + x[3], m - p.a, -p.b * x[1]};
}

Mat4 jacobian(const Vec4& x, const SystemParams& p, const RhsVariant& v) {
    p.validate();
    double s, sd;
    if (v.smooth_sgn()) {
        s = sgn_eval(v.sgn, x[0]);
        sd = sgn_deriv(v.sgn, x[0]);
    } else {
        if (x[0] == 0.0)
            throw std::domain_error(
                "jacobian: exact sgn is not differentiable on the plane x1 = 0");
        s = sgn_eval(v.sgn, x[0]);
        sd = 0.0;
    }
    // abs_deriv throws at the kink for the exact modulus
    const double md = abs_deriv(v.abs, x[0]);

    Mat4 j;
    j << -1.0, 1.0, 0.0, 0.0,
         -x[2] * sd, 0.0, -s, 1.0,
         md, 0.0, 0.0, 0.0,
         0.0, -p.b, 0.0, 0.0;
    return j;
}

AffinePiece affine_pieces(const SystemParams& p) {
    p.validate();
    AffinePiece piece;
    piece.m_plus << -1.0, 1.0, 0.0, 0.0,
                     0.0, 0.0, -1.0, 1.0,
                     1.0, 0.0, 0.0, 0.0,
                     0.0, -p.b, 0.0, 0.0;
    piece.m_minus << -1.0, 1.0, 0.0, 0.0,
                      0.0, 0.0, 1.0, 1.0,
                     -1.0, 0.0, 0.0, 0.0,
                      0.0, -p.b, 0.0, 0.0;
    piece.m = Vec4{0.0, 0.0, -p.a, 0.0};
    piece.e1 = Vec4{1.0, 0.0, 0.0, 0.0};
    piece.e3 = Vec4{0.0, 0.0, 1.0, 0.0};
    return piece;
}

Vec4 ml_solution(const Vec4& x0, double t, HalfSpace piece, const SystemParams& p) {
    p.validate();
    if (!(t >= 0.0)) throw std::invalid_argument("ml_solution: t must be >= 0");
    if (t == 0.0) return x0;

    const AffinePiece ap = affine_pieces(p);
    const Mat4& M = piece == HalfSpace::Plus ? ap.m_plus : ap.m_minus;
    const double tq = std::pow(t, p.q);
    const Eigen::MatrixXd e_state =
        mlfunc::ml_matrix(mlfunc::MLOrder(p.q, 1.0), M, tq);
    const Eigen::MatrixXd e_forcing =
        mlfunc::ml_matrix(mlfunc::MLOrder(p.q, p.q + 1.0), M, tq);
    return e_state * x0 - p.a * tq * (e_forcing * ap.e3);
}

double switching_phi(const Vec4& x0, double t, HalfSpace piece,
                     const SystemParams& p) {
    return ml_solution(x0, t, piece, p)[0];
}

std::optional<SwitchingEvent> switching_time(const Vec4& x0, const SystemParams& p,
                                             double t_max) {
    p.validate();
    if (!(t_max > 0.0))
        throw std::invalid_argument("switching_time: t_max must be positive");
    if (x0[0] == 0.0)
        throw std::domain_error(
            "switching_time: x0 lies on the discontinuity plane; use the sliding "
            "analysis instead");

    const HalfSpace piece = x0[0] > 0.0 ? HalfSpace::Plus : HalfSpace::Minus;
    constexpr int kScanPoints = 10000;
    const double dt = t_max / kScanPoints;

    double t_lo = 0.0;
    double phi_lo = x0[0];  // phi(0) = first component of x0
    double t_hi = 0.0, phi_hi = 0.0;
    bool bracketed = false;
    for (int i = 1; i <= kScanPoints; ++i) {
        t_hi = dt * i;
        phi_hi = switching_phi(x0, t_hi, piece, p);
        if (phi_hi == 0.0) {
            bracketed = true;
            t_lo = t_hi;
            break;
        }
        if ((phi_lo > 0.0) != (phi_hi > 0.0)) {
            bracketed = true;
            break;
        }
        t_lo = t_hi;
        phi_lo = phi_hi;
    }
    if (!bracketed) return std::nullopt;

    while (t_hi - t_lo > 1e-12) {
        const double mid = 0.5 * (t_lo + t_hi);
        const double phi_mid = switching_phi(x0, mid, piece, p);
        if (phi_mid == 0.0) {
            t_lo = t_hi = mid;
            break;
        }
        if ((phi_mid > 0.0) == (phi_lo > 0.0)) {
            t_lo = mid;
            phi_lo = phi_mid;
        } else {
            t_hi = mid;
        }
    }

    SwitchingEvent ev;
    ev.t_s = 0.5 * (t_lo + t_hi);
    ev.direction = piece == HalfSpace::Plus ? "plus_to_minus" : "minus_to_plus";
    return ev;
}

namespace {

HalfSpaceTrace solve_half_space(const Mat4& M, double a, HalfSpace side) {
    HalfSpaceTrace trace;
    trace.region = side == HalfSpace::Plus ? "omega_plus" : "omega_minus";

    const Vec4 target{0.0, 0.0, a, 0.0};  // M x = -m = a e3
    // M is rank-deficient by construction; use a rank-revealing solve and
    // judge consistency by the residual of the least-squares candidate.
    Eigen::CompleteOrthogonalDecomposition<Mat4> cod(M);
    const Vec4 candidate = cod.solve(target);
    const double residual = (M * candidate - target).cwiseAbs().maxCoeff();

    trace.candidate = candidate;
    trace.residual = residual;
    trace.consistent = residual <= 1e-9 * std::max(1.0, a);
    trace.in_half_space =
        side == HalfSpace::Plus ? candidate[0] > 0.0 : candidate[0] < 0.0;
    return trace;
}

}  // namespace

EquilibriaReport equilibria(const SystemParams& p) {
    p.validate();
    const AffinePiece ap = affine_pieces(p);

    EquilibriaReport report;
    report.plus = solve_half_space(ap.m_plus, p.a, HalfSpace::Plus);
    report.minus = solve_half_space(ap.m_minus, p.a, HalfSpace::Minus);
    // on x1 = 0 the third component is |0| - a = -a for every admissible
    // selection of Sgn(0), so the plane holds no equilibria either
    report.plane_third_component = -p.a;

    for (const auto* trace : {&report.plus, &report.minus}) {
        if (trace->consistent && trace->in_half_space)
            report.equilibria.push_back({trace->candidate, trace->region});
    }
    return report;
}

}  // namespace fracpwc::sprott
