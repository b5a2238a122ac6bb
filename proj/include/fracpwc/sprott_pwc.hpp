#pragma once

#include "fracpwc/regularize.hpp"

#include <Eigen/Dense>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracpwc::sprott {

using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;

/// Free parameters of the 4D piecewise-continuous system
///   D^q x1 = -x1 + x2
///   D^q x2 = -x3 sgn(x1) + x4
///   D^q x3 = |x1| - a
///   D^q x4 = -b x2
struct SystemParams {
    double a = 1.0;
    double b = 1.25;
    double q = 0.98;

    void validate() const {
        if (!(a > 0.0)) throw std::invalid_argument("SystemParams: a must be > 0");
        if (!(b > 0.0)) throw std::invalid_argument("SystemParams: b must be > 0");
        if (!(q > 0.0 && q < 1.0))
            throw std::invalid_argument("SystemParams: q must lie in (0, 1)");
    }
};

/// Which right-hand side is in force. WA keeps the exact sgn; GA and LA
/// carry the sigmoid/cubic replacement. abs_handling stays Exact except for
/// Lyapunov runs, which need the quadratic modulus smoothing.
struct RhsVariant {
    regularize::SgnApprox sgn = regularize::SgnApprox::exact();
    regularize::AbsApprox abs = regularize::AbsApprox::exact();

    static RhsVariant wa() { return {}; }
    static RhsVariant ga(double delta) {
        return {regularize::SgnApprox::global(delta), regularize::AbsApprox::exact()};
    }
    static RhsVariant la(double epsilon) {
        return {regularize::SgnApprox::local(epsilon), regularize::AbsApprox::exact()};
    }

    [[nodiscard]] RhsVariant with_quadratic_abs(double epsilon) const {
        return {sgn, regularize::AbsApprox::quadratic(epsilon)};
    }
    [[nodiscard]] bool smooth_sgn() const {
        return sgn.kind != regularize::SgnApprox::Kind::Exact;
    }
    [[nodiscard]] std::string name() const {
        switch (sgn.kind) {
            case regularize::SgnApprox::Kind::Exact: return "wa";
            case regularize::SgnApprox::Kind::Global: return "ga";
            case regularize::SgnApprox::Kind::Local: return "la";
        }
        return "wa";
    }
};

/// Piecewise-affine form D^q x = M_{+-} x + m on the half-spaces
/// Omega_{+-} = {x : +-x1 > 0}.
struct AffinePiece {
    Mat4 m_plus;
    Mat4 m_minus;
    Vec4 m;
    Vec4 e1;
    Vec4 e3;
};

enum class HalfSpace { Plus, Minus };

[[nodiscard]] Vec4 rhs(const Vec4& x, const SystemParams& p, const RhsVariant& v);

/// Jacobian of the (smoothed) right-hand side. Requires a differentiable
/// configuration at x: GA/LA for the sgn term; the exact modulus is allowed
/// only away from x1 = 0. WA throws for |x1| at the plane and returns the
/// affine piece's matrix elsewhere.
[[nodiscard]] Mat4 jacobian(const Vec4& x, const SystemParams& p,
                            const RhsVariant& v);

[[nodiscard]] AffinePiece affine_pieces(const SystemParams& p);

/// Closed-form solution x(t) = E_q(t^q M) x0 - a t^q E_{q,q+1}(t^q M) e3 of
/// the affine piece, valid while the trajectory stays in the half-space.
[[nodiscard]] Vec4 ml_solution(const Vec4& x0, double t, HalfSpace piece,
                               const SystemParams& p);

/// First component of the closed form, whose zeros are candidate switching
/// times.
[[nodiscard]] double switching_phi(const Vec4& x0, double t, HalfSpace piece,
                                   const SystemParams& p);

struct SwitchingEvent {
    double t_s;
    std::string direction;  // "plus_to_minus" or "minus_to_plus"
};

/// Smallest t in (0, t_max] with phi(t) = 0, by sign scan (t_max/1e4 grid)
/// plus bisection to |dt| < 1e-12. Absent when phi keeps its sign on the
/// grid. x0 must lie strictly inside a half-space.
[[nodiscard]] std::optional<SwitchingEvent> switching_time(const Vec4& x0,
                                                           const SystemParams& p,
                                                           double t_max);

struct EquilibriumCandidate {
    Vec4 x;
    std::string region;  // "omega_plus", "omega_minus"
};

/// Derivation record for one half-space solve of M x = a e3.
struct HalfSpaceTrace {
    std::string region;
    bool consistent;      // a e3 lies in range(M)
    double residual;      // || M x_ls - a e3 ||_inf for the least-squares x_ls
    Vec4 candidate;       // the least-squares candidate
    bool in_half_space;   // candidate strictly inside the half-space
};

struct EquilibriaReport {
    std::vector<EquilibriumCandidate> equilibria;  // provably empty
    HalfSpaceTrace plus;
    HalfSpaceTrace minus;
    double plane_third_component;  // rhs_3 on x1 = 0, = -a for every selection
};

/// Solves M_{+-} x = a e3 in each open half-space (singular matrices handled
/// by rank/consistency inspection) and checks the discontinuity plane.
[[nodiscard]] EquilibriaReport equilibria(const SystemParams& p);

}  // namespace fracpwc::sprott
