#include "fracpwc/regularize.hpp"

#include <algorithm>
#include <cmath>

namespace fracpwc::regularize {

double sgn_eval(const SgnApprox& approx, double x) {
    switch (approx.kind) {
        case SgnApprox::Kind::Exact:
            return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0);
        case SgnApprox::Kind::Global:
            return 2.0 / (1.0 + std::exp(-x / approx.width)) - 1.0;
        case SgnApprox::Kind::Local: {
            const double e = approx.width;
            if (x > e) return 1.0;
            if (x < -e) return -1.0;
            return -x * x * x / (2.0 * e * e * e) + 3.0 * x / (2.0 * e);
        }
    }
    return 0.0;  // unreachable
}

double sgn_deriv(const SgnApprox& approx, double x) {
    switch (approx.kind) {
        case SgnApprox::Kind::Exact:
            throw std::domain_error("sgn_deriv: exact sgn has no derivative at 0");
        case SgnApprox::Kind::Global: {
            const double d = approx.width;
            // sigmoid' = (1 - s^2) / (2 delta) in terms of the value s
            const double s = 2.0 / (1.0 + std::exp(-x / d)) - 1.0;
            return (1.0 - s * s) / (2.0 * d);
        }
        case SgnApprox::Kind::Local: {
            const double e = approx.width;
            if (std::abs(x) > e) return 0.0;
            return -3.0 * x * x / (2.0 * e * e * e) + 3.0 / (2.0 * e);
        }
    }
    return 0.0;  // unreachable
}

double abs_eval(const AbsApprox& approx, double x) {
    if (approx.kind == AbsApprox::Kind::Exact) return std::abs(x);
    const double e = approx.epsilon;
    if (std::abs(x) > e) return std::abs(x);
    return x * x / (2.0 * e) + e / 2.0;
}

double abs_deriv(const AbsApprox& approx, double x) {
    if (approx.kind == AbsApprox::Kind::Exact) {
        if (x == 0.0)
            throw std::domain_error("abs_deriv: |x| has no derivative at 0");
        return x > 0.0 ? 1.0 : -1.0;
    }
    const double e = approx.epsilon;
    if (std::abs(x) > e) return x > 0.0 ? 1.0 : -1.0;
    return x / e;
}

namespace {

// distance from (x, v) to Graph(Sgn) = {(t,-1): t<=0} u {0}x[-1,1] u {(t,1): t>=0}
double sgn_graph_distance(double x, double v) {
    const double d_plus =
        x >= 0.0 ? std::abs(v - 1.0) : std::hypot(x, v - 1.0);
    const double d_minus =
        x <= 0.0 ? std::abs(v + 1.0) : std::hypot(x, v + 1.0);
    const double overhang = std::max(0.0, std::abs(v) - 1.0);
    const double d_seg = std::hypot(x, overhang);
    return std::min({d_plus, d_minus, d_seg});
}

}  // namespace

bool graph_containment_check(const SgnApprox& approx, double neighborhood) {
    if (approx.kind == SgnApprox::Kind::Exact)
        throw std::invalid_argument(
            "graph_containment_check: approximation must be Global or Local");
    if (!(neighborhood > 0.0))
        throw std::invalid_argument(
            "graph_containment_check: neighborhood must be positive");

    const double radius = 10.0 * std::max(approx.width, 1.0);
    constexpr int kSamples = 100000;
    const double tol = neighborhood * (1.0 + 1e-12);  // edge-inclusive

    for (int i = 0; i <= kSamples; ++i) {
        const double x = -radius + 2.0 * radius * i / kSamples;
        if (sgn_graph_distance(x, sgn_eval(approx, x)) > tol) return false;
    }
    for (double x : {-approx.width, approx.width}) {
        if (sgn_graph_distance(x, sgn_eval(approx, x)) > tol) return false;
    }
    return true;
}

}  // namespace fracpwc::regularize
