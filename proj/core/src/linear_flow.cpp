#include "ddlab/linear_flow.hpp"

#include <cmath>

namespace ddlab {

namespace {

// sin(wt)/w and sinh(wt)/w lose accuracy as w -> 0; fall back to the series.
double sinc_like(double w, double t, bool hyperbolic) {
    const double a = w * t;
    if (std::abs(a) < 1e-4) {
        const double a2 = a * a;
        const double sign = hyperbolic ? 1.0 : -1.0;
        return t * (1.0 + sign * a2 / 6.0 + a2 * a2 / 120.0);
    }
    return (hyperbolic ? std::sinh(a) : std::sin(a)) / w;
}

}  // namespace

Eigen::Matrix2d propagator(const Eigen::Matrix2d& B, double t) {
    const double mu = 0.5 * B.trace();
    const double disc = mu * mu - B.determinant();
    const Eigen::Matrix2d shifted = B - mu * Eigen::Matrix2d::Identity();

    double c = 1.0;
    double s = t;
    if (disc < 0.0) {
        const double w = std::sqrt(-disc);
        c = std::cos(w * t);
        s = sinc_like(w, t, false);
    } else if (disc > 0.0) {
        const double w = std::sqrt(disc);
        c = std::cosh(w * t);
        s = sinc_like(w, t, true);
    }
    return std::exp(mu * t) * (c * Eigen::Matrix2d::Identity() + s * shifted);
}

Eigen::Matrix2d damped_block_generator(double m, double gamma, double k) {
    Eigen::Matrix2d B;
    B << -gamma / (2.0 * m), 1.0 / m, gamma * gamma / (4.0 * m) - k, -gamma / (2.0 * m);
    return B;
}

Eigen::Matrix2d amplified_block_generator(double m, double gamma, double k) {
    Eigen::Matrix2d B;
    B << gamma / (2.0 * m), 1.0 / m, gamma * gamma / (4.0 * m) - k, gamma / (2.0 * m);
    return B;
}

}  // namespace ddlab
