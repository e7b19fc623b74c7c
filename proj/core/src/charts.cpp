#include "ddlab/charts.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>

#include "ddlab/errors.hpp"
#include "ddlab/hamiltonian.hpp"

namespace ddlab {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double half_pi = 0.5 * std::numbers::pi;

// Radicand R(z) = 4 J2^2 + 4 m Omega C z - m^2 Omega^2 z^2 = m^2 Omega^2 (w^2 - (z - z0)^2).
// Writing z = z0 + w sin(theta) turns the radial motion into a uniform
// rotation of theta and removes the 1/sqrt endpoint singularities.
struct ActionGeometry {
    double mW;  // m Omega
    double z0;  // midpoint of the positivity interval of R
    double w;   // half-width of that interval
};

ActionGeometry action_geometry(double C, double J2, const OscillatorParams& p) {
    const double mW = p.m * p.omega();
    return {mW, 2.0 * C / mW, 2.0 * std::hypot(C, J2) / mW};
}

// Second integral of the action transform, integrated along the orbit from the
// upper turning point z+ (theta = pi/2). The reference sits on a root of R so
// that the generating function's lower limit does not depend on (C, J2).
double q2_integral(double theta, double J2, const ActionGeometry& g) {
    if (J2 == 0.0 || theta == half_pi) return 0.0;
    auto integrand = [&](double t) { return 2.0 * J2 / (g.mW * (g.z0 + g.w * std::sin(t))); };
    double error = 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        integrand, half_pi, theta, 20, 1e-12, &error);
}

// theta in [-pi/2, 3pi/2): the cut sits at the lower turning point z-, which
// is never inside the patch z > 0 when J2 != 0.
double normalize_theta(double theta) {
    return theta - 2.0 * pi * std::floor((theta + half_pi) / (2.0 * pi));
}

std::array<double, 4> to_action(const DoubledState& s, const OscillatorParams& p) {
    const double C = invariant_c(s, p);
    if (!(C > 0.0)) throw DomainError("ACTION chart requires C > 0");
    const double z = (s.x1 - s.x2) * (s.x1 + s.x2);
    if (!(z > 0.0)) throw DomainError("ACTION chart requires x1^2 > x2^2");
    const double J2 = invariant_j2(s);
    const ActionGeometry g = action_geometry(C, J2, p);

    const double sin_t = (z - g.z0) / g.w;
    // dz/dt = (2/m)(x1 p1 + x2 p2) = 2 Omega w cos(theta)
    const double cos_t = (s.x1 * s.p1 + s.x2 * s.p2) / (g.mW * g.w);
    double theta = std::atan2(sin_t, cos_t);
    if (theta < -half_pi) theta += 2.0 * pi;

    const double u = std::atanh(s.x2 / s.x1);
    return {theta - half_pi, 2.0 * u + q2_integral(theta, J2, g), C, J2};
}

DoubledState from_action(const std::array<double, 4>& a, const OscillatorParams& p) {
    const auto [q1, q2, C, J2] = a;
    if (!(C > 0.0)) throw DomainError("ACTION chart requires C > 0");
    const ActionGeometry g = action_geometry(C, J2, p);
    const double theta = normalize_theta(q1 + half_pi);
    const double z = g.z0 + g.w * std::sin(theta);
    if (!(z > 0.0)) throw DomainError("ACTION point maps outside the hyperbolic patch");

    const double r = std::sqrt(z);
    const double u = 0.5 * (q2 - q2_integral(theta, J2, g));
    const double x1 = r * std::cosh(u);
    const double x2 = r * std::sinh(u);
    // x1 p1 + x2 p2 = m Omega w cos(theta),  x2 p1 + x1 p2 = 2 J2
    const double D = g.mW * g.w * std::cos(theta);
    return {x1, x2, (x1 * D - 2.0 * J2 * x2) / z, (2.0 * J2 * x1 - x2 * D) / z};
}

std::array<double, 4> to_hyperbolic(const DoubledState& s) {
    if (!(s.x1 > std::abs(s.x2))) {
        throw DomainError("HYPERBOLIC chart requires x1 > |x2|");
    }
    const double r = std::sqrt((s.x1 - s.x2) * (s.x1 + s.x2));
    const double u = std::atanh(s.x2 / s.x1);
    const double ch = std::cosh(u);
    const double sh = std::sinh(u);
    return {r, u, s.p1 * ch + s.p2 * sh, r * (s.p1 * sh + s.p2 * ch)};
}

DoubledState from_hyperbolic(const std::array<double, 4>& a) {
    const auto [r, u, pr, pu] = a;
    if (!(r > 0.0)) throw DomainError("HYPERBOLIC chart requires r > 0");
    const double ch = std::cosh(u);
    const double sh = std::sinh(u);
    return {r * ch, r * sh, ch * pr - sh * pu / r, -sh * pr + ch * pu / r};
}

}  // namespace

std::string_view chart_name(Chart c) noexcept {
    switch (c) {
        case Chart::XY: return "XY";
        case Chart::X12: return "X12";
        case Chart::XPM: return "XPM";
        case Chart::HYPERBOLIC: return "HYPERBOLIC";
        case Chart::ACTION: return "ACTION";
    }
    return "?";
}

std::optional<Chart> parse_chart(std::string_view name) noexcept {
    for (Chart c : {Chart::XY, Chart::X12, Chart::XPM, Chart::HYPERBOLIC, Chart::ACTION}) {
        if (chart_name(c) == name) return c;
    }
    return std::nullopt;
}

ChartPoint to_chart(const DoubledState& s, Chart target, const OscillatorParams& p) {
    switch (target) {
        case Chart::X12:
        case Chart::XPM:
            return {target, as_array(s)};
        case Chart::XY: {
            const SectorState q = to_sector(s);
            return {target, {q.x, q.y, q.px, q.py}};
        }
        case Chart::HYPERBOLIC:
            return {target, to_hyperbolic(s)};
        case Chart::ACTION:
            return {target, to_action(s, p)};
    }
    throw DomainError("unknown chart");
}

DoubledState from_chart(const ChartPoint& pt, const OscillatorParams& p) {
    const auto& c = pt.coords;
    switch (pt.chart) {
        case Chart::X12:
        case Chart::XPM:
            return doubled_from_array(c);
        case Chart::XY:
            return to_doubled(SectorState{c[0], c[1], c[2], c[3]});
        case Chart::HYPERBOLIC:
            return from_hyperbolic(c);
        case Chart::ACTION:
            return from_action(c, p);
    }
    throw DomainError("unknown chart");
}

ChartPoint chart_convert(const ChartPoint& pt, Chart target, const OscillatorParams& p) {
    if (pt.chart == target) return pt;
    return to_chart(from_chart(pt, p), target, p);
}

}  // namespace ddlab
