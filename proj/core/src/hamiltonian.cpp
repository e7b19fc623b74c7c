#include "ddlab/hamiltonian.hpp"

#include <cmath>
#include <numbers>

#include "ddlab/errors.hpp"

namespace ddlab {

// ---------------------------------------------------------------- phase space

namespace {
constexpr double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
}

SectorState to_sector(const DoubledState& s) noexcept {
    return {(s.x1 + s.x2) * inv_sqrt2, (s.x1 - s.x2) * inv_sqrt2,
            (s.p1 + s.p2) * inv_sqrt2, (s.p1 - s.p2) * inv_sqrt2};
}

DoubledState to_doubled(const SectorState& s) noexcept {
    return {(s.x + s.y) * inv_sqrt2, (s.x - s.y) * inv_sqrt2,
            (s.px + s.py) * inv_sqrt2, (s.px - s.py) * inv_sqrt2};
}

bool is_finite(const DoubledState& s) noexcept {
    return std::isfinite(s.x1) && std::isfinite(s.x2) && std::isfinite(s.p1) &&
           std::isfinite(s.p2);
}

bool is_finite(const SectorState& s) noexcept {
    return std::isfinite(s.x) && std::isfinite(s.y) && std::isfinite(s.px) &&
           std::isfinite(s.py);
}

std::array<double, 4> as_array(const DoubledState& s) noexcept {
    return {s.x1, s.x2, s.p1, s.p2};
}

DoubledState doubled_from_array(const std::array<double, 4>& a) noexcept {
    return {a[0], a[1], a[2], a[3]};
}

DoubledState time_derivative(const DoubledState& s, const OscillatorParams& p) noexcept {
    const double half_g = 0.5 * p.gamma;
    const double kin1 = s.p1 - half_g * s.x2;  // m dx1/dt
    const double kin2 = s.p2 + half_g * s.x1;  // -m dx2/dt
    return {kin1 / p.m, -kin2 / p.m, half_g * kin2 / p.m - p.k * s.x1,
            half_g * kin1 / p.m + p.k * s.x2};
}

SectorState time_derivative(const SectorState& s, const OscillatorParams& p) noexcept {
    const double half_g = 0.5 * p.gamma;
    const double kx = s.py - half_g * s.x;  // m dx/dt
    const double ky = s.px + half_g * s.y;  // m dy/dt
    return {kx / p.m, ky / p.m, half_g * ky / p.m - p.k * s.y,
            -half_g * kx / p.m - p.k * s.x};
}

// ---------------------------------------------------------------- energies

double hamiltonian(const DoubledState& s, const OscillatorParams& p) noexcept {
    const double a = s.p1 - 0.5 * p.gamma * s.x2;
    const double b = s.p2 + 0.5 * p.gamma * s.x1;
    return a * a / (2.0 * p.m) + 0.5 * p.k * s.x1 * s.x1 - b * b / (2.0 * p.m) -
           0.5 * p.k * s.x2 * s.x2;
}

double hamiltonian(const SectorState& s, const OscillatorParams& p) noexcept {
    const double kx = s.py - 0.5 * p.gamma * s.x;
    const double ky = s.px + 0.5 * p.gamma * s.y;
    return kx * ky / p.m + p.k * s.x * s.y;
}

SectorEnergies sector_energies(const DoubledState& s, const OscillatorParams& p) noexcept {
    const double a = s.p1 - 0.5 * p.gamma * s.x2;
    const double b = s.p2 + 0.5 * p.gamma * s.x1;
    return {a * a / (2.0 * p.m) + 0.5 * p.k * s.x1 * s.x1,
            b * b / (2.0 * p.m) + 0.5 * p.k * s.x2 * s.x2};
}

GaugeFields gauge_fields(const DoubledState& s, const OscillatorParams& p) noexcept {
    constexpr double e = 1.0;
    constexpr double c = 1.0;
    const double B = c * p.gamma / e;
    // eps_12 = -eps_21 = 1
    return {0.5 * B * s.x2, -0.5 * B * s.x1, p.k / (2.0 * e) * s.x1 * s.x1,
            p.k / (2.0 * e) * s.x2 * s.x2};
}

double gauge_hamiltonian(const DoubledState& s, const OscillatorParams& p) noexcept {
    constexpr double e = 1.0;
    constexpr double c = 1.0;
    constexpr double e1 = e;
    constexpr double e2 = -e;
    const GaugeFields f = gauge_fields(s, p);
    const double kin1 = s.p1 - e1 / c * f.A1;
    const double kin2 = s.p2 + e2 / c * f.A2;
    return kin1 * kin1 / (2.0 * p.m) + e1 * f.Phi1 - kin2 * kin2 / (2.0 * p.m) +
           e2 * f.Phi2;
}

std::pair<double, double> velocities_pm(const ChartPoint& pt, const OscillatorParams& p) {
    if (pt.chart != Chart::XPM) {
        throw DomainError("velocities_pm expects a point in the XPM chart");
    }
    const auto [xp, xm, pp, pm] = pt.coords;
    const double half_g = 0.5 * p.gamma;
    return {(pp - half_g * xm) / p.m, -(pm + half_g * xp) / p.m};
}

// ---------------------------------------------------------------- invariants

double invariant_c(const DoubledState& s, const OscillatorParams& p) {
    const double W = p.omega();
    const double mW = p.m * W;
    return ((s.p1 * s.p1 - s.p2 * s.p2) + mW * mW * (s.x1 * s.x1 - s.x2 * s.x2)) /
           (4.0 * mW);
}

double invariant_c(const SectorState& s, const OscillatorParams& p) {
    const double W = p.omega();
    const double mW = p.m * W;
    return (s.px * s.py + mW * mW * s.x * s.y) / (2.0 * mW);
}

double invariant_j2(const DoubledState& s) noexcept {
    return 0.5 * (s.x1 * s.p2 + s.x2 * s.p1);
}

double invariant_j2(const SectorState& s) noexcept {
    return 0.5 * (s.x * s.px - s.y * s.py);
}

}  // namespace ddlab
