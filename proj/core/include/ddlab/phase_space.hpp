#pragma once

#include <array>

#include "ddlab/params.hpp"

namespace ddlab {

// One point of the doubled phase space in the canonical (x1, x2, p1, p2) chart.
// x1 = (x + y)/sqrt2, x2 = (x - y)/sqrt2.
struct DoubledState {
    double x1{0.0};
    double x2{0.0};
    double p1{0.0};
    double p2{0.0};

    friend bool operator==(const DoubledState&, const DoubledState&) = default;
};

// The same point in the sector chart (x, y, p_x, p_y): x is the damped
// oscillator, y its amplified time-reversed image. The flow does not mix
// (x, p_y) with (y, p_x), so magnitudes stay separated by sector here and
// products like x*y or p_x*p_y keep full relative precision even when the
// y sector has grown by many orders of magnitude.
struct SectorState {
    double x{0.0};
    double y{0.0};
    double px{0.0};
    double py{0.0};

    friend bool operator==(const SectorState&, const SectorState&) = default;
};

SectorState to_sector(const DoubledState& s) noexcept;
DoubledState to_doubled(const SectorState& s) noexcept;

bool is_finite(const DoubledState& s) noexcept;
bool is_finite(const SectorState& s) noexcept;

std::array<double, 4> as_array(const DoubledState& s) noexcept;
DoubledState doubled_from_array(const std::array<double, 4>& a) noexcept;

// Hamilton's equations of H = H1 - H2:
//   dx1/dt = (p1 - gamma x2/2)/m,  dx2/dt = -(p2 + gamma x1/2)/m, ...
// Returned as a DoubledState of time derivatives.
DoubledState time_derivative(const DoubledState& s, const OscillatorParams& p) noexcept;
SectorState time_derivative(const SectorState& s, const OscillatorParams& p) noexcept;

}  // namespace ddlab
