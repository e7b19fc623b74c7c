#pragma once

#include <utility>

#include "ddlab/charts.hpp"
#include "ddlab/params.hpp"
#include "ddlab/phase_space.hpp"

namespace ddlab {

// H = (1/2m)(p1 - gamma x2/2)^2 + (k/2)x1^2 - (1/2m)(p2 + gamma x1/2)^2 - (k/2)x2^2
double hamiltonian(const DoubledState& s, const OscillatorParams& p) noexcept;

// Same energy in the sector chart: H = (1/m)(p_y - gamma x/2)(p_x + gamma y/2) + k x y.
// No cancellation between large terms, so this is the form used along long
// trajectories.
double hamiltonian(const SectorState& s, const OscillatorParams& p) noexcept;

// The two bracketed groups of H. They are exchanged between sectors along a
// damped trajectory while H1 - H2 stays fixed.
struct SectorEnergies {
    double h1{0.0};
    double h2{0.0};
};
SectorEnergies sector_energies(const DoubledState& s, const OscillatorParams& p) noexcept;

// Gauge form with charges e1 = -e2 = e = 1, c = 1, B = gamma:
//   A_i = (B/2) eps_ij x_j,   Phi_i = (k/(2e)) x_i^2
struct GaugeFields {
    double A1{0.0};
    double A2{0.0};
    double Phi1{0.0};
    double Phi2{0.0};
};
GaugeFields gauge_fields(const DoubledState& s, const OscillatorParams& p) noexcept;

//   H = (1/2m)(p1 - (e1/c)A1)^2 + e1 Phi1 - (1/2m)(p2 + (e2/c)A2)^2 + e2 Phi2
double gauge_hamiltonian(const DoubledState& s, const OscillatorParams& p) noexcept;

// Forward/backward velocities in the (x+, x-) chart:
//   v+- = +-(1/m)(p+- -+ gamma x-+ / 2)
// Throws DomainError unless pt is in the XPM chart.
std::pair<double, double> velocities_pm(const ChartPoint& pt, const OscillatorParams& p);

// Raw conserved quantities (no sign checks):
//   C  = (1/(4 Omega m))[(p1^2 - p2^2) + m^2 Omega^2 (x1^2 - x2^2)]
//   J2 = (x1 p2 + x2 p1)/2
// The sector-chart overloads use C = (p_x p_y + m^2 Omega^2 x y)/(2 Omega m) and
// J2 = (x p_x - y p_y)/2. Omega must exist (underdamped params).
double invariant_c(const DoubledState& s, const OscillatorParams& p);
double invariant_c(const SectorState& s, const OscillatorParams& p);
double invariant_j2(const DoubledState& s) noexcept;
double invariant_j2(const SectorState& s) noexcept;

}  // namespace ddlab
