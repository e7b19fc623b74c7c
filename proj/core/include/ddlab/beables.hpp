#pragma once

#include "ddlab/params.hpp"
#include "ddlab/phase_space.hpp"

namespace ddlab::beables {

// Conserved quantities of the doubled oscillator.
//   C  = (1/(4 Omega m))[(p1^2 - p2^2) + m^2 Omega^2 (x1^2 - x2^2)]   (taken > 0)
//   J2 = (m/2)[(x1' x2 - x2' x1) - Gamma r^2],  r^2 = x1^2 - x2^2
struct BeableValues {
    double C{0.0};
    double J2{0.0};
    double Gamma{0.0};
    double Omega{0.0};
};

// J2 is evaluated from Hamilton's velocities as written above; it equals
// (x1 p2 + x2 p1)/2. Throws DomainError if C <= 0 or params are not underdamped.
BeableValues compute_beables(const DoubledState& s, const OscillatorParams& p);

// Cancellation-free evaluation from the sector chart (for long trajectories).
BeableValues compute_beables(const SectorState& s, const OscillatorParams& p);

// H = 2 Omega C - 2 Gamma J2, i.e. sum_i p_i f_i(q) with p = (C, J2) and
// f = (2 Omega, -2 Gamma), both independent of q.
double thooft_hamiltonian(const BeableValues& b, const OscillatorParams& p);

struct ThooftVelocityField {
    double f1{0.0};
    double f2{0.0};
};
ThooftVelocityField thooft_velocity_field(const BeableValues& b) noexcept;

//   H_I  = (2 Omega C - Gamma J2)^2 / (2 Omega C)
//   H_II = Gamma^2 J2^2 / (2 Omega C)
struct SplitHamiltonian {
    double h_one{0.0};
    double h_two{0.0};
};
SplitHamiltonian split_hamiltonian(const BeableValues& b, const OscillatorParams& p);

// S = 2 J2 / hbar (unclamped), U = 2 Omega C, T = hbar Gamma, F = U - T S.
struct Thermodynamics {
    double S{0.0};
    double U{0.0};
    double T{0.0};
    double F{0.0};
};
Thermodynamics thermodynamics(const BeableValues& b, const OscillatorParams& p);

inline constexpr double default_physical_tolerance = 1e-9;

// Classical form of the constraint J2 |psi> = 0: |J2| <= tol * max(1, C).
bool is_physical(const BeableValues& b, double tol = default_physical_tolerance);

}  // namespace ddlab::beables
