#include "ddlab/beables.hpp"

#include <algorithm>
#include <cmath>

#include "ddlab/errors.hpp"
#include "ddlab/hamiltonian.hpp"

namespace ddlab::beables {

namespace {

void require_positive_c(double C) {
    if (!(C > 0.0)) throw DomainError("beables are defined on the patch C > 0");
}

}  // namespace

BeableValues compute_beables(const DoubledState& s, const OscillatorParams& p) {
    const double Omega = p.omega();
    const double Gamma = p.damping_rate();
    const double C = invariant_c(s, p);
    require_positive_c(C);

    const DoubledState v = time_derivative(s, p);
    const double r2 = s.x1 * s.x1 - s.x2 * s.x2;
    const double J2 = 0.5 * p.m * ((v.x1 * s.x2 - v.x2 * s.x1) - Gamma * r2);
    return {C, J2, Gamma, Omega};
}

BeableValues compute_beables(const SectorState& s, const OscillatorParams& p) {
    const double C = invariant_c(s, p);
    require_positive_c(C);
    return {C, invariant_j2(s), p.damping_rate(), p.omega()};
}

double thooft_hamiltonian(const BeableValues& b, const OscillatorParams&) {
    const ThooftVelocityField f = thooft_velocity_field(b);
    return b.C * f.f1 + b.J2 * f.f2;
}

ThooftVelocityField thooft_velocity_field(const BeableValues& b) noexcept {
    return {2.0 * b.Omega, -2.0 * b.Gamma};
}

SplitHamiltonian split_hamiltonian(const BeableValues& b, const OscillatorParams&) {
    require_positive_c(b.C);
    const double U = 2.0 * b.Omega * b.C;
    const double a = U - b.Gamma * b.J2;
    const double g = b.Gamma * b.J2;
    return {a * a / U, g * g / U};
}

Thermodynamics thermodynamics(const BeableValues& b, const OscillatorParams& p) {
    Thermodynamics t;
    t.S = 2.0 * b.J2 / p.hbar;
    t.U = 2.0 * b.Omega * b.C;
    t.T = p.hbar * b.Gamma;
    t.F = t.U - t.T * t.S;
    return t;
}

bool is_physical(const BeableValues& b, double tol) {
    if (!(tol > 0.0)) throw ParamError("tol must be > 0");
    return std::abs(b.J2) <= tol * std::max(1.0, b.C);
}

}  // namespace ddlab::beables
