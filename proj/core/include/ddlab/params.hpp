#pragma once

namespace ddlab {

// Physical parameters of the damped oscillator and its time-reversed double.
// Units are dimensionless; hbar and kB default to 1.
struct OscillatorParams {
    double m{1.0};
    double gamma{0.0};
    double k{1.0};
    double hbar{1.0};
    double kB{1.0};

    // Throws ParamError naming the first offending field.
    void validate() const;

    // Gamma = gamma / (2m)
    double damping_rate() const noexcept { return gamma / (2.0 * m); }

    // k > gamma^2 / (4m)
    bool underdamped() const noexcept;

    // Omega = sqrt(k/m - gamma^2/(4m^2)); throws DomainError when not underdamped.
    double omega() const;

    // tau = 2 pi / Omega
    double period() const;

    friend bool operator==(const OscillatorParams&, const OscillatorParams&) = default;
};

// Validated construction.
OscillatorParams make_params(double m, double gamma, double k, double hbar = 1.0,
                             double kB = 1.0);

}  // namespace ddlab
