#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ddlab/params.hpp"

namespace ddlab::quantum {

// Density matrix rho_nm in the truncated eigenbasis of the oscillator with
// frequency Omega taken from the params it is used with.
struct DensityMatrix {
    Eigen::MatrixXcd elements;

    std::size_t dim() const noexcept { return static_cast<std::size_t>(elements.rows()); }
};

inline constexpr std::size_t default_dim = 32;

// |n><n| in a basis of `dim` states.
DensityMatrix basis_state(std::size_t n, std::size_t dim = default_dim);

// |psi><psi| for the given amplitudes (normalized here); amplitudes beyond
// the supplied ones are zero.
DensityMatrix pure_state(std::span<const std::complex<double>> amplitudes,
                         std::size_t dim = default_dim);

// Equal-weight superposition of the listed levels.
DensityMatrix superposition(std::span<const std::size_t> levels, std::size_t dim = default_dim);

struct DensityDiagnostics {
    double hermiticity_residual{0.0};  // max |rho_nm - conj(rho_mn)|
    double trace_error{0.0};           // |Tr rho - 1|
    double min_eigenvalue{0.0};
};
DensityDiagnostics diagnose(const DensityMatrix& rho);

// E_n = hbar Omega (n + 1/2)
double level_energy(std::size_t n, const OscillatorParams& p);

// Two-sided evolution i hbar d rho/dt = (H+ - H-) rho in the eigenrepresentation:
//   rho_nm(t) = rho_nm(0) exp(-i (E_n - E_m) t / hbar)
DensityMatrix evolve_density(const DensityMatrix& rho0, const OscillatorParams& p, double t);

// <x> = Tr(rho X) with X the position operator in the truncated basis.
double position_expectation(const DensityMatrix& rho, const OscillatorParams& p);

// phi_0..phi_{count-1} at x via the three-term recurrence.
std::vector<double> eigenfunctions(double x, std::size_t count, const OscillatorParams& p);

// Spectral peak of each rho_nm(t), n, m < n_max, sampled over `periods`
// oscillator periods. measured/expected are angular Bohr frequencies
// (E_n - E_m)/hbar.
struct BohrPeak {
    std::size_t n{0};
    std::size_t m{0};
    double expected{0.0};
    double measured{0.0};
    double bin_width{0.0};

    bool within_bin() const noexcept;
};
std::vector<BohrPeak> bohr_peaks(const DensityMatrix& rho0, const OscillatorParams& p,
                                 std::size_t n_max, std::size_t periods = 64,
                                 std::size_t samples_per_period = 32);

// Axes for the Wigner transform. The relative coordinate y runs over
// [-(x_max - x_min), x_max - x_min] with ny samples (odd; 0 picks the
// smallest odd count that resolves the p range).
struct WignerAxes {
    double x_min{-6.0};
    double x_max{6.0};
    std::size_t nx{121};
    double p_min{-6.0};
    double p_max{6.0};
    std::size_t np{121};
    std::size_t ny{0};

    friend bool operator==(const WignerAxes&, const WignerAxes&) = default;
};

struct WignerGrid {
    std::vector<double> x_axis;
    std::vector<double> p_axis;
    Eigen::MatrixXd values;  // values(ip, ix) = W(p_ip, x_ix)
    double hbar{1.0};
    double max_imag{0.0};    // largest |Im W| discarded

    double dx() const noexcept;
    double dp() const noexcept;
    double normalization() const noexcept;  // sum W dx dp
    std::vector<double> position_marginal() const;  // sum_p W dp at each x
};

// W(p, x) = (1/(2 pi hbar)) int <x + y/2|rho|x - y/2> exp(-i p y / hbar) dy,
// trapezoid rule over y. Throws GridError when the y spacing under-resolves
// exp(-i p y/hbar) on the requested p range or the x range does not hold the
// state (tail mass above 1e-8).
WignerGrid wigner_transform(const DensityMatrix& rho, const OscillatorParams& p,
                            const WignerAxes& axes);

// Zero-angular-momentum radial problem of the 2D isotropic oscillator,
//   -hbar^2/(2m) (u'' + u'/r) + (K/2) r^2 u = E u,  K = m Omega^2,
// on a cell-centred grid r_i = (i + 1/2) h, Dirichlet at R.
struct RadialGrid {
    std::size_t n_points{4000};
    double radius{0.0};  // 0: 8 sqrt(hbar (2 n_levels + 1) / (m Omega))

    friend bool operator==(const RadialGrid&, const RadialGrid&) = default;
};

// Lowest n_levels eigenvalues on a single grid (no refinement check).
std::vector<double> radial_levels(const OscillatorParams& p, std::size_t n_levels,
                                  const RadialGrid& grid);

// As radial_levels, then repeats on a grid with half the points and throws
// ConvergenceError if the highest requested level moved by more than 1e-3
// relative.
std::vector<double> radial_spectrum(const OscillatorParams& p, std::size_t n_levels,
                                    const RadialGrid& grid = {});

// Effective level hbar Omega (n + alpha/2) from the periodicity condition
// <H> tau / hbar - alpha pi = 2 pi n with tau = 2 pi / Omega.
double geometric_spectrum(std::size_t n, double alpha, const OscillatorParams& p);

}  // namespace ddlab::quantum
