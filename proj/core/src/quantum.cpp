#include "ddlab/quantum.hpp"

#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ddlab/errors.hpp"

namespace ddlab::quantum {

namespace {

constexpr double pi = std::numbers::pi;
using cplx = std::complex<double>;

double oscillator_length(const OscillatorParams& p) {
    return std::sqrt(p.hbar / (p.m * p.omega()));
}

void require_dim(std::size_t dim) {
    if (dim == 0) throw ParamError("basis dimension must be >= 1");
}

}  // namespace

// ---------------------------------------------------------------- states

DensityMatrix basis_state(std::size_t n, std::size_t dim) {
    require_dim(dim);
    if (n >= dim) throw ParamError("basis level outside the truncated basis");
    DensityMatrix rho{Eigen::MatrixXcd::Zero(dim, dim)};
    rho.elements(n, n) = 1.0;
    return rho;
}

DensityMatrix pure_state(std::span<const cplx> amplitudes, std::size_t dim) {
    require_dim(dim);
    if (amplitudes.size() > dim) throw ParamError("more amplitudes than basis states");
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
    for (std::size_t i = 0; i < amplitudes.size(); ++i) psi[i] = amplitudes[i];
    const double norm = psi.norm();
    if (!(norm > 0.0)) throw ParamError("state vector must be nonzero");
    psi /= norm;
    return {psi * psi.adjoint()};
}

DensityMatrix superposition(std::span<const std::size_t> levels, std::size_t dim) {
    std::vector<cplx> amps(dim, 0.0);
    for (std::size_t n : levels) {
        if (n >= dim) throw ParamError("basis level outside the truncated basis");
        amps[n] = 1.0;
    }
    return pure_state(amps, dim);
}

DensityDiagnostics diagnose(const DensityMatrix& rho) {
    const Eigen::MatrixXcd& r = rho.elements;
    DensityDiagnostics d;
    d.hermiticity_residual = (r - r.adjoint()).cwiseAbs().maxCoeff();
    d.trace_error = std::abs(r.trace() - cplx(1.0, 0.0));
    const Eigen::MatrixXcd herm = 0.5 * (r + r.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm, Eigen::EigenvaluesOnly);
    d.min_eigenvalue = es.eigenvalues().minCoeff();
    return d;
}

double level_energy(std::size_t n, const OscillatorParams& p) {
    return p.hbar * p.omega() * (static_cast<double>(n) + 0.5);
}

// ---------------------------------------------------------------- evolution

DensityMatrix evolve_density(const DensityMatrix& rho0, const OscillatorParams& p, double t) {
    const std::size_t dim = rho0.dim();
    std::vector<double> energy(dim);
    for (std::size_t n = 0; n < dim; ++n) energy[n] = level_energy(n, p);

    DensityMatrix out{rho0.elements};
    for (std::size_t n = 0; n < dim; ++n) {
        for (std::size_t m = 0; m < dim; ++m) {
            const double phase = -(energy[n] - energy[m]) * t / p.hbar;
            out.elements(n, m) *= std::polar(1.0, phase);
        }
    }
    return out;
}

double position_expectation(const DensityMatrix& rho, const OscillatorParams& p) {
    const double ell = oscillator_length(p);
    cplx sum = 0.0;
    for (std::size_t n = 0; n + 1 < rho.dim(); ++n) {
        const double x_elem = ell * std::sqrt(0.5 * static_cast<double>(n + 1));
        const auto a = static_cast<Eigen::Index>(n);
        sum += x_elem * (rho.elements(a, a + 1) + rho.elements(a + 1, a));
    }
    return sum.real();
}

std::vector<double> eigenfunctions(double x, std::size_t count, const OscillatorParams& p) {
    std::vector<double> phi(count, 0.0);
    if (count == 0) return phi;
    const double ell = oscillator_length(p);
    const double xi = x / ell;
    phi[0] = std::exp(-0.5 * xi * xi) / (std::pow(pi, 0.25) * std::sqrt(ell));
    if (count > 1) phi[1] = std::sqrt(2.0) * xi * phi[0];
    for (std::size_t n = 1; n + 1 < count; ++n) {
        const double nn = static_cast<double>(n);
        phi[n + 1] = std::sqrt(2.0 / (nn + 1.0)) * xi * phi[n] -
                     std::sqrt(nn / (nn + 1.0)) * phi[n - 1];
    }
    return phi;
}

// ---------------------------------------------------------------- Bohr peaks

bool BohrPeak::within_bin() const noexcept {
    return std::abs(measured - expected) <= bin_width;
}

std::vector<BohrPeak> bohr_peaks(const DensityMatrix& rho0, const OscillatorParams& p,
                                 std::size_t n_max, std::size_t periods,
                                 std::size_t samples_per_period) {
    if (n_max > rho0.dim()) throw ParamError("n_max exceeds the basis dimension");
    if (periods == 0 || samples_per_period < 2) throw ParamError("empty sampling window");

    const std::size_t N = periods * samples_per_period;
    const double dt = p.period() / static_cast<double>(samples_per_period);
    const double bin = 2.0 * pi / (static_cast<double>(N) * dt);

    std::vector<std::vector<cplx>> series(n_max * n_max, std::vector<cplx>(N));
    for (std::size_t j = 0; j < N; ++j) {
        const DensityMatrix rho = evolve_density(rho0, p, static_cast<double>(j) * dt);
        for (std::size_t n = 0; n < n_max; ++n) {
            for (std::size_t m = 0; m < n_max; ++m) {
                series[n * n_max + m][j] =
                    rho.elements(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m));
            }
        }
    }

    Eigen::FFT<double> fft;
    std::vector<BohrPeak> peaks;
    peaks.reserve(n_max * n_max);
    std::vector<cplx> spectrum;
    for (std::size_t n = 0; n < n_max; ++n) {
        for (std::size_t m = 0; m < n_max; ++m) {
            fft.fwd(spectrum, series[n * n_max + m]);
            std::size_t best = 0;
            for (std::size_t k = 1; k < N; ++k) {
                if (std::abs(spectrum[k]) > std::abs(spectrum[best])) best = k;
            }
            const double signed_k = best <= N / 2 ? static_cast<double>(best)
                                                  : static_cast<double>(best) - static_cast<double>(N);
            BohrPeak peak;
            peak.n = n;
            peak.m = m;
            peak.expected = (level_energy(n, p) - level_energy(m, p)) / p.hbar;
            // rho_nm ~ exp(-i w t) puts the peak at -w.
            peak.measured = -signed_k * bin;
            peak.bin_width = bin;
            peaks.push_back(peak);
        }
    }
    return peaks;
}

// ---------------------------------------------------------------- Wigner

double WignerGrid::dx() const noexcept {
    return x_axis.size() > 1 ? x_axis[1] - x_axis[0] : 0.0;
}

double WignerGrid::dp() const noexcept {
    return p_axis.size() > 1 ? p_axis[1] - p_axis[0] : 0.0;
}

double WignerGrid::normalization() const noexcept {
    return values.sum() * dx() * dp();
}

std::vector<double> WignerGrid::position_marginal() const {
    std::vector<double> out(x_axis.size());
    for (std::size_t ix = 0; ix < x_axis.size(); ++ix) {
        out[ix] = values.col(static_cast<Eigen::Index>(ix)).sum() * dp();
    }
    return out;
}

namespace {

std::vector<double> linspace(double a, double b, std::size_t n) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = n == 1 ? a : a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return v;
}

// Rows: sample points, columns: eigenfunction index.
Eigen::MatrixXd eigenfunction_table(const std::vector<double>& xs, std::size_t dim,
                                    const OscillatorParams& p) {
    Eigen::MatrixXd table(xs.size(), dim);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const std::vector<double> phi = eigenfunctions(xs[i], dim, p);
        for (std::size_t n = 0; n < dim; ++n) {
            table(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(n)) = phi[n];
        }
    }
    return table;
}

}  // namespace

WignerGrid wigner_transform(const DensityMatrix& rho, const OscillatorParams& p,
                            const WignerAxes& axes) {
    if (axes.nx < 2 || axes.np < 2) throw GridError("Wigner axes need at least 2 points");
    if (!(axes.x_max > axes.x_min) || !(axes.p_max > axes.p_min)) {
        throw GridError("Wigner axes must have max > min");
    }
    const std::size_t dim = rho.dim();
    const double hbar = p.hbar;

    const double y_max = axes.x_max - axes.x_min;
    const double p_abs = std::max(std::abs(axes.p_min), std::abs(axes.p_max));
    // Need p_abs * dy / hbar <= pi/2 on the y grid.
    const double dy_limit = 0.5 * pi * hbar / p_abs;
    std::size_t ny = axes.ny;
    if (ny == 0) {
        ny = static_cast<std::size_t>(std::ceil(2.0 * y_max / dy_limit)) + 1;
        if (ny % 2 == 0) ++ny;
    }
    if (ny < 3 || ny % 2 == 0) throw GridError("ny must be odd and >= 3");
    const double dy = 2.0 * y_max / static_cast<double>(ny - 1);
    if (dy > dy_limit * (1.0 + 1e-12)) {
        throw GridError("y spacing under-resolves exp(-i p y / hbar): need dy <= pi hbar / (2 p_max)");
    }

    WignerGrid grid;
    grid.hbar = hbar;
    grid.x_axis = linspace(axes.x_min, axes.x_max, axes.nx);
    grid.p_axis = linspace(axes.p_min, axes.p_max, axes.np);
    const std::vector<double> ys = linspace(-y_max, y_max, ny);

    // Containment: trapezoid mass of rho(x, x) on the x axis.
    {
        const Eigen::MatrixXd phi = eigenfunction_table(grid.x_axis, dim, p);
        double mass = 0.0;
        for (std::size_t ix = 0; ix < axes.nx; ++ix) {
            const auto row = phi.row(static_cast<Eigen::Index>(ix));
            const double diag = (row * rho.elements * row.transpose())(0, 0).real();
            const double w = (ix == 0 || ix + 1 == axes.nx) ? 0.5 : 1.0;
            mass += w * diag;
        }
        mass *= grid.dx();
        if (std::abs(1.0 - mass) > 1e-8) {
            throw GridError("x range or spacing does not contain the state (|1 - mass| = " +
                            std::to_string(std::abs(1.0 - mass)) + ")");
        }
    }

    // Fourier kernel exp(-i p y / hbar) with trapezoid weights folded in.
    Eigen::MatrixXcd kernel(axes.np, ny);
    for (std::size_t ip = 0; ip < axes.np; ++ip) {
        for (std::size_t iy = 0; iy < ny; ++iy) {
            const double w = (iy == 0 || iy + 1 == ny) ? 0.5 : 1.0;
            kernel(static_cast<Eigen::Index>(ip), static_cast<Eigen::Index>(iy)) =
                w * dy / (2.0 * pi * hbar) * std::polar(1.0, -grid.p_axis[ip] * ys[iy] / hbar);
        }
    }

    grid.values.resize(static_cast<Eigen::Index>(axes.np), static_cast<Eigen::Index>(axes.nx));
    std::vector<double> plus(ny), minus(ny);
    for (std::size_t ix = 0; ix < axes.nx; ++ix) {
        const double x = grid.x_axis[ix];
        for (std::size_t iy = 0; iy < ny; ++iy) {
            plus[iy] = x + 0.5 * ys[iy];
            minus[iy] = x - 0.5 * ys[iy];
        }
        const Eigen::MatrixXd phi_plus = eigenfunction_table(plus, dim, p);
        const Eigen::MatrixXd phi_minus = eigenfunction_table(minus, dim, p);
        // <x + y/2|rho|x - y/2> for every y
        const Eigen::VectorXcd correlation =
            ((phi_plus.cast<cplx>() * rho.elements).array() * phi_minus.cast<cplx>().array())
                .rowwise()
                .sum();
        const Eigen::VectorXcd column = kernel * correlation;
        grid.values.col(static_cast<Eigen::Index>(ix)) = column.real();
        grid.max_imag = std::max(grid.max_imag, column.imag().cwiseAbs().maxCoeff());
    }
    return grid;
}

// ---------------------------------------------------------------- radial

std::vector<double> radial_levels(const OscillatorParams& p, std::size_t n_levels,
                                  const RadialGrid& grid) {
    if (n_levels == 0) throw ParamError("n_levels must be >= 1");
    if (grid.n_points < n_levels + 2) throw ParamError("radial grid has too few points");
    const double Omega = p.omega();
    const double R = grid.radius > 0.0
                         ? grid.radius
                         : 8.0 * std::sqrt(p.hbar * (2.0 * static_cast<double>(n_levels) + 1.0) /
                                           (p.m * Omega));
    const std::size_t N = grid.n_points;
    const double h = R / (static_cast<double>(N) + 0.5);
    const double K = p.m * Omega * Omega;
    const double c = p.hbar * p.hbar / (2.0 * p.m * h * h);

    // r_i A u = E r_i u with flux form (1/r)(r u')'; the weight r makes it
    // symmetric and S = r^{-1/2} A r^{-1/2} is tridiagonal.
    Eigen::VectorXd diag(N);
    Eigen::VectorXd sub(N - 1);
    for (std::size_t i = 0; i < N; ++i) {
        const double r = (static_cast<double>(i) + 0.5) * h;
        const double r_out = r + 0.5 * h;
        const double r_in = i == 0 ? 0.0 : r - 0.5 * h;
        diag[static_cast<Eigen::Index>(i)] = c * (r_out + r_in) / r + 0.5 * K * r * r;
        if (i + 1 < N) {
            const double r_next = r + h;
            sub[static_cast<Eigen::Index>(i)] = -c * r_out / std::sqrt(r * r_next);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw ConvergenceError("tridiagonal eigensolver failed");

    std::vector<double> levels(n_levels);
    for (std::size_t j = 0; j < n_levels; ++j) levels[j] = es.eigenvalues()[static_cast<Eigen::Index>(j)];
    return levels;
}

std::vector<double> radial_spectrum(const OscillatorParams& p, std::size_t n_levels,
                                    const RadialGrid& grid) {
    const std::vector<double> fine = radial_levels(p, n_levels, grid);
    RadialGrid coarse = grid;
    coarse.n_points = grid.n_points / 2;
    const std::vector<double> rough = radial_levels(p, n_levels, coarse);
    const double top = fine.back();
    if (std::abs(top - rough.back()) > 1e-3 * std::abs(top)) {
        throw ConvergenceError("radial level " + std::to_string(n_levels - 1) +
                               " not converged under grid refinement");
    }
    return fine;
}

double geometric_spectrum(std::size_t n, double alpha, const OscillatorParams& p) {
    return p.hbar * p.omega() * (static_cast<double>(n) + 0.5 * alpha);
}

}  // namespace ddlab::quantum
