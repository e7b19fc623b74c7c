#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ddlab/params.hpp"

namespace ddlab::stochastic {

// Ensemble of m x'' + gamma x' + k x = f(t) with <f(t) f(s)> = 2 gamma kB T delta(t - s).
// k = 0 is allowed (free Brownian motion); temperature is kB T.
struct LangevinSpec {
    OscillatorParams params;
    double temperature{1.0};
    double dt{0.01};
    std::size_t n_steps{1000};
    std::size_t n_paths{1000};
    std::uint64_t seed{0};
    double x0{0.0};
    double v0{0.0};
    std::size_t max_lag{4};          // noise autocovariance lags 0..max_lag
    std::size_t n_sample_paths{0};   // x(t) of the first paths, kept verbatim
    std::size_t threads{1};

    // Throws ParamError. Unlike OscillatorParams::validate, k = 0 passes.
    void validate() const;

    friend bool operator==(const LangevinSpec&, const LangevinSpec&) = default;
};

struct Estimate {
    double mean{0.0};
    double se{0.0};  // standard error of the mean over paths
};

struct LangevinResult {
    std::vector<double> times;
    std::vector<double> mean_x2;
    std::vector<double> se_x2;
    std::vector<double> mean_v2;
    std::vector<double> se_v2;
    // Per-lag covariance of the sampled forces, f_j f_{j+lag} averaged over
    // each path then over paths.
    std::vector<Estimate> noise_autocov;
    double noise_variance{0.0};  // 2 gamma kB T / dt
    std::vector<std::vector<double>> sample_paths;
};

// Paths are grouped in fixed blocks of this many; each block gets its own
// partial sums, and blocks are reduced in index order, so the result does
// not depend on the thread count.
inline constexpr std::size_t path_block = 64;

// Exponential Euler-Maruyama with a symmetric kick: exact half-step of the
// deterministic flow, velocity impulse f dt / m with Var f = 2 gamma kB T/dt,
// exact half-step. T = 0 reproduces the exact damped solution.
LangevinResult langevin_ensemble(const LangevinSpec& spec);

// One step of the scheme above for a given force sample.
void langevin_step(double& x, double& v, const OscillatorParams& p, double dt, double force);

// Anti-damped doubled coordinate m y'' - gamma y' = 0:
//   y(t) = y0 + (m v0 / gamma) (e^{gamma t/m} - 1).
// Throws DomainError unless gamma > 0.
double y_equation_check(const OscillatorParams& p, double y0, double v0, double t);

enum class KernelForm { DELTA, SAMPLED };

// Noise kernel N(t - s). DELTA: N0 delta(t - s). SAMPLED: values at lags
// (j - K) * spacing for j = 0..2K, zero beyond.
struct NoiseKernel {
    KernelForm form{KernelForm::DELTA};
    double strength{1.0};
    std::vector<double> samples;
    double spacing{0.0};

    // Throws ParamError: SAMPLED needs an odd, symmetric table and spacing > 0.
    void validate() const;

    // Smallest eigenvalue of the n x n Toeplitz matrix N((i - j) spacing)
    // is >= -tol * max|N|. DELTA kernels pass when strength >= 0.
    bool is_positive_semidefinite(std::size_t n, double tol = 1e-12) const;

    static NoiseKernel delta(double n0);
    static NoiseKernel sampled(std::vector<double> table, double spacing);
};

// Im S = (1/2 hbar) int int N(t - s) y(t) y(s) dt ds by the trapezoid rule on
// a uniformly sampled y (spacing dt). For DELTA this is (N0/2 hbar) int y^2 dt.
// SAMPLED kernels must share the path spacing.
double imaginary_action(std::span<const double> y_path, double dt, const NoiseKernel& kernel,
                        double hbar);

}  // namespace ddlab::stochastic
