#include "ddlab/stochastic.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include <Eigen/Dense>

#include "ddlab/errors.hpp"
#include "ddlab/linear_flow.hpp"
#include "ddlab/philox.hpp"

namespace ddlab::stochastic {

void LangevinSpec::validate() const {
    if (!(params.m > 0.0)) throw ParamError("m must be > 0");
    if (!(params.gamma >= 0.0)) throw ParamError("gamma must be ≥ 0");
    if (!(params.k >= 0.0)) throw ParamError("k must be ≥ 0");
    if (!(params.hbar > 0.0)) throw ParamError("hbar must be > 0");
    if (!(params.kB > 0.0)) throw ParamError("kB must be > 0");
    if (!(temperature >= 0.0)) throw ParamError("temperature must be ≥ 0");
    if (!(dt > 0.0)) throw ParamError("dt must be > 0");
    if (n_paths < 1) throw ParamError("n_paths must be ≥ 1");
    if (n_steps < 1) throw ParamError("n_steps must be ≥ 1");
    if (max_lag >= n_steps) throw ParamError("max_lag must be < n_steps");
    if (n_sample_paths > n_paths) throw ParamError("n_sample_paths must be ≤ n_paths");
    if (threads < 1) throw ParamError("threads must be ≥ 1");
    if (!std::isfinite(x0) || !std::isfinite(v0)) throw ParamError("initial state must be finite");
}

namespace {

Eigen::Matrix2d drift_generator(const OscillatorParams& p) {
    Eigen::Matrix2d a;
    a << 0.0, 1.0, -p.k / p.m, -p.gamma / p.m;
    return a;
}

struct BlockSums {
    std::vector<double> x2, x4, v2, v4;
    std::vector<double> lag, lag_sq;
};

struct Stepper {
    Eigen::Matrix2d half;
    double impulse;  // velocity change per unit force

    void step(double& x, double& v, double force) const {
        const double x1 = half(0, 0) * x + half(0, 1) * v;
        const double v1 = half(1, 0) * x + half(1, 1) * v + impulse * force;
        x = half(0, 0) * x1 + half(0, 1) * v1;
        v = half(1, 0) * x1 + half(1, 1) * v1;
    }
};

}  // namespace

void langevin_step(double& x, double& v, const OscillatorParams& p, double dt, double force) {
    const Stepper s{propagator(drift_generator(p), 0.5 * dt), dt / p.m};
    s.step(x, v, force);
}

LangevinResult langevin_ensemble(const LangevinSpec& spec) {
    spec.validate();
    const OscillatorParams& p = spec.params;
    const std::size_t n_t = spec.n_steps + 1;
    const std::size_t n_lag = spec.max_lag + 1;
    const double noise_var = 2.0 * p.gamma * spec.temperature / spec.dt;
    const double noise_sd = std::sqrt(noise_var);
    const Stepper stepper{propagator(drift_generator(p), 0.5 * spec.dt), spec.dt / p.m};

    LangevinResult out;
    out.noise_variance = noise_var;
    out.sample_paths.assign(spec.n_sample_paths, std::vector<double>(n_t));

    const std::size_t n_blocks = (spec.n_paths + path_block - 1) / path_block;
    std::vector<BlockSums> blocks(n_blocks);

    auto run_block = [&](std::size_t b) {
        BlockSums& s = blocks[b];
        s.x2.assign(n_t, 0.0);
        s.x4.assign(n_t, 0.0);
        s.v2.assign(n_t, 0.0);
        s.v4.assign(n_t, 0.0);
        s.lag.assign(n_lag, 0.0);
        s.lag_sq.assign(n_lag, 0.0);
        std::vector<double> forces(spec.n_steps);
        const std::size_t first = b * path_block;
        const std::size_t last = std::min(spec.n_paths, first + path_block);
        for (std::size_t path = first; path < last; ++path) {
            PhiloxStream rng(spec.seed, path);
            for (double& f : forces) f = noise_sd * rng.normal();

            double x = spec.x0;
            double v = spec.v0;
            std::vector<double>* keep = path < spec.n_sample_paths ? &out.sample_paths[path] : nullptr;
            for (std::size_t j = 0; j < n_t; ++j) {
                if (j > 0) stepper.step(x, v, forces[j - 1]);
                const double xx = x * x;
                const double vv = v * v;
                s.x2[j] += xx;
                s.x4[j] += xx * xx;
                s.v2[j] += vv;
                s.v4[j] += vv * vv;
                if (keep) (*keep)[j] = x;
            }
            for (std::size_t l = 0; l < n_lag; ++l) {
                double acc = 0.0;
                const std::size_t count = spec.n_steps - l;
                for (std::size_t j = 0; j < count; ++j) acc += forces[j] * forces[j + l];
                const double mean = acc / static_cast<double>(count);
                s.lag[l] += mean;
                s.lag_sq[l] += mean * mean;
            }
        }
    };

    const std::size_t n_workers = std::min(spec.threads, n_blocks);
    if (n_workers <= 1) {
        for (std::size_t b = 0; b < n_blocks; ++b) run_block(b);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(n_workers);
        for (std::size_t w = 0; w < n_workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t b = next++; b < n_blocks; b = next++) run_block(b);
            });
        }
    }

    // Reduction in block order.
    std::vector<double> x2(n_t, 0.0), x4(n_t, 0.0), v2(n_t, 0.0), v4(n_t, 0.0);
    std::vector<double> lag(n_lag, 0.0), lag_sq(n_lag, 0.0);
    for (const BlockSums& s : blocks) {
        for (std::size_t j = 0; j < n_t; ++j) {
            x2[j] += s.x2[j];
            x4[j] += s.x4[j];
            v2[j] += s.v2[j];
            v4[j] += s.v4[j];
        }
        for (std::size_t l = 0; l < n_lag; ++l) {
            lag[l] += s.lag[l];
            lag_sq[l] += s.lag_sq[l];
        }
    }

    const double n = static_cast<double>(spec.n_paths);
    auto standard_error = [n](double sum, double sum_sq) {
        if (n < 2.0) return 0.0;
        const double mean = sum / n;
        const double var = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
        return std::sqrt(var / n);
    };

    out.times.resize(n_t);
    out.mean_x2.resize(n_t);
    out.se_x2.resize(n_t);
    out.mean_v2.resize(n_t);
    out.se_v2.resize(n_t);
    for (std::size_t j = 0; j < n_t; ++j) {
        out.times[j] = static_cast<double>(j) * spec.dt;
        out.mean_x2[j] = x2[j] / n;
        out.se_x2[j] = standard_error(x2[j], x4[j]);
        out.mean_v2[j] = v2[j] / n;
        out.se_v2[j] = standard_error(v2[j], v4[j]);
    }
    out.noise_autocov.resize(n_lag);
    for (std::size_t l = 0; l < n_lag; ++l) {
        out.noise_autocov[l] = {lag[l] / n, standard_error(lag[l], lag_sq[l])};
    }
    return out;
}

double y_equation_check(const OscillatorParams& p, double y0, double v0, double t) {
    if (!(p.gamma > 0.0)) throw DomainError("y equation needs gamma > 0");
    if (!(p.m > 0.0)) throw ParamError("m must be > 0");
    return y0 + (p.m * v0 / p.gamma) * std::expm1(p.gamma * t / p.m);
}

// ---------------------------------------------------------------- kernels

NoiseKernel NoiseKernel::delta(double n0) {
    NoiseKernel k;
    k.form = KernelForm::DELTA;
    k.strength = n0;
    return k;
}

NoiseKernel NoiseKernel::sampled(std::vector<double> table, double spacing) {
    NoiseKernel k;
    k.form = KernelForm::SAMPLED;
    k.samples = std::move(table);
    k.spacing = spacing;
    k.validate();
    return k;
}

void NoiseKernel::validate() const {
    if (form == KernelForm::DELTA) {
        if (!std::isfinite(strength)) throw ParamError("kernel strength must be finite");
        return;
    }
    if (samples.size() % 2 == 0) throw ParamError("sampled kernel needs an odd table (lags -K..K)");
    if (!(spacing > 0.0)) throw ParamError("kernel spacing must be > 0");
    double scale = 0.0;
    for (double s : samples) {
        if (!std::isfinite(s)) throw ParamError("kernel samples must be finite");
        scale = std::max(scale, std::abs(s));
    }
    const std::size_t n = samples.size();
    for (std::size_t j = 0; j < n / 2; ++j) {
        if (std::abs(samples[j] - samples[n - 1 - j]) > 1e-12 * scale) {
            throw ParamError("sampled kernel must satisfy N(-t) = N(t)");
        }
    }
}

bool NoiseKernel::is_positive_semidefinite(std::size_t n, double tol) const {
    validate();
    if (form == KernelForm::DELTA) return strength >= 0.0;
    const auto half = static_cast<std::ptrdiff_t>(samples.size() / 2);
    Eigen::MatrixXd toeplitz = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    double scale = 0.0;
    for (double s : samples) scale = std::max(scale, std::abs(s));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::ptrdiff_t d = static_cast<std::ptrdiff_t>(i) - static_cast<std::ptrdiff_t>(j);
            if (std::abs(d) <= half) {
                toeplitz(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                    samples[static_cast<std::size_t>(d + half)];
            }
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(toeplitz, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -tol * scale;
}

double imaginary_action(std::span<const double> y_path, double dt, const NoiseKernel& kernel,
                        double hbar) {
    kernel.validate();
    if (!(hbar > 0.0)) throw ParamError("hbar must be > 0");
    if (!(dt > 0.0)) throw ParamError("path spacing must be > 0");
    const std::size_t n = y_path.size();
    if (n < 2) throw ParamError("path needs at least 2 samples");
    auto weight = [n](std::size_t i) { return (i == 0 || i + 1 == n) ? 0.5 : 1.0; };

    double quad = 0.0;
    if (kernel.form == KernelForm::DELTA) {
        for (std::size_t i = 0; i < n; ++i) quad += weight(i) * y_path[i] * y_path[i];
        quad *= kernel.strength * dt;
    } else {
        if (std::abs(kernel.spacing - dt) > 1e-12 * dt) {
            throw ParamError("sampled kernel spacing must equal the path spacing");
        }
        const auto half = static_cast<std::ptrdiff_t>(kernel.samples.size() / 2);
        for (std::size_t i = 0; i < n; ++i) {
            double row = 0.0;
            const auto ii = static_cast<std::ptrdiff_t>(i);
            const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, ii - half);
            const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(n) - 1, ii + half);
            for (std::ptrdiff_t j = lo; j <= hi; ++j) {
                const auto ju = static_cast<std::size_t>(j);
                row += kernel.samples[static_cast<std::size_t>(ii - j + half)] * weight(ju) * y_path[ju];
            }
            quad += weight(i) * y_path[i] * row;
        }
        quad *= dt * dt;
    }
    return quad / (2.0 * hbar);
}

}  // namespace ddlab::stochastic
