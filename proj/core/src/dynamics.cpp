#include "ddlab/dynamics.hpp"

#include <array>
#include <cmath>
#include <string>

#include "ddlab/errors.hpp"
#include "ddlab/linear_flow.hpp"

namespace ddlab::dynamics {

std::string_view method_name(Method m) noexcept {
    return m == Method::RK4 ? "RK4" : "SPLITTING";
}

std::optional<Method> parse_method(std::string_view name) noexcept {
    if (name == "RK4") return Method::RK4;
    if (name == "SPLITTING") return Method::SPLITTING;
    return std::nullopt;
}

void IntegratorSpec::validate() const {
    if (!(std::isfinite(dt) && dt > 0.0)) throw ParamError("dt must be > 0");
    if (!(std::isfinite(t_end) && t_end > 0.0)) throw ParamError("t_end must be > 0");
}

namespace {

SectorState axpy(const SectorState& a, double h, const SectorState& d) noexcept {
    return {a.x + h * d.x, a.y + h * d.y, a.px + h * d.px, a.py + h * d.py};
}

bool within_guard(const SectorState& s) noexcept {
    return is_finite(s) && std::abs(s.x) <= blow_up_limit && std::abs(s.y) <= blow_up_limit &&
           std::abs(s.px) <= blow_up_limit && std::abs(s.py) <= blow_up_limit;
}

}  // namespace

SectorState rk4_step(const SectorState& s, const OscillatorParams& p, double h) noexcept {
    const SectorState k1 = time_derivative(s, p);
    const SectorState k2 = time_derivative(axpy(s, 0.5 * h, k1), p);
    const SectorState k3 = time_derivative(axpy(s, 0.5 * h, k2), p);
    const SectorState k4 = time_derivative(axpy(s, h, k3), p);
    const double w = h / 6.0;
    return {s.x + w * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x),
            s.y + w * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y),
            s.px + w * (k1.px + 2.0 * k2.px + 2.0 * k3.px + k4.px),
            s.py + w * (k1.py + 2.0 * k2.py + 2.0 * k3.py + k4.py)};
}

// Strang splitting H = T + V in the sector chart with
//   T = p_x p_y / m                               (free drift)
//   V = (gamma/2m)(y p_y - x p_x) + m Omega'^2 x y (dilation + linear force)
// where m Omega'^2 = k - gamma^2/(4m). Both sub-flows are solved exactly.
SectorState splitting_step(const SectorState& s, const OscillatorParams& p, double h) noexcept {
    const double Gamma = p.damping_rate();
    const double kk = p.k - p.gamma * p.gamma / (4.0 * p.m);
    auto potential = [&](const SectorState& a, double t) {
        const double decay = std::exp(-Gamma * t);
        const double grow = std::exp(Gamma * t);
        return SectorState{a.x * decay, a.y * grow, grow * (a.px - kk * a.y * t),
                           decay * (a.py - kk * a.x * t)};
    };
    auto drift = [&](const SectorState& a, double t) {
        return SectorState{a.x + t * a.py / p.m, a.y + t * a.px / p.m, a.px, a.py};
    };
    return potential(drift(potential(s, 0.5 * h), h), 0.5 * h);
}

Trajectory simulate(const DoubledState& s0, const OscillatorParams& p,
                    const IntegratorSpec& spec) {
    p.validate();
    spec.validate();
    if (!is_finite(s0)) throw ParamError("initial state must be finite");

    const auto n_steps = static_cast<std::size_t>(std::ceil(spec.t_end / spec.dt - 1e-9));
    const std::size_t n = n_steps == 0 ? 1 : n_steps;
    const double h = spec.t_end / static_cast<double>(n);

    Trajectory traj;
    traj.params = p;
    traj.times.reserve(n + 1);
    traj.states.reserve(n + 1);
    traj.sector_states.reserve(n + 1);

    SectorState s = to_sector(s0);
    traj.times.push_back(0.0);
    traj.sector_states.push_back(s);
    traj.states.push_back(s0);

    for (std::size_t i = 1; i <= n; ++i) {
        s = spec.method == Method::RK4 ? rk4_step(s, p, h) : splitting_step(s, p, h);
        const double t = static_cast<double>(i) * h;
        if (!within_guard(s)) {
            throw StepError("state left the representable range at t = " + std::to_string(t) +
                            " (amplified y-sector grows like exp(gamma t / 2m); reduce t_end)");
        }
        traj.times.push_back(t);
        traj.sector_states.push_back(s);
        traj.states.push_back(to_doubled(s));
    }
    return traj;
}

SectorState exact_flow(const SectorState& s0, double m, double gamma, double k, double t) {
    const Eigen::Matrix2d Ex = propagator(damped_block_generator(m, gamma, k), t);
    const Eigen::Matrix2d Ey = propagator(amplified_block_generator(m, gamma, k), t);
    const Eigen::Vector2d xs = Ex * Eigen::Vector2d(s0.x, s0.py);
    const Eigen::Vector2d ys = Ey * Eigen::Vector2d(s0.y, s0.px);
    return {xs[0], ys[0], ys[1], xs[1]};
}

SectorState exact_solution(const SectorState& s0, const OscillatorParams& p, double t) {
    return exact_flow(s0, p.m, p.gamma, p.k, t);
}

DoubledState exact_solution(const DoubledState& s0, const OscillatorParams& p, double t) {
    return to_doubled(exact_solution(to_sector(s0), p, t));
}

double poisson_bracket(const Observable& f, const Observable& g, const DoubledState& s,
                       double h) {
    const std::array<double, 4> base = as_array(s);
    // Gradients of f and g by central differences.
    std::array<double, 4> df{};
    std::array<double, 4> dg{};
    for (std::size_t i = 0; i < 4; ++i) {
        const double step = h * std::max(1.0, std::abs(base[i]));
        std::array<double, 4> plus = base;
        std::array<double, 4> minus = base;
        plus[i] += step;
        minus[i] -= step;
        const double width = plus[i] - minus[i];
        const DoubledState sp = doubled_from_array(plus);
        const DoubledState sm = doubled_from_array(minus);
        df[i] = (f(sp) - f(sm)) / width;
        dg[i] = (g(sp) - g(sm)) / width;
    }
    // coordinates are indices 0,1; momenta 2,3
    return df[0] * dg[2] - df[2] * dg[0] + df[1] * dg[3] - df[3] * dg[1];
}

}  // namespace ddlab::dynamics
