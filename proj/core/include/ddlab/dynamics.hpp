#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "ddlab/params.hpp"
#include "ddlab/phase_space.hpp"

namespace ddlab::dynamics {

enum class Method { RK4, SPLITTING };

std::string_view method_name(Method m) noexcept;
std::optional<Method> parse_method(std::string_view name) noexcept;

struct IntegratorSpec {
    Method method{Method::RK4};
    double dt{0.01};
    double t_end{1.0};

    // Throws ParamError unless dt > 0 and t_end > 0.
    void validate() const;

    friend bool operator==(const IntegratorSpec&, const IntegratorSpec&) = default;
};

// Time-stamped solution of Hamilton's equations. `sector_states` is the chart
// the integrator actually advances; `states` is the same data in the canonical
// chart. Energies and beables along long trajectories should be read from
// `sector_states` (see hamiltonian(SectorState)).
struct Trajectory {
    OscillatorParams params;
    std::vector<double> times;
    std::vector<DoubledState> states;
    std::vector<SectorState> sector_states;

    std::size_t size() const noexcept { return times.size(); }
};

// Fields larger than this abort the run with StepError.
inline constexpr double blow_up_limit = 1e300;

// Integrates from t = 0 to spec.t_end with ceil(t_end/dt) equal steps (the
// step is shortened slightly so the last sample lands on t_end).
Trajectory simulate(const DoubledState& s0, const OscillatorParams& p,
                    const IntegratorSpec& spec);

// Exact flow of the linear doubled system (closed-form 2x2 block exponentials).
DoubledState exact_solution(const DoubledState& s0, const OscillatorParams& p, double t);
SectorState exact_solution(const SectorState& s0, const OscillatorParams& p, double t);

// Exact flow with a signed damping coefficient; gamma < 0 evolves the
// time-reversed image system. Only m and k are taken from params.
SectorState exact_flow(const SectorState& s0, double m, double gamma, double k, double t);

// Single steps in the sector chart.
SectorState rk4_step(const SectorState& s, const OscillatorParams& p, double h) noexcept;
SectorState splitting_step(const SectorState& s, const OscillatorParams& p, double h) noexcept;

using Observable = std::function<double(const DoubledState&)>;

// Central-difference Poisson bracket in the canonical chart,
//   {f, g} = sum_i (df/dx_i dg/dp_i - df/dp_i dg/dx_i),
// with per-coordinate step h * max(1, |coordinate|).
double poisson_bracket(const Observable& f, const Observable& g, const DoubledState& s,
                       double h = 1e-5);

}  // namespace ddlab::dynamics
