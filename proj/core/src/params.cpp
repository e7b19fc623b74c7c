#include "ddlab/params.hpp"

#include <cmath>
#include <numbers>

#include "ddlab/errors.hpp"

namespace ddlab {

namespace {

void require(bool ok, const char* message) {
    if (!ok) throw ParamError(message);
}

}  // namespace

void OscillatorParams::validate() const {
    require(std::isfinite(m) && m > 0.0, "m must be > 0");
    require(std::isfinite(gamma) && gamma >= 0.0, "gamma must be ≥ 0");
    require(std::isfinite(k) && k > 0.0, "k must be > 0");
    require(std::isfinite(hbar) && hbar > 0.0, "hbar must be > 0");
    require(std::isfinite(kB) && kB > 0.0, "kB must be > 0");
}

bool OscillatorParams::underdamped() const noexcept {
    return k > gamma * gamma / (4.0 * m);
}

double OscillatorParams::omega() const {
    const double Gamma = damping_rate();
    const double w2 = k / m - Gamma * Gamma;
    if (!(w2 > 0.0)) {
        throw DomainError("Omega requires the underdamped regime k > gamma^2/(4m)");
    }
    return std::sqrt(w2);
}

double OscillatorParams::period() const {
    return 2.0 * std::numbers::pi / omega();
}

OscillatorParams make_params(double m, double gamma, double k, double hbar, double kB) {
    OscillatorParams p{m, gamma, k, hbar, kB};
    p.validate();
    return p;
}

}  // namespace ddlab
