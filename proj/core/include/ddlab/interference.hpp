#pragma once

#include <iosfwd>
#include <vector>

#include "ddlab/dynamics.hpp"
#include "ddlab/params.hpp"

namespace ddlab::interference {

struct PlanarPoint {
    double X{0.0};
    double Y{0.0};

    friend bool operator==(const PlanarPoint&, const PlanarPoint&) = default;
};

struct PlanarPath {
    std::vector<PlanarPoint> points;

    // Throws ParamError: at least 3 points, all finite.
    void validate() const;
};

// Two paths sharing first and last points, traversed forward along `forward`
// and back along `backward`.
struct PathPair {
    PlanarPath forward;
    PlanarPath backward;

    // Throws EndpointError when the shared endpoints differ by more than
    // endpoint_tolerance (scaled by max(1, |coordinate|)).
    void validate() const;
};

inline constexpr double endpoint_tolerance = 1e-9;

// Closed loop: forward, then backward reversed (shared endpoints once).
std::vector<PlanarPoint> closed_loop(const PathPair& pair);

// Signed shoelace area of closed_loop(pair), counterclockwise positive.
double enclosed_area(const PathPair& pair);

// L^2 = hbar / gamma; DomainError when gamma = 0.
double dissipation_length_sq(const OscillatorParams& p);

// theta = A / L^2 = A gamma / hbar; DomainError when gamma = 0.
double interference_phase(double area, const OscillatorParams& p);

struct StokesResult {
    double line_integral{0.0};  // (1/L^2) closed integral of Y dX, trapezoid rule
    double area_integral{0.0};  // (1/L^2) integral of dY ^ dX = -enclosed_area / L^2
    double discrepancy{0.0};    // |line - area| / max(|line|, |area|), 0 when both vanish
};
StokesResult stokes_check(const PathPair& pair, double L2);

// Forward: (x+, x-)(t) of the trajectory. Backward: the image system with
// damping -gamma run from the trajectory's last state back over the same
// times, then pulled onto the forward start point by an affine correction
// that vanishes at the shared end point.
PathPair loop_from_trajectory(const dynamics::Trajectory& traj);

// Two-column CSV with header `X,Y`.
void write_path_csv(std::ostream& os, const PlanarPath& path);
PlanarPath read_path_csv(std::istream& is);

}  // namespace ddlab::interference
