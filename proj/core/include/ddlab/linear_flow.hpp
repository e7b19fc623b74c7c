#pragma once

#include <Eigen/Dense>

namespace ddlab {

// exp(B t) for a real 2x2 generator, in closed form via Cayley-Hamilton:
//   exp(Bt) = e^{mu t} [c(t) I + s(t) (B - mu I)],  mu = tr(B)/2
// with (c, s) = (cos wt, sin(wt)/w), (cosh wt, sinh(wt)/w) or (1, t) depending
// on the sign of the discriminant mu^2 - det(B).
Eigen::Matrix2d propagator(const Eigen::Matrix2d& generator, double t);

// Generators of the two decoupled sector blocks, with a signed damping
// coefficient (gamma < 0 gives the time-reversed image):
//   (x, p_y):  d/dt [x, p_y] = [[-g/2m, 1/m], [g^2/4m - k, -g/2m]] [x, p_y]
//   (y, p_x):  d/dt [y, p_x] = [[ g/2m, 1/m], [g^2/4m - k,  g/2m]] [y, p_x]
Eigen::Matrix2d damped_block_generator(double m, double gamma, double k);
Eigen::Matrix2d amplified_block_generator(double m, double gamma, double k);

}  // namespace ddlab
