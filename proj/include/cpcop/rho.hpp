// E(UV) functionals computed by adaptive quadrature, and the map from the
// Clayton parameter to the correlation of the Gaussian limit copula.
#pragma once

#include <functional>

#include "cpcop/quadrature.hpp"

namespace cpcop {

// E(UV) under the Clayton copula via
//   E(UV) = 1/2 - int int u^-theta (u^-theta + v^-theta - 1)^(-(1+theta)/theta).
// Requires theta > 0. Integration to absolute tolerance tol; throws
// QuadratureError on budget exhaustion.
double clayton_euv(double theta, double tol = 1e-7);

// E(UV) = 1/2 - int int u dC/du(u,v) for an arbitrary copula given through
// its first partial derivative in u.
double euv_via_partial(const std::function<double(double, double)>& dc_du,
                       double tol = 1e-7);

// rho of the Clayton family on theta in [-1, inf): exact 1/2 at theta = -1,
// exact 3/4 at theta = 0, otherwise 3 E_theta(UV). Negative theta goes
// through the branch-aware partial derivative.
double clayton_rho(double theta, double tol = 1e-7);

}  // namespace cpcop
