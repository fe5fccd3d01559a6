// Standard normal CDF, quantile, and bivariate normal CDF.
#pragma once

#include "cpcop/rng.hpp"

namespace cpcop {

double normal_pdf(double x) noexcept;

// Phi(x), accurate to a few ulp over the full double range.
double normal_cdf(double x) noexcept;

// Phi^-1(p) for p in (0,1). Acklam's rational approximation refined by one
// Halley step; |Phi(result) - p| is at machine-precision level.
// Throws std::domain_error for p outside (0,1).
double normal_quantile(double p);

// P(X <= x, Y <= y) for a standard bivariate normal pair with correlation
// rho in [-1,1]. Gauss-Legendre scheme after Drezner/Wesolowsky and Genz.
double bivariate_normal_cdf(double x, double y, double rho);

// One N(0,1) draw by inverse transform; consumes exactly one uniform.
double sample_standard_normal(Rng& rng);

}  // namespace cpcop
