// Second-moment bookkeeping for jump distributions: the rho functional
// E[XY]/sqrt(E[X^2] E[Y^2]), the limit covariance matrix it comes from,
// closed-form moments of the band distribution, and deterministic shifts.
#pragma once

#include "cpcop/copula.hpp"

namespace cpcop {

struct JumpMoments {
    double exy = 0.0;  // E[XY]
    double ex2 = 0.0;  // E[X^2]
    double ey2 = 0.0;  // E[Y^2]
    double ex = 0.0;   // E[X]
    double ey = 0.0;   // E[Y]
};

// Cauchy-Schwarz and Jensen consistency, with a little slack for values
// estimated in floating point. Throws std::domain_error.
void validate(const JumpMoments& m);

// E[XY]/sqrt(E[X^2] E[Y^2]); degenerate-margin error when either second
// moment vanishes.
double rho_from_moments(const JumpMoments& m);

// Moments shared by every distribution on [0,1]^2 with uniform margins.
JumpMoments uniform_margin_moments(double exy);

// 2x2 second-moment matrix; only the three distinct entries are stored.
struct CovMatrix {
    double s11 = 0.0;
    double s22 = 0.0;
    double s12 = 0.0;

    // s12/sqrt(s11 s22), clamped into [-1,1]; requires s11*s22 > 0.
    double correlation_ratio() const;
};

CovMatrix limit_sigma(const JumpMoments& m);

// The Gaussian copula identified by the correlation ratio; the ratios +-1
// degenerate to the Frechet-Hoeffding bounds.
CopulaSpec limit_copula(const CovMatrix& sigma);

// Moments of the jump distribution shifted by (c,d) >= 0.
JumpMoments shifted_moments(const JumpMoments& m, double c, double d);

// rho of the uniform band distribution: (1-eps)(3+eps) / (2(eps^2+2)).
double band_phi(double eps);

// Closed-form moments of the band distribution;
// rho_from_moments(band_moments(eps)) == band_phi(eps).
JumpMoments band_moments(double eps);

}  // namespace cpcop
