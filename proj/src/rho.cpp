#include "cpcop/rho.hpp"

#include <cmath>
#include <stdexcept>

#include "cpcop/copula.hpp"

namespace cpcop {

namespace {

// Integrand u^-theta (u^-theta + v^-theta - 1)^(-(1+theta)/theta), written
// in log space when u^-theta or v^-theta would overflow.
double clayton_euv_integrand(double theta, double u, double v) {
    const double a = -theta * std::log(u);
    const double b = -theta * std::log(v);
    const double expo = -(1.0 + theta) / theta;
    if (a < 300.0 && b < 300.0) {
        return std::exp(a) * std::pow(std::exp(a) + std::exp(b) - 1.0, expo);
    }
    const double m = std::max(a, b);
    const double log_s = m + std::log(std::exp(a - m) + std::exp(b - m) - std::exp(-m));
    return std::exp(a + expo * log_s);
}

}  // namespace

double clayton_euv(double theta, double tol) {
    if (!(theta > 0.0) || !std::isfinite(theta)) {
        throw std::domain_error("clayton_euv: theta must be positive");
    }
    if (!(tol > 0.0)) throw std::domain_error("clayton_euv: tol must be positive");
    const double integral = integrate_unit_square(
        [theta](double u, double v) { return clayton_euv_integrand(theta, u, v); },
        {tol, 100000});
    return 0.5 - integral;
}

double euv_via_partial(const std::function<double(double, double)>& dc_du, double tol) {
    if (!(tol > 0.0)) throw std::domain_error("euv_via_partial: tol must be positive");
    const double integral = integrate_unit_square(
        [&dc_du](double u, double v) { return u * dc_du(u, v); }, {tol, 100000});
    return 0.5 - integral;
}

double clayton_rho(double theta, double tol) {
    if (!std::isfinite(theta) || theta < -1.0) {
        throw std::domain_error("clayton_rho: theta must lie in [-1,inf)");
    }
    if (theta == 0.0) return 0.75;  // independence: E(UV) = 1/4
    if (theta == -1.0) return 0.5;  // countermonotone: E(U(1-U)) = 1/6
    if (theta > 0.0) return 3.0 * clayton_euv(theta, tol);
    return 3.0 * euv_via_partial(
                     [theta](double u, double v) { return clayton_dc_du(theta, u, v); }, tol);
}

}  // namespace cpcop
