#include "cpcop/poisson.hpp"

#include <cmath>
#include <stdexcept>

namespace cpcop {

namespace {

std::uint64_t poisson_inversion(double lambda, Rng& rng) {
    const double u = rng.uniform();
    double p = std::exp(-lambda);
    double s = p;
    std::uint64_t k = 0;
    while (u > s) {
        ++k;
        p *= lambda / static_cast<double>(k);
        s += p;
        if (p == 0.0) break;  // tail underflow; u can no longer be reached
    }
    return k;
}

// Transformed rejection with squeeze (Hormann, PTRS). Constants as published.
std::uint64_t poisson_ptrs(double lambda, Rng& rng) {
    const double log_lambda = std::log(lambda);
    const double b = 0.931 + 2.53 * std::sqrt(lambda);
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);

    for (;;) {
        const double u = rng.uniform() - 0.5;
        const double v = rng.uniform();
        const double us = 0.5 - std::fabs(u);
        const double kf = std::floor((2.0 * a / us + b) * u + lambda + 0.43);
        if (us >= 0.07 && v <= v_r) {
            return static_cast<std::uint64_t>(kf);
        }
        if (kf < 0.0 || (us < 0.013 && v > us)) {
            continue;
        }
        const double lhs = std::log(v * inv_alpha / (a / (us * us) + b));
        const double rhs = -lambda + kf * log_lambda - std::lgamma(kf + 1.0);
        if (lhs <= rhs) {
            return static_cast<std::uint64_t>(kf);
        }
    }
}

}  // namespace

std::uint64_t sample_poisson(double lambda, Rng& rng) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw std::domain_error("sample_poisson: lambda must be positive and finite");
    }
    return lambda <= 10.0 ? poisson_inversion(lambda, rng) : poisson_ptrs(lambda, rng);
}

}  // namespace cpcop
