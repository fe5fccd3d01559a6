#include "cpcop/normal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cpcop/quadrature.hpp"

namespace cpcop {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kSqrt2Pi = 2.5066282746310002;

// Acklam's inverse normal CDF approximation (relative error < 1.15e-9),
// used as the starting point for one Halley refinement.
double acklam_quantile(double p) {
    static const double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                -2.759285104469687e+02, 1.383577518672690e+02,
                                -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                -1.556989798598866e+02, 6.680131188771972e+01,
                                -1.328068155288572e+01};
    static const double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                -2.400758277161838e+00, -2.549732539343734e+00,
                                4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                2.445134137142996e+00, 3.754408661907416e+00};
    const double p_low = 0.02425;

    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p <= 1.0 - p_low) {
        const double q = p - 0.5;
        const double r = q * q;
        return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
               (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    }
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
}

// Upper-quadrant probability P(X > h, Y > k) following Genz's BVND scheme.
// The arcsine-substituted Drezner-Wesolowsky integral is used for moderate
// correlation, the |r| -> 1 expansion otherwise.
double bvn_upper(double h, double k, double r) {
    constexpr double kTwoPi = 6.283185307179586;
    const auto& gl = gauss_legendre_nodes(20);  // nodes on [-1,1]

    double bvn = 0.0;
    if (std::fabs(r) < 0.925) {
        const double hk = h * k;
        const double hs = (h * h + k * k) / 2.0;
        const double asr = std::asin(r);
        for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
            const double sn = std::sin(asr * (gl.nodes[i] + 1.0) / 2.0);
            bvn += gl.weights[i] * std::exp((sn * hk - hs) / (1.0 - sn * sn));
        }
        return bvn * asr / (2.0 * kTwoPi) + normal_cdf(-h) * normal_cdf(-k);
    }

    double hk = h * k;
    if (r < 0.0) {
        k = -k;
        hk = -hk;
    }
    if (std::fabs(r) < 1.0) {
        const double as = (1.0 - r) * (1.0 + r);
        double a = std::sqrt(as);
        const double bs = (h - k) * (h - k);
        const double c = (4.0 - hk) / 8.0;
        const double d = (12.0 - hk) / 16.0;
        double asr = -(bs / as + hk) / 2.0;
        if (asr > -100.0) {
            bvn = a * std::exp(asr) *
                  (1.0 - c * (bs - as) * (1.0 - d * bs / 5.0) / 3.0 + c * d * as * as / 5.0);
        }
        if (-hk < 100.0) {
            const double b = std::sqrt(bs);
            bvn -= std::exp(-hk / 2.0) * kSqrt2Pi * normal_cdf(-b / a) * b *
                   (1.0 - c * bs * (1.0 - d * bs / 5.0) / 3.0);
        }
        a /= 2.0;
        for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
            const double x = a * (gl.nodes[i] + 1.0);
            const double xs = x * x;
            const double rs = std::sqrt(1.0 - xs);
            asr = -(bs / xs + hk) / 2.0;
            if (asr > -100.0) {
                const double sp = 1.0 + c * xs * (1.0 + d * xs);
                const double ep = std::exp(-hk * (1.0 - rs) / (2.0 * (1.0 + rs))) / rs;
                bvn += a * gl.weights[i] * std::exp(asr) * (ep - sp);
            }
        }
        bvn = -bvn / kTwoPi;
    }
    if (r > 0.0) return bvn + normal_cdf(-std::max(h, k));
    bvn = -bvn;
    if (k > h) bvn += normal_cdf(k) - normal_cdf(h);
    return bvn;
}

}  // namespace

double normal_pdf(double x) noexcept {
    return std::exp(-0.5 * x * x) / kSqrt2Pi;
}

double normal_cdf(double x) noexcept {
    return 0.5 * std::erfc(-x / kSqrt2);
}

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::domain_error("normal_quantile: p must lie in (0,1)");
    }
    double x = acklam_quantile(p);
    // One Halley step against the high-accuracy CDF. Skipped in the far tail
    // where exp(x^2/2) overflows; the start value is already at 1e-9 there.
    if (std::fabs(x) < 37.0) {
        const double e = normal_cdf(x) - p;
        const double u = e * kSqrt2Pi * std::exp(x * x / 2.0);
        x -= u / (1.0 + x * u / 2.0);
    }
    return x;
}

double bivariate_normal_cdf(double x, double y, double rho) {
    if (!(rho >= -1.0 && rho <= 1.0)) {
        throw std::domain_error("bivariate_normal_cdf: rho must lie in [-1,1]");
    }
    if (std::isnan(x) || std::isnan(y)) {
        throw std::domain_error("bivariate_normal_cdf: NaN argument");
    }
    if (rho == 1.0) return normal_cdf(std::min(x, y));
    if (rho == -1.0) return std::max(0.0, normal_cdf(x) + normal_cdf(y) - 1.0);
    if (rho == 0.0) return normal_cdf(x) * normal_cdf(y);
    return bvn_upper(-x, -y, rho);
}

double sample_standard_normal(Rng& rng) {
    return normal_quantile(rng.uniform());
}

}  // namespace cpcop
