#include "cpcop/copula.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cpcop/normal.hpp"
#include "cpcop/parallel.hpp"

namespace cpcop {

namespace {

constexpr int kBandMaxIter = 1000000;

// Exponents -theta*log(u) beyond this are routed through log-sum-exp to
// avoid overflow of u^-theta.
constexpr double kDirectExpLimit = 300.0;

void check_unit(double x, const char* what) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::domain_error(std::string(what) + " outside [0,1]");
    }
}

// log(u^-theta + v^-theta - 1) for theta > 0, stable for any magnitude.
double log_clayton_sum(double theta, double u, double v) {
    const double a = -theta * std::log(u);
    const double b = -theta * std::log(v);
    const double m = std::max(a, b);
    return m + std::log(std::exp(a - m) + std::exp(b - m) - std::exp(-m));
}

// Half of the band CDF: area of {x <= a, y <= b, y <= x - eps}.
double band_wedge(double eps, double a, double b) {
    const double s = std::max(0.0, a - eps);
    if (s <= b) return s * s / 2.0;
    return b * s - b * b / 2.0;
}

struct CdfVisitor {
    double u, v;

    double operator()(const Independence&) const { return u * v; }
    double operator()(const LowerBound&) const {
        if (u == 1.0) return v;  // avoids cancellation in u+v-1 on the boundary
        if (v == 1.0) return u;
        return std::max(u + v - 1.0, 0.0);
    }
    double operator()(const UpperBound&) const { return std::min(u, v); }
    double operator()(const Clayton& c) const { return clayton_cdf(c.theta, u, v); }
    double operator()(const GaussianCopula& g) const {
        if (u == 0.0 || v == 0.0) return 0.0;
        if (u == 1.0) return v;
        if (v == 1.0) return u;
        if (g.tau == 0.0) return u * v;
        if (g.tau == 1.0) return std::min(u, v);
        if (g.tau == -1.0) return std::max(u + v - 1.0, 0.0);
        return bivariate_normal_cdf(normal_quantile(u), normal_quantile(v), g.tau);
    }
    double operator()(const Band& b) const {
        const double scale = (1.0 - b.eps) * (1.0 - b.eps);
        return (band_wedge(b.eps, u, v) + band_wedge(b.eps, v, u)) / scale;
    }
};

struct SampleVisitor {
    Rng& rng;

    UnitPoint operator()(const Independence&) const {
        const double u = rng.uniform();
        return {u, rng.uniform()};
    }
    UnitPoint operator()(const LowerBound&) const {
        const double u = rng.uniform();
        return {u, 1.0 - u};
    }
    UnitPoint operator()(const UpperBound&) const {
        const double u = rng.uniform();
        return {u, u};
    }
    UnitPoint operator()(const Clayton& c) const {
        if (c.theta == -1.0) {
            const double u = rng.uniform();
            return {u, 1.0 - u};
        }
        if (c.theta < 0.0) {
            throw std::domain_error("sample_copula: Clayton sampling requires theta > 0 or -1");
        }
        const double u = rng.uniform();
        const double z = rng.uniform();
        return {u, clayton_conditional_inverse(c.theta, u, z)};
    }
    UnitPoint operator()(const GaussianCopula& g) const {
        const double x = sample_standard_normal(rng);
        const double y = sample_standard_normal(rng);
        const double w = g.tau * x + std::sqrt(1.0 - g.tau * g.tau) * y;
        return {normal_cdf(x), normal_cdf(w)};
    }
    UnitPoint operator()(const Band& b) const {
        for (int i = 0; i < kBandMaxIter; ++i) {
            const double u = rng.uniform();
            const double v = rng.uniform();
            if (std::fabs(u - v) >= b.eps) return {u, v};
        }
        throw std::runtime_error(
            "sample_copula: band rejection did not accept within 1e6 draws; "
            "the generator looks broken");
    }
};

}  // namespace

bool in_unit_square(UnitPoint p) noexcept {
    return p.u >= 0.0 && p.u <= 1.0 && p.v >= 0.0 && p.v <= 1.0;
}

CopulaSpec CopulaSpec::clayton(double theta) {
    if (!std::isfinite(theta) || theta < -1.0) {
        throw std::domain_error("CopulaSpec: Clayton theta must lie in [-1,inf)");
    }
    if (theta == 0.0) return CopulaSpec(Variant(Independence{}));
    return CopulaSpec(Variant(Clayton{theta}));
}

CopulaSpec CopulaSpec::gaussian(double tau) {
    if (!(tau >= -1.0 && tau <= 1.0)) {
        throw std::domain_error("CopulaSpec: Gaussian tau must lie in [-1,1]");
    }
    return CopulaSpec(Variant(GaussianCopula{tau}));
}

CopulaSpec CopulaSpec::independence() { return CopulaSpec(Variant(Independence{})); }
CopulaSpec CopulaSpec::lower_bound() { return CopulaSpec(Variant(LowerBound{})); }
CopulaSpec CopulaSpec::upper_bound() { return CopulaSpec(Variant(UpperBound{})); }

CopulaSpec CopulaSpec::band(double eps) {
    if (!(eps > 0.0 && eps < 1.0)) {
        throw std::domain_error("CopulaSpec: band eps must lie in (0,1)");
    }
    return CopulaSpec(Variant(Band{eps}));
}

std::string CopulaSpec::name() const {
    struct Namer {
        std::string operator()(const Independence&) const { return "independence"; }
        std::string operator()(const LowerBound&) const { return "lower_bound"; }
        std::string operator()(const UpperBound&) const { return "upper_bound"; }
        std::string operator()(const Clayton& c) const {
            return "clayton(theta=" + std::to_string(c.theta) + ")";
        }
        std::string operator()(const GaussianCopula& g) const {
            return "gaussian(tau=" + std::to_string(g.tau) + ")";
        }
        std::string operator()(const Band& b) const {
            return "band(eps=" + std::to_string(b.eps) + ")";
        }
    };
    return std::visit(Namer{}, v_);
}

double copula_cdf(const CopulaSpec& spec, UnitPoint p) {
    if (!in_unit_square(p)) {
        throw std::domain_error("copula_cdf: point outside the unit square");
    }
    return std::visit(CdfVisitor{p.u, p.v}, spec.value());
}

double clayton_cdf(double theta, double u, double v) {
    if (!std::isfinite(theta) || theta < -1.0 || theta == 0.0) {
        throw std::domain_error("clayton_cdf: theta must lie in [-1,inf) \\ {0}");
    }
    check_unit(u, "clayton_cdf: u");
    check_unit(v, "clayton_cdf: v");
    if (u == 0.0 || v == 0.0) return 0.0;
    if (u == 1.0) return v;
    if (v == 1.0) return u;

    if (theta < 0.0) {
        const double s = std::pow(u, -theta) + std::pow(v, -theta) - 1.0;
        if (s <= 0.0) return 0.0;
        return std::pow(s, -1.0 / theta);
    }
    const double a = -theta * std::log(u);
    const double b = -theta * std::log(v);
    if (a < kDirectExpLimit && b < kDirectExpLimit) {
        return std::pow(std::exp(a) + std::exp(b) - 1.0, -1.0 / theta);
    }
    return std::exp(-log_clayton_sum(theta, u, v) / theta);
}

double clayton_dc_du(double theta, double u, double v) {
    if (!std::isfinite(theta) || theta < -1.0 || theta == 0.0) {
        throw std::domain_error("clayton_dc_du: theta must lie in [-1,inf) \\ {0}");
    }
    if (!(u > 0.0 && u < 1.0)) {
        throw std::domain_error("clayton_dc_du: u must lie in (0,1)");
    }
    check_unit(v, "clayton_dc_du: v");
    if (v == 0.0) return 0.0;
    if (v == 1.0) return 1.0;

    const double expo = -(1.0 + theta) / theta;
    if (theta < 0.0) {
        const double s = std::pow(u, -theta) + std::pow(v, -theta) - 1.0;
        if (s <= 0.0) return 0.0;
        return std::pow(u, -theta - 1.0) * std::pow(s, expo);
    }
    const double a = -theta * std::log(u);
    const double b = -theta * std::log(v);
    if (a < kDirectExpLimit && b < kDirectExpLimit) {
        return std::pow(u, -theta - 1.0) * std::pow(std::exp(a) + std::exp(b) - 1.0, expo);
    }
    const double log_s = log_clayton_sum(theta, u, v);
    return std::exp((-theta - 1.0) * std::log(u) + expo * log_s);
}

double clayton_conditional_cdf(double theta, double u, double v) {
    if (!(theta > 0.0)) {
        throw std::domain_error("clayton_conditional_cdf: theta must be positive");
    }
    return clayton_dc_du(theta, u, v);
}

double clayton_conditional_inverse(double theta, double u, double z) {
    if (!(theta > 0.0) || !std::isfinite(theta)) {
        throw std::domain_error("clayton_conditional_inverse: theta must be positive");
    }
    if (!(u > 0.0 && u < 1.0) || !(z > 0.0 && z < 1.0)) {
        throw std::domain_error("clayton_conditional_inverse: u and z must lie in (0,1)");
    }
    // v = (1 + u^-theta (z^(-theta/(1+theta)) - 1))^(-1/theta)
    const double g = std::expm1(-theta / (1.0 + theta) * std::log(z));  // z^(..) - 1 >= 0
    const double log_u_pow = -theta * std::log(u);
    if (log_u_pow < kDirectExpLimit) {
        return std::exp(-std::log1p(std::exp(log_u_pow) * g) / theta);
    }
    // u^-theta overflows; the leading 1 is negligible at this magnitude.
    return std::exp(-(log_u_pow + std::log(g)) / theta);
}

UnitPoint sample_copula(const CopulaSpec& spec, Rng& rng) {
    return std::visit(SampleVisitor{rng}, spec.value());
}

std::vector<UnitPoint> copula_sample_batch(const CopulaSpec& spec, std::size_t n,
                                           RngState base, std::size_t chunk_size) {
    if (n == 0) throw std::invalid_argument("copula_sample_batch: n must be >= 1");
    std::vector<UnitPoint> out(n);
    parallel_chunks(n, chunk_size, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
        Rng rng(base.seed, base.stream + chunk);
        for (std::size_t i = begin; i < end; ++i) out[i] = sample_copula(spec, rng);
    });
    return out;
}

}  // namespace cpcop
