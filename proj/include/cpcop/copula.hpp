// Copula families: closed-form CDFs and exact samplers for the independence
// copula, the Frechet-Hoeffding bounds, the Clayton family, Gaussian copulas,
// and the uniform band distribution on {|u-v| >= eps}.
#pragma once

#include <string>
#include <variant>
#include <vector>

#include "cpcop/rng.hpp"

namespace cpcop {

struct UnitPoint {
    double u = 0.0;
    double v = 0.0;
};

bool in_unit_square(UnitPoint p) noexcept;

struct Clayton {
    double theta;  // [-1, inf) \ {0}
};
struct GaussianCopula {
    double tau;  // [-1, 1]
};
struct Independence {};
struct LowerBound {};
struct UpperBound {};
struct Band {
    double eps;  // (0, 1); note: a distribution on [0,1]^2, not a copula
};

class CopulaSpec {
public:
    using Variant =
        std::variant<Independence, LowerBound, UpperBound, Clayton, GaussianCopula, Band>;

    // theta = 0 maps to the independence variant; theta < -1 is rejected.
    static CopulaSpec clayton(double theta);
    static CopulaSpec gaussian(double tau);
    static CopulaSpec independence();
    static CopulaSpec lower_bound();
    static CopulaSpec upper_bound();
    static CopulaSpec band(double eps);

    const Variant& value() const noexcept { return v_; }
    std::string name() const;

private:
    explicit CopulaSpec(Variant v) : v_(std::move(v)) {}
    Variant v_;
};

// Joint CDF of the spec's distribution at p. For the copula variants this
// satisfies C(u,0) = C(0,v) = 0, C(u,1) = u, C(1,v) = v; the band variant is
// a CDF on the unit square but has non-uniform margins.
// Throws std::domain_error if p lies outside the unit square.
double copula_cdf(const CopulaSpec& spec, UnitPoint p);

// Clayton CDF, overflow-safe for large theta; max{.,0} branch for theta < 0.
double clayton_cdf(double theta, double u, double v);

// dC_theta/du with the max-branch handled; valid on theta in [-1,inf) \ {0}.
double clayton_dc_du(double theta, double u, double v);

// Conditional CDF F_{theta,u}(v) = P(V <= v | U = u) = dC_theta/du, theta > 0.
double clayton_conditional_cdf(double theta, double u, double v);

// Inverse of the conditional CDF: the v in (0,1) with F_{theta,u}(v) = z.
// Requires theta > 0 and u, z strictly inside (0,1).
double clayton_conditional_inverse(double theta, double u, double z);

// One exact draw from the spec's distribution. Clayton sampling covers
// theta > 0 (conditional inverse) and theta = -1 (countermonotone);
// theta in (-1,0) is not supported. The band sampler rejects until
// |u - v| >= eps and reports a failure after 10^6 attempts, which can only
// be reached with a broken generator.
UnitPoint sample_copula(const CopulaSpec& spec, Rng& rng);

// n draws, chunked over parallel streams: chunk k of size chunk_size uses
// stream base.stream + k. Output is identical for any thread count.
std::vector<UnitPoint> copula_sample_batch(const CopulaSpec& spec, std::size_t n,
                                           RngState base, std::size_t chunk_size = 65536);

}  // namespace cpcop
