#include "cpcop/moments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cpcop {

namespace {
constexpr double kRelSlack = 1e-9;

bool all_finite(const JumpMoments& m) {
    return std::isfinite(m.exy) && std::isfinite(m.ex2) && std::isfinite(m.ey2) &&
           std::isfinite(m.ex) && std::isfinite(m.ey);
}
}  // namespace

void validate(const JumpMoments& m) {
    if (!all_finite(m)) throw std::domain_error("JumpMoments: non-finite entry");
    if (m.ex2 < 0.0 || m.ey2 < 0.0) {
        throw std::domain_error("JumpMoments: second moments must be non-negative");
    }
    const double cs = m.ex2 * m.ey2;
    if (m.exy * m.exy > cs * (1.0 + kRelSlack) + 1e-300) {
        throw std::domain_error("JumpMoments: Cauchy-Schwarz violated (exy^2 > ex2*ey2)");
    }
    if (m.ex * m.ex > m.ex2 * (1.0 + kRelSlack) + 1e-300 ||
        m.ey * m.ey > m.ey2 * (1.0 + kRelSlack) + 1e-300) {
        throw std::domain_error("JumpMoments: Jensen violated (mean^2 > second moment)");
    }
}

double rho_from_moments(const JumpMoments& m) {
    validate(m);
    const double denom = m.ex2 * m.ey2;
    if (denom <= 0.0) {
        throw std::domain_error("rho_from_moments: degenerate margin (ex2*ey2 == 0)");
    }
    return std::clamp(m.exy / std::sqrt(denom), -1.0, 1.0);
}

JumpMoments uniform_margin_moments(double exy) {
    JumpMoments m{exy, 1.0 / 3.0, 1.0 / 3.0, 0.5, 0.5};
    validate(m);
    return m;
}

double CovMatrix::correlation_ratio() const {
    if (!(s11 * s22 > 0.0)) {
        throw std::domain_error("CovMatrix: correlation ratio needs s11*s22 > 0");
    }
    if (s12 * s12 > s11 * s22 * (1.0 + kRelSlack)) {
        throw std::domain_error("CovMatrix: not positive-semidefinite (s12^2 > s11*s22)");
    }
    return std::clamp(s12 / std::sqrt(s11 * s22), -1.0, 1.0);
}

CovMatrix limit_sigma(const JumpMoments& m) {
    validate(m);
    return {m.ex2, m.ey2, m.exy};
}

CopulaSpec limit_copula(const CovMatrix& sigma) {
    const double a = sigma.correlation_ratio();
    if (a == 1.0) return CopulaSpec::upper_bound();
    if (a == -1.0) return CopulaSpec::lower_bound();
    return CopulaSpec::gaussian(a);
}

JumpMoments shifted_moments(const JumpMoments& m, double c, double d) {
    validate(m);
    if (!(c >= 0.0) || !(d >= 0.0) || !std::isfinite(c) || !std::isfinite(d)) {
        throw std::domain_error("shifted_moments: shifts must be finite and non-negative");
    }
    JumpMoments out;
    out.ex = m.ex + c;
    out.ey = m.ey + d;
    out.ex2 = m.ex2 + 2.0 * c * m.ex + c * c;
    out.ey2 = m.ey2 + 2.0 * d * m.ey + d * d;
    out.exy = m.exy + c * m.ey + d * m.ex + c * d;
    return out;
}

double band_phi(double eps) {
    if (!(eps > 0.0 && eps < 1.0)) {
        throw std::domain_error("band_phi: eps must lie in (0,1)");
    }
    return (1.0 - eps) * (3.0 + eps) / (2.0 * (eps * eps + 2.0));
}

JumpMoments band_moments(double eps) {
    if (!(eps > 0.0 && eps < 1.0)) {
        throw std::domain_error("band_moments: eps must lie in (0,1)");
    }
    JumpMoments m;
    m.ex2 = eps * eps / 6.0 + 1.0 / 3.0;
    m.ey2 = m.ex2;
    m.exy = (1.0 - eps) * (3.0 + eps) / 12.0;
    m.ex = 0.5;  // the band is symmetric under (u,v) -> (1-u,1-v)
    m.ey = 0.5;
    return m;
}

}  // namespace cpcop
