#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "cpcop/copula.hpp"
#include "cpcop/normal.hpp"
#include "cpcop/rng.hpp"

using namespace cpcop;

namespace {

std::vector<CopulaSpec> structural_specs() {
    std::vector<CopulaSpec> specs = {CopulaSpec::independence(), CopulaSpec::lower_bound(),
                                     CopulaSpec::upper_bound()};
    for (double theta : {-1.0, -0.5, 0.5, 1.0, 2.0, 5.0, 50.0}) {
        specs.push_back(CopulaSpec::clayton(theta));
    }
    for (double tau : {-0.5, 0.75, 0.9712}) specs.push_back(CopulaSpec::gaussian(tau));
    return specs;
}

bool is_closed_form(const CopulaSpec& spec) {
    return !std::holds_alternative<GaussianCopula>(spec.value());
}

// Bisection oracle for the Clayton conditional inverse, independent of the
// closed-form inverse under test.
double bisect_conditional(double theta, double u, double z) {
    double lo = 1e-15, hi = 1.0 - 1e-15;
    for (int it = 0; it < 200; ++it) {
        const double mid = (lo + hi) / 2.0;
        if (clayton_conditional_cdf(theta, u, mid) < z) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return (lo + hi) / 2.0;
}

}  // namespace

TEST_CASE("cdf closed-form spot values") {
    CHECK(copula_cdf(CopulaSpec::independence(), {0.5, 0.5}) == 0.25);
    CHECK(copula_cdf(CopulaSpec::clayton(1.0), {0.5, 0.5}) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(copula_cdf(CopulaSpec::lower_bound(), {0.3, 0.4}) == 0.0);
    CHECK(copula_cdf(CopulaSpec::upper_bound(), {0.3, 0.4}) == 0.3);
    // frozen 30-digit references
    CHECK(copula_cdf(CopulaSpec::clayton(5.0), {0.3, 0.7}) ==
          doctest::Approx(0.29928346725570354).epsilon(1e-14));
    CHECK(copula_cdf(CopulaSpec::clayton(-0.5), {0.3, 0.7}) ==
          doctest::Approx(0.14774997091268465).epsilon(1e-14));
    CHECK(copula_cdf(CopulaSpec::clayton(-0.5), {0.1, 0.2}) == 0.0);  // max-branch region
}

TEST_CASE("gaussian copula cdf at the median and frozen references") {
    for (double tau : {-0.5, 0.75, 0.9712}) {
        const double expected = 0.25 + std::asin(tau) / (2.0 * M_PI);
        CHECK(copula_cdf(CopulaSpec::gaussian(tau), {0.5, 0.5}) ==
              doctest::Approx(expected).epsilon(1e-12));
    }
    CHECK(copula_cdf(CopulaSpec::gaussian(0.75), {0.3, 0.6}) ==
          doctest::Approx(0.27998909436).epsilon(1e-9));
}

TEST_CASE("band cdf closed form") {
    CHECK(copula_cdf(CopulaSpec::band(0.3), {0.8, 0.4}) ==
          doctest::Approx(0.125 / 0.49).epsilon(1e-14));
    CHECK(copula_cdf(CopulaSpec::band(0.7), {0.9, 0.95}) ==
          doctest::Approx(0.05125 / 0.09).epsilon(1e-14));
    CHECK(copula_cdf(CopulaSpec::band(0.5), {0.5, 0.5}) == 0.0);
    CHECK(copula_cdf(CopulaSpec::band(0.5), {1.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(copula_cdf(CopulaSpec::band(0.5), {0.2, 1.0}) > 0.2);  // margins are not uniform
}

TEST_CASE("copula boundary conditions on a 101-point grid") {
    for (const auto& spec : structural_specs()) {
        const double tol = is_closed_form(spec) ? 1e-12 : 1e-9;
        for (int k = 0; k <= 100; ++k) {
            const double u = k / 100.0;
            CHECK(copula_cdf(spec, {u, 0.0}) == 0.0);
            CHECK(copula_cdf(spec, {0.0, u}) == 0.0);
            CHECK(std::fabs(copula_cdf(spec, {u, 1.0}) - u) <= tol);
            CHECK(std::fabs(copula_cdf(spec, {1.0, u}) - u) <= tol);
        }
    }
}

TEST_CASE("frechet-hoeffding sandwich and lipschitz bound on the grid") {
    for (const auto& spec : structural_specs()) {
        const double tol = is_closed_form(spec) ? 1e-12 : 1e-9;
        double prev_row = 0.0;
        for (int i = 0; i <= 100; i += 2) {
            for (int j = 0; j <= 100; j += 2) {
                const double u = i / 100.0, v = j / 100.0;
                const double c = copula_cdf(spec, {u, v});
                const double w = std::max(u + v - 1.0, 0.0);
                const double m = std::min(u, v);
                CHECK(c >= w - tol);
                CHECK(c <= m + tol);
                if (j > 0) {
                    const double left = copula_cdf(spec, {u, v - 0.02});
                    CHECK(std::fabs(c - left) <= 0.02 + tol);      // lipschitz in v
                    CHECK(c - left >= -tol);                       // monotone in v
                }
                (void)prev_row;
            }
        }
    }
}

TEST_CASE("rectangle mass is non-negative (2-increasing) on the grid") {
    for (const auto& spec : structural_specs()) {
        const double tol = is_closed_form(spec) ? 1e-12 : 1e-9;
        const int step = 4;
        std::vector<double> prev(101), cur(101);
        for (int j = 0; j <= 100; j += step) prev[j] = copula_cdf(spec, {0.0, j / 100.0});
        for (int i = step; i <= 100; i += step) {
            for (int j = 0; j <= 100; j += step) cur[j] = copula_cdf(spec, {i / 100.0, j / 100.0});
            for (int j = step; j <= 100; j += step) {
                const double mass = cur[j] - cur[j - step] - prev[j] + prev[j - step];
                CHECK(mass >= -tol);
            }
            prev = cur;
        }
    }
}

TEST_CASE("clayton family interpolates between the bounds") {
    for (int k = 0; k <= 100; k += 5) {
        for (int l = 0; l <= 100; l += 5) {
            const UnitPoint p{k / 100.0, l / 100.0};
            // theta -> 0 approaches independence
            CHECK(std::fabs(copula_cdf(CopulaSpec::clayton(1e-6), p) - p.u * p.v) < 1e-4);
            // large theta approaches the upper bound
            CHECK(std::fabs(copula_cdf(CopulaSpec::clayton(1000.0), p) - std::min(p.u, p.v)) <
                  1e-2);
            // theta = -1 equals the lower bound exactly
            CHECK(copula_cdf(CopulaSpec::clayton(-1.0), p) ==
                  copula_cdf(CopulaSpec::lower_bound(), p));
            if (p.u < 1.0 && p.v < 1.0) {
                CHECK(copula_cdf(CopulaSpec::clayton(-1.0), p) ==
                      std::max(p.u + p.v - 1.0, 0.0));
            }
        }
    }
}

TEST_CASE("spec construction enforces the parameter ranges") {
    CHECK(std::holds_alternative<Independence>(CopulaSpec::clayton(0.0).value()));
    CHECK_THROWS_AS(CopulaSpec::clayton(-1.5), std::domain_error);
    CHECK_THROWS_AS(CopulaSpec::clayton(NAN), std::domain_error);
    CHECK_THROWS_AS(CopulaSpec::gaussian(1.5), std::domain_error);
    CHECK_THROWS_AS(CopulaSpec::band(0.0), std::domain_error);
    CHECK_THROWS_AS(CopulaSpec::band(1.0), std::domain_error);
    CHECK_THROWS_AS((void)copula_cdf(CopulaSpec::independence(), {1.2, 0.5}),
                    std::domain_error);
    CHECK_THROWS_AS((void)copula_cdf(CopulaSpec::independence(), {0.5, -0.1}),
                    std::domain_error);
}

TEST_CASE("conditional inverse round-trips through the conditional cdf") {
    CHECK(clayton_conditional_cdf(2.0, 0.3, clayton_conditional_inverse(2.0, 0.3, 0.7)) ==
          doctest::Approx(0.7).epsilon(1e-12));
    CHECK(clayton_conditional_inverse(2.0, 0.3, 0.7) ==
          doctest::Approx(0.50109085942487501).epsilon(1e-13));

    // z -> 1 pushes v to 1
    CHECK(clayton_conditional_inverse(1.0, 0.5, 1.0 - 1e-12) > 1.0 - 1e-9);

    // frozen from the bisection oracle; the oracle itself must agree
    const double pinned = 0.5211309028198394;
    CHECK(clayton_conditional_inverse(5.0, 0.5, 0.5) ==
          doctest::Approx(pinned).epsilon(1e-12));
    CHECK(bisect_conditional(5.0, 0.5, 0.5) == doctest::Approx(pinned).epsilon(1e-10));

    for (double theta : {0.5, 1.0, 2.0, 5.0, 10.0}) {
        for (int iu = 1; iu <= 19; iu += 3) {
            for (int iz = 1; iz <= 19; iz += 3) {
                const double u = iu / 20.0, z = iz / 20.0;
                const double v = clayton_conditional_inverse(theta, u, z);
                REQUIRE(v > 0.0);
                REQUIRE(v < 1.0);
                CHECK(std::fabs(clayton_conditional_cdf(theta, u, v) - z) < 1e-10);
            }
        }
    }

    CHECK_THROWS_AS((void)clayton_conditional_inverse(0.0, 0.5, 0.5), std::domain_error);
    CHECK_THROWS_AS((void)clayton_conditional_inverse(-2.0, 0.5, 0.5), std::domain_error);
    CHECK_THROWS_AS((void)clayton_conditional_inverse(2.0, 0.0, 0.5), std::domain_error);
    CHECK_THROWS_AS((void)clayton_conditional_inverse(2.0, 0.5, 1.0), std::domain_error);
}

TEST_CASE("degenerate samplers hit their supports exactly") {
    Rng rng(31, 0);
    for (int i = 0; i < 200; ++i) {
        const UnitPoint m = sample_copula(CopulaSpec::upper_bound(), rng);
        CHECK(m.u == m.v);
        const UnitPoint w = sample_copula(CopulaSpec::lower_bound(), rng);
        CHECK(w.v == 1.0 - w.u);
        const UnitPoint cm = sample_copula(CopulaSpec::clayton(-1.0), rng);
        CHECK(cm.v == 1.0 - cm.u);
        const UnitPoint b = sample_copula(CopulaSpec::band(0.3), rng);
        CHECK(std::fabs(b.u - b.v) >= 0.3);
    }
    CHECK_THROWS_AS((void)sample_copula(CopulaSpec::clayton(-0.5), rng), std::domain_error);
}

TEST_CASE("clayton sampler has a uniform first margin") {
    Rng rng(1234, 0);
    const int n = 100000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += sample_copula(CopulaSpec::clayton(2.0), rng).u;
    CHECK(std::fabs(sum / n - 0.5) < 3.0 * std::sqrt(1.0 / 12.0 / n));
}

TEST_CASE("gaussian copula sampler recovers tau on the normal scale") {
    const double tau = 0.9712;
    Rng rng(77, 0);
    const int n = 100000;
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        const UnitPoint p = sample_copula(CopulaSpec::gaussian(tau), rng);
        const double x = normal_quantile(p.u), y = normal_quantile(p.v);
        sx += x;
        sy += y;
        sxx += x * x;
        syy += y * y;
        sxy += x * y;
    }
    const double r = (sxy / n - sx / n * sy / n) /
                     std::sqrt((sxx / n - sx / n * sx / n) * (syy / n - sy / n * sy / n));
    const double se = (1.0 - tau * tau) / std::sqrt(static_cast<double>(n));
    CHECK(std::fabs(r - tau) < 3.0 * se);
}

TEST_CASE("empirical cdf of each sampler matches copula_cdf at interior points") {
    const std::vector<CopulaSpec> specs = {
        CopulaSpec::independence(), CopulaSpec::lower_bound(),  CopulaSpec::upper_bound(),
        CopulaSpec::clayton(1.0),   CopulaSpec::gaussian(0.75), CopulaSpec::band(0.5)};
    const int n = 100000;
    int spec_idx = 0;
    for (const auto& spec : specs) {
        std::vector<UnitPoint> pts(n);
        Rng rng(555, 100 + spec_idx++);
        for (auto& p : pts) p = sample_copula(spec, rng);
        for (int a = 1; a <= 5; ++a) {
            for (int b = 1; b <= 5; ++b) {
                const UnitPoint q{a / 6.0, b / 6.0};
                const double c = copula_cdf(spec, q);
                int count = 0;
                for (const auto& p : pts) count += (p.u <= q.u && p.v <= q.v) ? 1 : 0;
                const double emp = static_cast<double>(count) / n;
                const double tol = 4.0 * std::sqrt(c * (1.0 - c) / n) + 1e-9;
                CHECK(std::fabs(emp - c) <= tol);
            }
        }
    }
}

TEST_CASE("copula batch is deterministic and agrees with single draws") {
    const CopulaSpec spec = CopulaSpec::clayton(2.0);
    const RngState base{99, 1000};
    const auto a = copula_sample_batch(spec, 1000, base, 128);
    const auto b = copula_sample_batch(spec, 1000, base, 128);
    REQUIRE(a.size() == 1000);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].u == b[i].u);
        CHECK(a[i].v == b[i].v);
    }
    Rng rng(base);
    const UnitPoint first = sample_copula(spec, rng);
    CHECK(a[0].u == first.u);
    CHECK(a[0].v == first.v);
    CHECK_THROWS_AS((void)copula_sample_batch(spec, 0, base), std::invalid_argument);
}
