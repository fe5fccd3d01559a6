#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "cpcop/poisson.hpp"
#include "cpcop/rng.hpp"

using namespace cpcop;

namespace {

double zero_frequency(double lambda, int n, Rng& rng) {
    int zeros = 0;
    for (int i = 0; i < n; ++i) zeros += (sample_poisson(lambda, rng) == 0) ? 1 : 0;
    return static_cast<double>(zeros) / n;
}

}  // namespace

TEST_CASE("probability of no jumps matches e^-lambda") {
    const int n = 1000000;
    Rng rng(2718, 0);
    for (double lambda : {3.0, 7.0}) {
        const double p = std::exp(-lambda);
        const double se = std::sqrt(p * (1.0 - p) / n);
        CHECK(std::fabs(zero_frequency(lambda, n, rng) - p) < 4.0 * se);
    }
}

TEST_CASE("small-lambda inversion matches the pmf head") {
    const int n = 200000;
    Rng rng(11, 0);
    std::vector<int> counts(30, 0);
    const double lambda = 3.0;
    for (int i = 0; i < n; ++i) {
        const std::uint64_t k = sample_poisson(lambda, rng);
        if (k < counts.size()) ++counts[k];
    }
    double pk = std::exp(-lambda);
    for (int k = 0; k < 12; ++k) {
        const double se = std::sqrt(pk * (1.0 - pk) / n);
        CHECK(std::fabs(counts[k] / static_cast<double>(n) - pk) < 4.5 * se + 1e-6);
        pk *= lambda / (k + 1);
    }
}

TEST_CASE("transformed rejection at lambda = 20: mean, variance, pmf spots") {
    const int n = 1000000;
    Rng rng(31415, 0);
    double sum = 0.0, sum2 = 0.0;
    std::vector<int> counts(64, 0);
    for (int i = 0; i < n; ++i) {
        const double k = static_cast<double>(sample_poisson(20.0, rng));
        sum += k;
        sum2 += k * k;
        if (k < counts.size()) ++counts[static_cast<int>(k)];
    }
    const double mean = sum / n;
    CHECK(std::fabs(mean - 20.0) < 4.0 * std::sqrt(20.0 / n));
    const double var = sum2 / n - mean * mean;
    CHECK(std::fabs(var - 20.0) < 0.5);

    double pk = std::exp(-20.0);
    for (int k = 0; k < 50; ++k) {
        if (pk > 1e-5) {
            const double se = std::sqrt(pk * (1.0 - pk) / n);
            CHECK(std::fabs(counts[k] / static_cast<double>(n) - pk) < 5.0 * se + 1e-6);
        }
        pk *= 20.0 / (k + 1);
    }
}

TEST_CASE("both regimes agree across the switch point") {
    const int n = 400000;
    for (double lambda : {9.9, 10.1}) {
        Rng rng(7, static_cast<std::uint64_t>(lambda * 10));
        double sum = 0.0;
        for (int i = 0; i < n; ++i) sum += static_cast<double>(sample_poisson(lambda, rng));
        CHECK(std::fabs(sum / n - lambda) < 4.0 * std::sqrt(lambda / n));
    }
}

TEST_CASE("invalid intensity is rejected") {
    Rng rng(1, 0);
    CHECK_THROWS_AS((void)sample_poisson(0.0, rng), std::domain_error);
    CHECK_THROWS_AS((void)sample_poisson(-2.0, rng), std::domain_error);
    CHECK_THROWS_AS((void)sample_poisson(INFINITY, rng), std::domain_error);
    CHECK_THROWS_AS((void)sample_poisson(NAN, rng), std::domain_error);
}
