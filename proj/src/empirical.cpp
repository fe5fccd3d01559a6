#include "cpcop/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cpcop {

namespace {

// Ranks 1..n over one coordinate, maximal runs of equal values permuted
// uniformly at random. stable_sort keeps the run composition independent of
// strictly increasing transforms of the input.
std::vector<double> rank_coordinate(std::span<const double> values, Rng& rng) {
    const std::size_t n = values.size();
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return values[a] < values[b];
    });

    std::size_t run_begin = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        if (i == n || values[order[i]] != values[order[run_begin]]) {
            // Fisher-Yates over the tied run [run_begin, i).
            for (std::size_t k = i - 1; k > run_begin; --k) {
                const std::size_t j = run_begin + rng.below(k - run_begin + 1);
                std::swap(order[k], order[j]);
            }
            run_begin = i;
        }
    }

    std::vector<double> ranks(n);
    const double denom = static_cast<double>(n) + 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        ranks[order[k]] = static_cast<double>(k + 1) / denom;
    }
    return ranks;
}

}  // namespace

PseudoSample pseudo_observations(std::span<const double> x, std::span<const double> y,
                                 Rng& tie_rng) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("pseudo_observations: coordinate lengths differ");
    }
    if (x.size() < 2) {
        throw std::invalid_argument("pseudo_observations: need at least two samples");
    }
    const auto ru = rank_coordinate(x, tie_rng);
    const auto rv = rank_coordinate(y, tie_rng);
    PseudoSample out;
    out.points.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out.points[i] = {ru[i], rv[i]};
    return out;
}

PseudoSample pseudo_observations(std::span<const CppSample> samples, Rng& tie_rng) {
    std::vector<double> x(samples.size()), y(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        x[i] = samples[i].x;
        y[i] = samples[i].y;
    }
    return pseudo_observations(x, y, tie_rng);
}

void validate(const GridConfig& config) {
    if (config.m < 2) throw std::invalid_argument("GridConfig: m must be >= 2");
    if (config.n < static_cast<std::size_t>(config.m) * config.m) {
        throw std::invalid_argument("GridConfig: n must be >= m^2");
    }
    if (!(config.alpha > 1.0)) throw std::invalid_argument("GridConfig: alpha must be > 1");
}

std::vector<std::uint32_t> grid_counts(std::span<const UnitPoint> points, int m) {
    if (m < 2) throw std::invalid_argument("grid_counts: m must be >= 2");
    std::vector<std::uint32_t> counts(static_cast<std::size_t>(m) * m, 0u);
    const double md = static_cast<double>(m);
    for (const UnitPoint& p : points) {
        if (!in_unit_square(p)) {
            throw std::domain_error("grid_counts: point outside the unit square");
        }
        const int i = std::min(static_cast<int>(p.u * md), m - 1);
        const int j = std::min(static_cast<int>(p.v * md), m - 1);
        ++counts[static_cast<std::size_t>(i) * m + j];
    }
    return counts;
}

DiffGrid density_diff(std::span<const UnitPoint> x, std::span<const UnitPoint> y, int m) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("density_diff: sample sizes differ");
    }
    if (x.empty()) throw std::invalid_argument("density_diff: empty samples");
    const auto cx = grid_counts(x, m);
    const auto cy = grid_counts(y, m);

    DiffGrid grid;
    grid.m = m;
    grid.n = x.size();
    grid.c.resize(cx.size());
    const double scale = static_cast<double>(m) * m / static_cast<double>(x.size());
    for (std::size_t k = 0; k < cx.size(); ++k) {
        const double diff = static_cast<double>(cx[k]) - static_cast<double>(cy[k]);
        grid.c[k] = scale * std::fabs(diff);
    }
    return grid;
}

double total_mass(const DiffGrid& grid) {
    const double sum = std::accumulate(grid.c.begin(), grid.c.end(), 0.0);
    return sum / (static_cast<double>(grid.m) * grid.m);
}

double dot_mass(const DiffGrid& grid, double alpha) {
    if (!(alpha > 1.0)) throw std::invalid_argument("dot_mass: alpha must be > 1");
    double dots = 0.0;
    for (double c : grid.c) dots += std::floor(alpha * c);
    return dots / (static_cast<double>(grid.m) * grid.m * alpha);
}

std::vector<UnitPoint> dot_render(const DiffGrid& grid, double alpha, Rng& rng) {
    if (!(alpha > 1.0)) throw std::invalid_argument("dot_render: alpha must be > 1");
    std::vector<UnitPoint> dots;
    const double md = static_cast<double>(grid.m);
    for (int i = 0; i < grid.m; ++i) {
        for (int j = 0; j < grid.m; ++j) {
            const auto k = static_cast<std::uint64_t>(std::floor(alpha * grid.at(i, j)));
            for (std::uint64_t d = 0; d < k; ++d) {
                dots.push_back({(i + rng.uniform()) / md, (j + rng.uniform()) / md});
            }
        }
    }
    return dots;
}

}  // namespace cpcop
