// Rank-based empirical copulas and the grid estimator of the density
// difference between two samples on the unit square.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cpcop/copula.hpp"
#include "cpcop/cpp_sim.hpp"
#include "cpcop/rng.hpp"

namespace cpcop {

// Rank-transformed sample: each coordinate is a permutation of
// {k/(n+1) : k = 1..n}.
struct PseudoSample {
    std::vector<UnitPoint> points;
    std::size_t size() const noexcept { return points.size(); }
};

// Coordinate-wise ranks divided by n+1. Ties are broken by a uniform random
// permutation among the tied values, so the atom a compound Poisson sample
// carries at the origin spreads over the lowest ranks instead of collapsing
// onto one point. Requires n >= 2.
PseudoSample pseudo_observations(std::span<const double> x, std::span<const double> y,
                                 Rng& tie_rng);
PseudoSample pseudo_observations(std::span<const CppSample> samples, Rng& tie_rng);

struct GridConfig {
    int m = 30;           // grid resolution, >= 2
    std::size_t n = 0;    // sample size, >= m^2
    double alpha = 20.0;  // dot-rendering scale, > 1
};

void validate(const GridConfig& config);

// Counts per half-open cell [i/m,(i+1)/m) x [j/m,(j+1)/m); a coordinate equal
// to 1 is assigned to the last cell. Row-major, i indexes the u axis.
std::vector<std::uint32_t> grid_counts(std::span<const UnitPoint> points, int m);

// Provenance carried along with a difference grid.
struct GridMeta {
    double lambda = 0.0;
    std::string spec;
    std::uint64_t seed = 0;
};

// Cell-wise density difference estimates c_ij = (m^2/n)|#X_ij - #Y_ij|.
struct DiffGrid {
    int m = 0;
    std::size_t n = 0;
    std::vector<double> c;  // m*m, row-major
    GridMeta meta;

    double at(int i, int j) const { return c[static_cast<std::size_t>(i) * m + j]; }
};

DiffGrid density_diff(std::span<const UnitPoint> x, std::span<const UnitPoint> y, int m);

// (1/m^2) sum c_ij: the total mass of the estimated difference density.
double total_mass(const DiffGrid& grid);

// floor(alpha*c_ij) summed and rescaled, i.e. the mass actually represented
// by a dot rendering ("dots / (m^2 alpha)"). The truncation drops cells whose
// difference is below 1/alpha, which suppresses most of the Monte Carlo
// noise floor of total_mass.
double dot_mass(const DiffGrid& grid, double alpha);

// floor(alpha*c_ij) points uniform in each cell, for scatter plots.
std::vector<UnitPoint> dot_render(const DiffGrid& grid, double alpha, Rng& rng);

}  // namespace cpcop
