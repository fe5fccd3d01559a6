// Locale-independent CSV/TSV output helpers.
#pragma once

#include <ostream>
#include <span>
#include <string>

#include "cpcop/copula.hpp"
#include "cpcop/cpp_sim.hpp"
#include "cpcop/empirical.hpp"

namespace cpcop {

// Shortest-faithful rendering with 6 significant digits (std::to_chars,
// general format, '.' separator).
std::string format_sig6(double x);

// Fixed-point rendering with the given number of decimals.
std::string format_fixed(double x, int decimals);

void write_points_csv(std::ostream& os, std::span<const UnitPoint> points, char sep = ',');
void write_cpp_samples_csv(std::ostream& os, std::span<const CppSample> samples, char sep = ',');
void write_grid_csv(std::ostream& os, const DiffGrid& grid, char sep = ',');

}  // namespace cpcop
