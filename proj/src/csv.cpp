#include "cpcop/csv.hpp"

#include <charconv>
#include <stdexcept>

namespace cpcop {

std::string format_sig6(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 6);
    if (res.ec != std::errc()) throw std::runtime_error("format_sig6: conversion failed");
    return std::string(buf, res.ptr);
}

std::string format_fixed(double x, int decimals) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::fixed, decimals);
    if (res.ec != std::errc()) throw std::runtime_error("format_fixed: conversion failed");
    return std::string(buf, res.ptr);
}

void write_points_csv(std::ostream& os, std::span<const UnitPoint> points, char sep) {
    os << 'u' << sep << "v\n";
    for (const UnitPoint& p : points) {
        os << format_sig6(p.u) << sep << format_sig6(p.v) << '\n';
    }
}

void write_cpp_samples_csv(std::ostream& os, std::span<const CppSample> samples, char sep) {
    os << 'x' << sep << 'y' << sep << "k\n";
    for (const CppSample& s : samples) {
        os << format_sig6(s.x) << sep << format_sig6(s.y) << sep << s.jump_count << '\n';
    }
}

void write_grid_csv(std::ostream& os, const DiffGrid& grid, char sep) {
    os << 'i' << sep << 'j' << sep << "c\n";
    for (int i = 0; i < grid.m; ++i) {
        for (int j = 0; j < grid.m; ++j) {
            os << i << sep << j << sep << format_sig6(grid.at(i, j)) << '\n';
        }
    }
}

}  // namespace cpcop
