// Bivariate compound Poisson simulation at unit time: Poisson-many i.i.d.
// jumps drawn from a copula, each optionally shifted by a constant (c,d).
#pragma once

#include <cstdint>
#include <vector>

#include "cpcop/copula.hpp"
#include "cpcop/rng.hpp"

namespace cpcop {

struct JumpSpec {
    CopulaSpec copula = CopulaSpec::independence();
    double shift_x = 0.0;  // c >= 0, applied per jump
    double shift_y = 0.0;  // d >= 0
};

struct CppParams {
    double intensity = 1.0;  // lambda > 0
    JumpSpec jumps;
};

void validate(const CppParams& params);

struct CppSample {
    double x = 0.0;
    double y = 0.0;
    std::uint64_t jump_count = 0;  // (x,y) == (0,0) iff jump_count == 0 (zero shift included)
};

CppSample sample_cpp(const CppParams& params, Rng& rng);

// n i.i.d. samples; chunk k uses stream base.stream + k, so the output is
// bit-identical for a fixed (seed, chunk_size) regardless of thread count,
// and n = 1 coincides with sample_cpp driven by Rng(base).
std::vector<CppSample> cpp_sample_batch(const CppParams& params, std::size_t n,
                                        RngState base, std::size_t chunk_size = 65536);

}  // namespace cpcop
